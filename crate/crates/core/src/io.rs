//! Text formats: edge lists, points files, and the JSON error plumbing shared
//! by the realizer and profile wire forms.
//!
//! Edge list: the first non-comment line is the vertex count `n`, followed
//! by one `u v` line per arc `u -> v`. Anything after `#` on a line is
//! ignored.

use thiserror::Error;

use crate::digraph::{Digraph, DigraphError};
use crate::profiles::ProfileError;
use crate::realizer::RealizerError;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error(transparent)]
    Realizer(#[from] RealizerError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_field<T: std::str::FromStr>(line: usize, field: &str) -> Result<T, ParseError> {
    field.parse().map_err(|_| ParseError::Line {
        line,
        msg: format!("cannot parse {field:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| ParseError::Format("edge list is empty".into()))?;
    if header.len() != 1 {
        return Err(ParseError::Line {
            line,
            msg: "expected the vertex count alone".into(),
        });
    }
    let n: usize = parse_field(line, header[0])?;
    let mut arcs = Vec::new();
    for (line, fields) in lines {
        if fields.len() != 2 {
            return Err(ParseError::Line {
                line,
                msg: "expected `u v`".into(),
            });
        }
        arcs.push((parse_field(line, fields[0])?, parse_field(line, fields[1])?));
    }
    Ok(Digraph::build(n, arcs)?)
}

pub fn format_edge_list(d: &Digraph) -> String {
    let mut s = format!("{}\n", d.n());
    for &(u, v) in d.arcs() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// One `x y` integer pair per line.
pub fn parse_points(text: &str) -> Result<Vec<(i64, i64)>, ParseError> {
    content_lines(text)
        .map(|(line, fields)| {
            if fields.len() != 2 {
                return Err(ParseError::Line {
                    line,
                    msg: "expected `x y`".into(),
                });
            }
            Ok((parse_field(line, fields[0])?, parse_field(line, fields[1])?))
        })
        .collect()
}
