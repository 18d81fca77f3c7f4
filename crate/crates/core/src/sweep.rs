//! Exhaustive dimension sweeps over all small digraphs.

use serde::Serialize;
use thiserror::Error;

use crate::digraph::{all_labeled, Digraph};
use crate::solver::{dimension, Dimension};

pub const MAX_LABELED: usize = 4;
pub const MAX_DEDUP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("sweeps cover n <= {MAX_LABELED}, or n <= {MAX_DEDUP} with dedup; got n = {0}")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub code: String,
    pub n: usize,
    pub arc_count: usize,
    pub dimension: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub transitive: bool,
    pub induced_two_path: bool,
    /// Condensation is a nonempty acyclic tournament.
    pub tournament_core: bool,
}

impl SweepRow {
    pub fn for_digraph(d: &Digraph, code: String, max_d: usize, budget: u64) -> SweepRow {
        let r = dimension(d, max_d, budget);
        let (dim, lower, upper) = match r.dimension {
            Dimension::Exact(k) => (Some(k), k, k),
            Dimension::Unknown { lower, upper } => (None, lower, upper),
        };
        SweepRow {
            code,
            n: d.n(),
            arc_count: d.arc_count(),
            dimension: dim,
            lower,
            upper,
            transitive: d.is_transitive(),
            induced_two_path: d.has_induced_two_path(),
            tournament_core: !d.is_empty() && d.condense().condensed.is_acyclic_tournament(),
        }
    }

    pub const CSV_HEADER: &'static str =
        "code,n,arcs,dimension,lower,upper,transitive,induced_two_path,tournament_core";

    pub fn to_csv(&self) -> String {
        let dim = self.dimension.map(|k| k.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.code,
            self.n,
            self.arc_count,
            dim,
            self.lower,
            self.upper,
            self.transitive,
            self.induced_two_path,
            self.tournament_core
        )
    }
}

/// Rows in increasing order of pair code. With `dedup`, one row per
/// isomorphism class keyed by its canonical code.
pub fn sweep(
    n: usize,
    max_d: usize,
    dedup: bool,
    budget: u64,
) -> Result<Vec<SweepRow>, SweepError> {
    if n > if dedup { MAX_DEDUP } else { MAX_LABELED } {
        return Err(SweepError::TooLarge(n));
    }
    let mut graphs: Vec<(String, Digraph)> = if dedup {
        let mut seen = std::collections::BTreeMap::new();
        for d in all_labeled(n) {
            seen.entry(d.canonical_code()).or_insert(d);
        }
        seen.into_keys()
            .map(|code| {
                let d = Digraph::from_pair_code(n, &code).expect("canonical codes decode");
                (code, d)
            })
            .collect()
    } else {
        all_labeled(n).map(|d| (d.pair_code(), d)).collect()
    };
    graphs.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(graphs
        .into_iter()
        .map(|(code, d)| SweepRow::for_digraph(&d, code, max_d, budget))
        .collect())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub unknown: usize,
    /// Codes of rows that break one of the structural facts below.
    pub counterexamples: Vec<String>,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks every row: dimension at most 2 forces transitivity and no induced
/// two-path, dimension 1 exactly when the condensation is a nonempty
/// acyclic tournament, dimension 0 exactly when there are no arcs, and
/// known dimensions never exceed `2 * arcs`.
pub fn summarize(rows: &[SweepRow]) -> Summary {
    let mut s = Summary {
        rows: rows.len(),
        ..Default::default()
    };
    for r in rows {
        let Some(k) = r.dimension else {
            s.unknown += 1;
            continue;
        };
        let good = (k > 2 || (r.transitive && !r.induced_two_path))
            && ((k == 1) == r.tournament_core)
            && ((k == 0) == (r.arc_count == 0))
            && k <= 2 * r.arc_count;
        if !good {
            s.counterexamples.push(r.code.clone());
        }
    }
    s
}
