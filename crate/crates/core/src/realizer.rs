//! The weak majority relation on integer coordinate vectors and realizers of
//! digraphs under it.
//!
//! For vectors `x` and `y` of the same length, `x` beats `y` when `x` is
//! strictly larger in more coordinates than `y` is; coordinates where the
//! two agree count for neither side. A realizer assigns a vector to every
//! vertex so that `u -> v` is an arc exactly when the vector of `u` beats the
//! vector of `v`.
//!
//! Coordinates are integers: the relation only looks at the per-coordinate
//! order, so any real-valued realizer can be rank-compressed without changing
//! a single comparison (see [`Realizer::normalize`]).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{Digraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizerError {
    #[error("vector has {found} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("realizer has no vector for vertex {0}")]
    MissingVertex(Vertex),
    #[error("cannot pad a {from}-dimensional realizer down to {to} dimensions")]
    BadDimension { from: usize, to: usize },
}

/// Coordinate counts between two vectors: `ahead` is where the first is
/// strictly larger, `behind` where it is strictly smaller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Tally {
    pub ahead: usize,
    pub behind: usize,
    pub equal: usize,
}

impl Tally {
    pub fn margin(&self) -> i64 {
        self.ahead as i64 - self.behind as i64
    }
}

pub fn tally(x: &[i64], y: &[i64]) -> Result<Tally, RealizerError> {
    if x.len() != y.len() {
        return Err(RealizerError::DimensionMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    let mut t = Tally::default();
    for (a, b) in x.iter().zip(y) {
        match a.cmp(b) {
            std::cmp::Ordering::Greater => t.ahead += 1,
            std::cmp::Ordering::Less => t.behind += 1,
            std::cmp::Ordering::Equal => t.equal += 1,
        }
    }
    Ok(t)
}

/// `|{i : x_i > y_i}| - |{i : y_i > x_i}|`. Positive means `x` beats `y`,
/// zero means the two are incomparable.
pub fn margin(x: &[i64], y: &[i64]) -> Result<i64, RealizerError> {
    tally(x, y).map(|t| t.margin())
}

/// Indices where `x` is strictly larger than `y`.
pub fn ahead_set(x: &[i64], y: &[i64]) -> Vec<usize> {
    x.iter()
        .zip(y)
        .enumerate()
        .filter(|(_, (a, b))| a > b)
        .map(|(i, _)| i)
        .collect()
}

/// A map from vertices `0..len` to `dim`-dimensional integer vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Realizer {
    dim: usize,
    vectors: Vec<Vec<i64>>,
}

impl fmt::Debug for Realizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Realizer(d={}, {:?})", self.dim, self.vectors)
    }
}

impl Realizer {
    pub fn new(dim: usize, vectors: Vec<Vec<i64>>) -> Result<Self, RealizerError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(RealizerError::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        Ok(Realizer { dim, vectors })
    }

    /// The `d = 0` realizer: every vertex maps to the single point of the
    /// zero-dimensional space.
    pub fn zero_dimensional(n: usize) -> Self {
        Realizer {
            dim: 0,
            vectors: vec![Vec::new(); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector(&self, v: Vertex) -> &[i64] {
        &self.vectors[v]
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vec<i64>> {
        self.vectors
    }

    /// Margin between the vectors of `u` and `v`.
    pub fn margin(&self, u: Vertex, v: Vertex) -> i64 {
        margin(&self.vectors[u], &self.vectors[v]).expect("realizer vectors share a length")
    }

    /// Keeps only the listed vertices, relabeled in the order given.
    pub fn restrict(&self, subset: &[Vertex]) -> Result<Self, RealizerError> {
        let mut vectors = Vec::with_capacity(subset.len());
        for &v in subset {
            vectors.push(
                self.vectors
                    .get(v)
                    .ok_or(RealizerError::MissingVertex(v))?
                    .clone(),
            );
        }
        Ok(Realizer {
            dim: self.dim,
            vectors,
        })
    }

    /// Replaces each coordinate by its rank `1..=k` among the `k` distinct
    /// values of that coordinate. Every per-coordinate comparison, and hence
    /// every margin, is unchanged.
    pub fn normalize(&self) -> Realizer {
        let mut vectors = self.vectors.clone();
        for c in 0..self.dim {
            let mut column: Vec<i64> = self.vectors.iter().map(|v| v[c]).collect();
            column.sort_unstable();
            column.dedup();
            for v in vectors.iter_mut() {
                v[c] = column.binary_search(&v[c]).expect("value is in its column") as i64 + 1;
            }
        }
        Realizer {
            dim: self.dim,
            vectors,
        }
    }

    /// Pads every vector with zeros up to `dim` coordinates. Appended
    /// coordinates are equal across all vertices, so no margin changes.
    pub fn extend_dims(&self, dim: usize) -> Result<Realizer, RealizerError> {
        if dim < self.dim {
            return Err(RealizerError::BadDimension {
                from: self.dim,
                to: dim,
            });
        }
        let vectors = self
            .vectors
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.resize(dim, 0);
                w
            })
            .collect();
        Ok(Realizer { dim, vectors })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RealizerJson::from(self)).expect("realizer serializes")
    }

    pub fn from_json(s: &str) -> Result<Realizer, crate::io::ParseError> {
        let raw: RealizerJson = serde_json::from_str(s)?;
        raw.try_into()
    }
}

/// Wire form: `{"d": <int>, "vectors": {"<vertex>": [<ints>], ...}}` with the
/// keys in numeric order.
#[derive(Serialize, Deserialize)]
struct RealizerJson {
    d: usize,
    vectors: BTreeMap<usize, Vec<i64>>,
}

impl From<&Realizer> for RealizerJson {
    fn from(f: &Realizer) -> Self {
        RealizerJson {
            d: f.dim,
            vectors: f.vectors.iter().cloned().enumerate().collect(),
        }
    }
}

impl TryFrom<RealizerJson> for Realizer {
    type Error = crate::io::ParseError;

    fn try_from(raw: RealizerJson) -> Result<Self, Self::Error> {
        let mut vectors = Vec::with_capacity(raw.vectors.len());
        for (expected, (key, v)) in raw.vectors.into_iter().enumerate() {
            if key != expected {
                return Err(crate::io::ParseError::Format(format!(
                    "realizer vertices must be 0..n without gaps; vertex {expected} is missing"
                )));
            }
            vectors.push(v);
        }
        Ok(Realizer::new(raw.d, vectors)?)
    }
}

/// How a pair of vertices is related in the target digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    /// `u -> v`; the margin of `u` over `v` must be positive.
    Arc,
    /// `v -> u`; the margin must be negative.
    ReverseArc,
    /// No arc either way; the margin must be zero.
    NonAdjacent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    pub expected: Expected,
    /// Observed margin of `u` over `v`.
    pub margin: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `f` realizes `d`: for each pair `u < v` the sign of the
/// margin of `u` over `v` must match the arc between them.
pub fn verify(d: &Digraph, f: &Realizer) -> Result<VerifyReport, RealizerError> {
    if f.len() < d.n() {
        return Err(RealizerError::MissingVertex(f.len()));
    }
    let mut report = VerifyReport::default();
    for u in 0..d.n() {
        for v in u + 1..d.n() {
            let m = f.margin(u, v);
            let expected = match d.relation(u, v) {
                1 => Expected::Arc,
                -1 => Expected::ReverseArc,
                _ => Expected::NonAdjacent,
            };
            let ok = match expected {
                Expected::Arc => m > 0,
                Expected::ReverseArc => m < 0,
                Expected::NonAdjacent => m == 0,
            };
            if !ok {
                report.violations.push(Violation {
                    u,
                    v,
                    expected,
                    margin: m,
                });
            }
        }
    }
    Ok(report)
}

/// Shorthand for `verify(..).valid()`, treating shape errors as invalid.
pub fn realizes(d: &Digraph, f: &Realizer) -> bool {
    verify(d, f).map(|r| r.valid()).unwrap_or(false)
}
