//! Longest chains and antichains of planar points under the componentwise
//! order `(x1, y1) <= (x2, y2)` iff `x1 <= x2` and `y1 <= y2`.

use serde::Serialize;
use thiserror::Error;

pub type Point = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("no points given")]
    EmptyInput,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Chain,
    Antichain,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: Kind,
    pub points: Vec<Point>,
}

pub fn leq(p: Point, q: Point) -> bool {
    p.0 <= q.0 && p.1 <= q.1
}

pub fn comparable(p: Point, q: Point) -> bool {
    leq(p, q) || leq(q, p)
}

pub fn is_chain(points: &[Point]) -> bool {
    points
        .iter()
        .enumerate()
        .all(|(i, &p)| points[i + 1..].iter().all(|&q| comparable(p, q)))
}

pub fn is_antichain(points: &[Point]) -> bool {
    points
        .iter()
        .enumerate()
        .all(|(i, &p)| points[i + 1..].iter().all(|&q| !comparable(p, q)))
}

/// Longest path in the DAG on `points` (pre-sorted) where `j` may follow
/// `i < j` when `step(points[i], points[j])`.
fn longest(points: &[Point], step: impl Fn(Point, Point) -> bool) -> Vec<Point> {
    let m = points.len();
    let mut len = vec![1usize; m];
    let mut prev = vec![usize::MAX; m];
    for j in 0..m {
        for i in 0..j {
            if step(points[i], points[j]) && len[i] + 1 > len[j] {
                len[j] = len[i] + 1;
                prev[j] = i;
            }
        }
    }
    let mut end = (0..m)
        .max_by_key(|&j| (len[j], std::cmp::Reverse(j)))
        .expect("nonempty");
    let mut out = vec![points[end]];
    while prev[end] != usize::MAX {
        end = prev[end];
        out.push(points[end]);
    }
    out.reverse();
    out
}

pub fn longest_chain(points: &[Point]) -> Vec<Point> {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    longest(&sorted, leq)
}

/// Pairwise incomparable means strictly increasing `x` with strictly
/// decreasing `y` once sorted by `x`.
pub fn longest_antichain(points: &[Point]) -> Vec<Point> {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    longest(&sorted, |p, q| p.0 < q.0 && p.1 > q.1)
}

/// The longer of a longest chain and a longest antichain (the chain on a
/// tie). Among `n^2 + 1` points one of them has at least `n + 1` elements.
pub fn es_chain_or_antichain(points: &[Point]) -> Result<Witness, ChainError> {
    if points.is_empty() {
        return Err(ChainError::EmptyInput);
    }
    let chain = longest_chain(points);
    let antichain = longest_antichain(points);
    Ok(if chain.len() >= antichain.len() {
        Witness {
            kind: Kind::Chain,
            points: chain,
        }
    } else {
        Witness {
            kind: Kind::Antichain,
            points: antichain,
        }
    })
}
