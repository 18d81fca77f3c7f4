//! Explicit realizers. Every function here returns a [`Realizer`] that passes
//! [`verify`] against its target digraph; the public entry points check this
//! before returning.

use thiserror::Error;

use crate::cycle_matrix::{CycleMatrix, CycleMatrixError};
use crate::digraph::{generate, Condensation, Digraph, DigraphError, Family, Vertex};
use crate::realizer::{realizes, verify, Realizer, RealizerError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("digraph has arcs")]
    NotEmpty,
    #[error("digraph is not a tournament")]
    NotTournament,
    #[error("tournament has a directed cycle")]
    HasCycle,
    #[error("base realizer does not realize its digraph ({0} violations)")]
    BadBase(usize),
    #[error("vertices {0} and {1} are already adjacent")]
    NotIncomparable(Vertex, Vertex),
    #[error("arc ({0}, {1}) would break simplicity")]
    WouldBreakSimplicity(Vertex, Vertex),
    #[error("a disjoint union needs at least two parts")]
    TooFewParts,
    #[error("realizer does not match the condensation: {0}")]
    ClassMismatch(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error(transparent)]
    Realizer(#[from] RealizerError),
    #[error(transparent)]
    CycleMatrix(#[from] CycleMatrixError),
}

fn check_base(d: &Digraph, f: &Realizer) -> Result<(), ConstructionError> {
    let report = verify(d, f)?;
    if !report.valid() {
        return Err(ConstructionError::BadBase(report.violations.len()));
    }
    Ok(())
}

/// The zero-dimensional realizer of an arcless digraph.
pub fn realize_empty(d: &Digraph) -> Result<Realizer, ConstructionError> {
    if !d.is_empty() {
        return Err(ConstructionError::NotEmpty);
    }
    Ok(Realizer::zero_dimensional(d.n()))
}

/// One dimension for an acyclic tournament: each vertex gets its position
/// from the bottom of the order, which is one more than its out-degree.
pub fn realize_acyclic_tournament(d: &Digraph) -> Result<Realizer, ConstructionError> {
    if !d.is_tournament() {
        return Err(ConstructionError::NotTournament);
    }
    if !d.is_acyclic_tournament() {
        return Err(ConstructionError::HasCycle);
    }
    let vectors = (0..d.n())
        .map(|v| vec![d.out_degree(v) as i64 + 1])
        .collect();
    Ok(Realizer::new(1, vectors)?)
}

/// The two-dimensional realizer of a digraph whose only arc is `u -> v`.
fn single_arc_realizer(n: usize, u: Vertex, v: Vertex) -> Realizer {
    let vectors = (0..n)
        .map(|w| match w {
            _ if w == u => vec![2, 3],
            _ if w == v => vec![1, 2],
            _ => vec![3, 1],
        })
        .collect();
    Realizer::new(2, vectors).expect("all vectors are two-dimensional")
}

/// Extends a realizer of `base` to one of `base + (u, v)` using two more
/// coordinates: the first ranks `u` over `v` over everyone else, the second
/// puts everyone else over `u` and `v`, so only the new pair changes.
///
/// When `base` has no arcs the result is the dedicated two-dimensional
/// single-arc realizer.
pub fn add_arc_realizer(
    base: &Digraph,
    f: &Realizer,
    (u, v): (Vertex, Vertex),
) -> Result<Realizer, ConstructionError> {
    check_base(base, f)?;
    if u == v {
        return Err(ConstructionError::WouldBreakSimplicity(u, v));
    }
    for w in [u, v] {
        if w >= base.n() {
            return Err(DigraphError::VertexOutOfRange {
                vertex: w,
                n: base.n(),
            }
            .into());
        }
    }
    if base.adjacent(u, v) {
        return Err(ConstructionError::NotIncomparable(u, v));
    }
    if base.is_empty() {
        return Ok(single_arc_realizer(base.n(), u, v));
    }
    let d = f.dim();
    let vectors = (0..base.n())
        .map(|w| {
            let mut g = f.vector(w).to_vec();
            let extra = match w {
                _ if w == u => [2, 0],
                _ if w == v => [1, 0],
                _ => [0, 1],
            };
            g.extend(extra);
            g
        })
        .collect();
    Ok(Realizer::new(d + 2, vectors)?)
}

/// Realizer of the vertex-disjoint union of the parts, labeled in input
/// order, in dimension `2 * floor((d_max + 1) / 2)`.
///
/// A part of maximum dimension goes first and keeps its vectors. Each
/// following part is shifted so that in the first half of the coordinates it
/// lies strictly above the previous part and in the second half strictly
/// below it. Any two vertices from different parts then split the
/// coordinates evenly, while shifts are constant within a part so its own
/// comparisons are untouched.
pub fn union_realizer(parts: &[(Digraph, Realizer)]) -> Result<Realizer, ConstructionError> {
    if parts.len() < 2 {
        return Err(ConstructionError::TooFewParts);
    }
    for (d, f) in parts {
        check_base(d, f)?;
    }
    let total: usize = parts.iter().map(|(d, _)| d.n()).sum();
    let d_max = parts.iter().map(|(_, f)| f.dim()).max().unwrap_or(0);
    if d_max == 0 {
        return Ok(Realizer::zero_dimensional(total));
    }
    let half = d_max.div_ceil(2);
    let dim = 2 * half;

    let mut offsets = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for (d, _) in parts {
        offsets.push(acc);
        acc += d.n();
    }
    let lead = parts
        .iter()
        .position(|(_, f)| f.dim() == d_max)
        .expect("max exists");
    let mut order: Vec<usize> = vec![lead];
    order.extend((0..parts.len()).filter(|&i| i != lead && parts[i].0.n() > 0));

    let mut out: Vec<Vec<i64>> = vec![Vec::new(); total];
    let mut prev: Option<Vec<Vec<i64>>> = None;
    for &i in &order {
        let (d, f) = &parts[i];
        let padded: Vec<Vec<i64>> = f.extend_dims(dim)?.into_vectors()[..d.n()].to_vec();
        let shifted = match &prev {
            None => padded,
            Some(before) => {
                let low = |vs: &[Vec<i64>]| vs.iter().flat_map(|v| v[..half].to_vec()).min();
                let high = |vs: &[Vec<i64>]| vs.iter().flat_map(|v| v[..half].to_vec()).max();
                let low2 = |vs: &[Vec<i64>]| vs.iter().flat_map(|v| v[half..].to_vec()).min();
                let high2 = |vs: &[Vec<i64>]| vs.iter().flat_map(|v| v[half..].to_vec()).max();
                let up = high(before).expect("nonempty") - low(&padded).expect("nonempty") + 1;
                let down = low2(before).expect("nonempty") - high2(&padded).expect("nonempty") - 1;
                padded
                    .into_iter()
                    .map(|v| {
                        v.iter()
                            .enumerate()
                            .map(|(t, &x)| if t < half { x + up } else { x + down })
                            .collect()
                    })
                    .collect()
            }
        };
        for (k, v) in shifted.iter().enumerate() {
            out[offsets[i] + k] = v.clone();
        }
        if !shifted.is_empty() {
            prev = Some(shifted);
        }
    }
    Ok(Realizer::new(dim, out)?)
}

/// Gives every vertex the vector of its homogeneous class.
pub fn condense_lift(
    d: &Digraph,
    cr: &Condensation,
    f_star: &Realizer,
) -> Result<Realizer, ConstructionError> {
    if cr.class_of.len() != d.n() {
        return Err(ConstructionError::ClassMismatch(format!(
            "condensation covers {} vertices, digraph has {}",
            cr.class_of.len(),
            d.n()
        )));
    }
    if f_star.len() != cr.class_count() {
        return Err(ConstructionError::ClassMismatch(format!(
            "realizer has {} vectors for {} classes",
            f_star.len(),
            cr.class_count()
        )));
    }
    check_base(&cr.condensed, f_star)?;
    let vectors = cr
        .class_of
        .iter()
        .map(|&c| f_star.vector(c).to_vec())
        .collect();
    Ok(Realizer::new(f_star.dim(), vectors)?)
}

/// Four-dimensional realizer of the path on `2m - 1` vertices. Odd vertices
/// run down the first two coordinates and up the last two; even vertices
/// drop two in the third coordinate and rise two in the fourth, which makes
/// each of them lose to its predecessor and beat its successor three to one.
fn odd_path_vectors(m: i64) -> Vec<Vec<i64>> {
    (1..2 * m)
        .map(|k| {
            let i = (k + 1) / 2;
            if k % 2 == 1 {
                let hi = 2 * m - 2 * i + 1;
                vec![hi, hi, 2 * i - 1, 2 * i - 1]
            } else {
                let hi = 2 * m - 2 * i;
                vec![hi, hi, 2 * i - 2, 2 * i + 2]
            }
        })
        .collect()
}

/// Realizer of `path(n)`: dimension 0, 1, 3 and 4 for `n = 1`, `2`, `3`
/// and `n >= 4`.
pub fn realize_path(n: usize) -> Result<Realizer, ConstructionError> {
    let f = match n {
        0 => {
            return Err(ConstructionError::BadParams(
                "path needs at least one vertex".into(),
            ))
        }
        1 => Realizer::zero_dimensional(1),
        2 => Realizer::new(1, vec![vec![2], vec![1]])?,
        3 => Realizer::new(3, vec![vec![1, 2, 3], vec![3, 1, 2], vec![2, 0, 3]])?,
        _ => {
            // smallest odd vertex count covering n; a prefix is still an
            // induced path
            let m = (n as i64 + 2) / 2;
            let all = odd_path_vectors(m);
            Realizer::new(4, all[..n].to_vec())?
        }
    };
    debug_assert!(realizes(&generate(Family::Path(n))?, &f));
    Ok(f)
}

/// Realizer of `cycle(n)`: the three-dimensional rotation for `n = 3`, rows
/// of the cycle matrix for `n >= 4`.
pub fn realize_cycle(n: usize) -> Result<Realizer, ConstructionError> {
    let f = match n {
        0..=2 => {
            return Err(ConstructionError::BadParams(format!(
                "cycle needs n >= 3, got {n}"
            )))
        }
        3 => Realizer::new(3, vec![vec![1, 2, 3], vec![3, 1, 2], vec![2, 3, 1]])?,
        _ => CycleMatrix::for_cycle(n)?.to_realizer(),
    };
    debug_assert!(realizes(&generate(Family::Cycle(n))?, &f));
    Ok(f)
}

/// Starts from the zero-dimensional realizer and adds the arcs one at a time
/// in lexicographic order; the dimension is `2 * |A(D)|`.
pub fn generic_realizer(d: &Digraph) -> Realizer {
    let mut current = Digraph::empty(d.n());
    let mut f = Realizer::zero_dimensional(d.n());
    for &(u, v) in d.arcs() {
        f = add_arc_realizer(&current, &f, (u, v)).expect("arcs of a valid digraph add cleanly");
        current = current
            .with_arc(u, v)
            .expect("subdigraph of a valid digraph");
    }
    f
}
