//! Exact decision procedure for realizability in a fixed dimension, and the
//! weak majority dimension built on top of it.
//!
//! # Search space
//!
//! Only the order of values within each coordinate matters, so a realizer is
//! determined up to equivalence by one weak order per coordinate. Vertices
//! are placed one at a time; for each coordinate the new vertex either ties
//! one of the distinct values already present or falls into one of the gaps
//! around them. Every weak order arises exactly once this way, so exhausting
//! the tree is a proof of non-realizability. Witnesses come out as dense
//! ranks `1..=n` per coordinate.
//!
//! # Pruning
//!
//! * Pair bounds: after fixing `c` of the `d` coordinates of the new vertex,
//!   each earlier vertex still needs a final margin of the right sign, which
//!   the remaining `d - c` coordinates may be unable to supply.
//! * Parity: in odd dimension, incomparable vectors agree in an odd number
//!   of coordinates.
//! * Induced two-paths in dimension 3: if `x -> y -> z` with `x`, `z`
//!   non-adjacent, neither `x, y` nor `y, z` may share any coordinate value.
//! * Distinct classes: non-homogeneous vertices never share a vector, and
//!   homogeneous vertices are merged up front (the condensed digraph has the
//!   same dimension).
//! * Column symmetry: permuting coordinates preserves every margin, so the
//!   columns are kept in nondecreasing lexicographic order of their
//!   comparison patterns (for each placed vertex, its sign against every
//!   earlier vertex). Patterns only ever grow at the end, so once two
//!   adjacent columns differ their order is settled.
//!
//! The node budget counts coordinate choices and is checked before each one.

use crate::constructions::{condense_lift, generic_realizer, realize_acyclic_tournament};
use crate::digraph::{Digraph, Vertex};
use crate::realizer::{realizes, Realizer};

/// Default node budget for a single `is_realizable` call.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Realizable(Realizer),
    NotRealizable,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub verdict: Verdict,
    pub nodes: u64,
}

impl SolveOutcome {
    pub fn is_realizable(&self) -> bool {
        matches!(self.verdict, Verdict::Realizable(_))
    }

    pub fn witness(&self) -> Option<&Realizer> {
        match &self.verdict {
            Verdict::Realizable(f) => Some(f),
            _ => None,
        }
    }
}

/// Knobs for the search. The defaults turn everything on; the switches
/// exist so tests can compare configurations against each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
    /// Search the condensed digraph and lift the witness.
    pub condense: bool,
    /// Keep coordinate columns in lexicographic order.
    pub symmetry_breaking: bool,
    /// Parity, induced two-path and distinct-class rules. Pair bounds are
    /// always on.
    pub pruning: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            condense: true,
            symmetry_breaking: true,
            pruning: true,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions {
            budget,
            ..Default::default()
        }
    }
}

/// Decides whether `d` has a realizer in dimension `dim`.
pub fn is_realizable(d: &Digraph, dim: usize, budget: u64) -> SolveOutcome {
    is_realizable_with(d, dim, SearchOptions::with_budget(budget))
}

pub fn is_realizable_with(d: &Digraph, dim: usize, opts: SearchOptions) -> SolveOutcome {
    let outcome = if opts.condense {
        let cr = d.condense();
        let inner = search(&cr.condensed, dim, &opts);
        match inner.verdict {
            Verdict::Realizable(f) => SolveOutcome {
                verdict: Verdict::Realizable(
                    condense_lift(d, &cr, &f).expect("witness of the condensed digraph lifts"),
                ),
                nodes: inner.nodes,
            },
            other => SolveOutcome {
                verdict: other,
                nodes: inner.nodes,
            },
        }
    } else {
        search(d, dim, &opts)
    };
    if let Some(f) = outcome.witness() {
        assert!(
            realizes(d, f),
            "solver produced an invalid witness for {d:?}: {f:?}"
        );
    }
    outcome
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Exact(usize),
    /// The search ran out of budget; the dimension lies in `lower..=upper`.
    Unknown {
        lower: usize,
        upper: usize,
    },
}

impl Dimension {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Dimension::Exact(d) => Some(*d),
            Dimension::Unknown { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionResult {
    pub dimension: Dimension,
    /// One outcome per dimension tried, in increasing order.
    pub per_d: Vec<(usize, SolveOutcome)>,
}

impl DimensionResult {
    pub fn witness(&self) -> Option<&Realizer> {
        self.per_d.last().and_then(|(_, o)| o.witness())
    }
}

/// Smallest `d` with a realizer, trying `d = 0, 1, 2, ...` up to
/// `min(max_d, 2 * |A(D)|)`. Dimensions 0 and 1 are settled by their
/// characterizations (no arcs; condensation is a nonempty acyclic
/// tournament), and `2 * |A(D)|` by the arc-by-arc construction. The budget
/// applies to each dimension separately.
pub fn dimension(d: &Digraph, max_d: usize, budget: u64) -> DimensionResult {
    dimension_with(d, max_d, SearchOptions::with_budget(budget))
}

pub fn dimension_with(d: &Digraph, max_d: usize, opts: SearchOptions) -> DimensionResult {
    let ceiling = 2 * d.arc_count();
    let mut per_d = Vec::new();
    let done = |per_d: Vec<(usize, SolveOutcome)>, dim| DimensionResult {
        dimension: Dimension::Exact(dim),
        per_d,
    };

    if d.is_empty() {
        let f = Realizer::zero_dimensional(d.n());
        per_d.push((
            0,
            SolveOutcome {
                verdict: Verdict::Realizable(f),
                nodes: 0,
            },
        ));
        return done(per_d, 0);
    }
    per_d.push((
        0,
        SolveOutcome {
            verdict: Verdict::NotRealizable,
            nodes: 0,
        },
    ));
    if max_d == 0 {
        return DimensionResult {
            dimension: Dimension::Unknown {
                lower: 1,
                upper: ceiling,
            },
            per_d,
        };
    }

    let cr = d.condense();
    if cr.condensed.is_acyclic_tournament() {
        let f = realize_acyclic_tournament(&cr.condensed)
            .and_then(|f| condense_lift(d, &cr, &f))
            .expect("acyclic tournaments have one-dimensional realizers");
        per_d.push((
            1,
            SolveOutcome {
                verdict: Verdict::Realizable(f),
                nodes: 0,
            },
        ));
        return done(per_d, 1);
    }
    per_d.push((
        1,
        SolveOutcome {
            verdict: Verdict::NotRealizable,
            nodes: 0,
        },
    ));

    for dim in 2..=max_d.min(ceiling) {
        if dim == ceiling {
            let f = generic_realizer(d);
            per_d.push((
                dim,
                SolveOutcome {
                    verdict: Verdict::Realizable(f),
                    nodes: 0,
                },
            ));
            return done(per_d, dim);
        }
        let outcome = is_realizable_with(d, dim, opts);
        match outcome.verdict {
            Verdict::Realizable(_) => {
                per_d.push((dim, outcome));
                return done(per_d, dim);
            }
            Verdict::NotRealizable => per_d.push((dim, outcome)),
            Verdict::BudgetExceeded => {
                per_d.push((dim, outcome));
                return DimensionResult {
                    dimension: Dimension::Unknown {
                        lower: dim,
                        upper: ceiling,
                    },
                    per_d,
                };
            }
        }
    }
    DimensionResult {
        dimension: Dimension::Unknown {
            lower: max_d.min(ceiling) + 1,
            upper: ceiling,
        },
        per_d,
    }
}

fn search(d: &Digraph, dim: usize, opts: &SearchOptions) -> SolveOutcome {
    let n = d.n();
    if dim == 0 {
        let verdict = if d.is_empty() {
            Verdict::Realizable(Realizer::zero_dimensional(n))
        } else {
            Verdict::NotRealizable
        };
        return SolveOutcome { verdict, nodes: 1 };
    }
    if n == 0 {
        return SolveOutcome {
            verdict: Verdict::Realizable(Realizer::new(dim, Vec::new()).expect("no vectors")),
            nodes: 0,
        };
    }
    let mut s = Search::new(d, dim, *opts);
    let found = s.place(0, 0);
    let verdict = match found {
        Step::Found => {
            let mut vectors = vec![vec![0i64; dim]; n];
            for (pos, &v) in s.order.iter().enumerate() {
                for (c, x) in vectors[v].iter_mut().enumerate() {
                    *x = s.rank[c][pos] as i64 + 1;
                }
            }
            Verdict::Realizable(Realizer::new(dim, vectors).expect("dim coordinates per vertex"))
        }
        Step::Exhausted => Verdict::NotRealizable,
        Step::OutOfBudget => Verdict::BudgetExceeded,
    };
    SolveOutcome {
        verdict,
        nodes: s.nodes,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ColumnOrder {
    /// Patterns agree so far.
    Tied,
    /// The left column is already strictly smaller.
    Settled,
}

struct Search {
    n: usize,
    dim: usize,
    opts: SearchOptions,
    nodes: u64,
    /// Position -> vertex.
    order: Vec<Vertex>,
    /// `rel[i * n + j]`: relation of position `i` to position `j` (+1 arc,
    /// -1 reverse arc, 0 none).
    rel: Vec<i8>,
    /// `no_equal[i * n + j]`: positions that may not share a coordinate value.
    no_equal: Vec<bool>,
    /// `distinct[i * n + j]`: positions whose vectors must differ.
    distinct: Vec<bool>,
    /// `rank[c][pos]`: dense rank of the value at position `pos` in column
    /// `c`, among the positions placed so far.
    rank: Vec<Vec<u32>>,
    /// Number of distinct values per column.
    levels: Vec<u32>,
    /// Running counts of the vertex being placed against earlier positions.
    ahead: Vec<u32>,
    behind: Vec<u32>,
    /// State of column pair `(c, c + 1)` per placed vertex count; index `k`
    /// holds the state after `k` vertices.
    column_order: Vec<Vec<ColumnOrder>>,
}

impl Search {
    fn new(d: &Digraph, dim: usize, opts: SearchOptions) -> Self {
        let n = d.n();
        let mut order: Vec<Vertex> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(d.degree(v)));

        let mut pos_of = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            pos_of[v] = p;
        }
        let mut rel = vec![0i8; n * n];
        let mut distinct = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                rel[i * n + j] = d.relation(order[i], order[j]);
                distinct[i * n + j] = opts.pruning && i != j && !d.homogeneous(order[i], order[j]);
            }
        }
        let mut no_equal = vec![false; n * n];
        if opts.pruning && dim == 3 {
            for (x, y, z) in d.induced_two_paths() {
                for (a, b) in [(x, y), (y, z)] {
                    let (pa, pb) = (pos_of[a], pos_of[b]);
                    no_equal[pa * n + pb] = true;
                    no_equal[pb * n + pa] = true;
                }
            }
        }
        Search {
            n,
            dim,
            opts,
            nodes: 0,
            order,
            rel,
            no_equal,
            distinct,
            rank: vec![vec![0; n]; dim],
            levels: vec![0; dim],
            ahead: vec![0; n],
            behind: vec![0; n],
            column_order: vec![vec![ColumnOrder::Tied; dim.saturating_sub(1)]; n + 1],
        }
    }

    /// Sign of position `k` against position `j` in column `c`.
    fn sign(&self, c: usize, k: usize, j: usize) -> i8 {
        match self.rank[c][k].cmp(&self.rank[c][j]) {
            std::cmp::Ordering::Greater => 1,
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// Places coordinate `c` of the vertex at position `k`.
    fn place(&mut self, k: usize, c: usize) -> Step {
        if k == self.n {
            return Step::Found;
        }
        if c == self.dim {
            if !self.vertex_complete(k) {
                return Step::Exhausted;
            }
            self.column_order[k + 1] = self.column_order[k].clone();
            if !self.settle_columns(k) {
                return Step::Exhausted;
            }
            for j in 0..k {
                self.ahead[j] = 0;
                self.behind[j] = 0;
            }
            let step = self.place(k + 1, 0);
            if step == Step::Found {
                return step;
            }
            // restore the counts of the vertex at position k
            for j in 0..k {
                for cc in 0..self.dim {
                    match self.sign(cc, k, j) {
                        1 => self.ahead[j] += 1,
                        -1 => self.behind[j] += 1,
                        _ => {}
                    }
                }
            }
            return step;
        }

        let slots = 2 * self.levels[c] + 1;
        for slot in 0..slots {
            if self.nodes >= self.opts.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;

            let inserted = slot % 2 == 0;
            let value = slot / 2;
            if inserted {
                for j in 0..k {
                    if self.rank[c][j] >= value {
                        self.rank[c][j] += 1;
                    }
                }
                self.levels[c] += 1;
            }
            self.rank[c][k] = value;

            let mut feasible = true;
            for j in 0..k {
                let s = self.sign(c, k, j);
                match s {
                    1 => self.ahead[j] += 1,
                    -1 => self.behind[j] += 1,
                    _ => {
                        if self.no_equal[k * self.n + j] {
                            feasible = false;
                        }
                    }
                }
            }
            if feasible {
                feasible = self.pair_bounds_hold(k, c) && self.prefix_columns_ordered(k, c);
            }
            let step = if feasible {
                self.place(k, c + 1)
            } else {
                Step::Exhausted
            };
            if step == Step::Found {
                return step;
            }

            for j in 0..k {
                match self.sign(c, k, j) {
                    1 => self.ahead[j] -= 1,
                    -1 => self.behind[j] -= 1,
                    _ => {}
                }
            }
            if inserted {
                self.levels[c] -= 1;
                for j in 0..k {
                    if self.rank[c][j] > value {
                        self.rank[c][j] -= 1;
                    }
                }
            }
            if step == Step::OutOfBudget {
                return step;
            }
        }
        Step::Exhausted
    }

    /// With coordinates `0..=c` of position `k` fixed, every earlier
    /// position can still end with a margin of the required sign.
    fn pair_bounds_hold(&self, k: usize, c: usize) -> bool {
        let remaining = (self.dim - c - 1) as i64;
        (0..k).all(|j| {
            let m = self.ahead[j] as i64 - self.behind[j] as i64;
            match self.rel[k * self.n + j] {
                1 => m + remaining > 0,
                -1 => m - remaining < 0,
                _ => m.abs() <= remaining,
            }
        })
    }

    /// Checks run once all coordinates of position `k` are fixed.
    fn vertex_complete(&self, k: usize) -> bool {
        (0..k).all(|j| {
            let equal = self.dim as u32 - self.ahead[j] - self.behind[j];
            let incomparable = self.rel[k * self.n + j] == 0;
            if self.opts.pruning {
                if incomparable && self.dim % 2 == 1 && equal.is_multiple_of(2) {
                    return false;
                }
                if equal == self.dim as u32 && self.distinct[k * self.n + j] {
                    return false;
                }
            }
            let m = self.ahead[j] as i64 - self.behind[j] as i64;
            match self.rel[k * self.n + j] {
                1 => m > 0,
                -1 => m < 0,
                _ => m == 0,
            }
        })
    }

    /// Early check for column pair `(c - 1, c)` against the pattern row of
    /// position `k` as soon as column `c` has been placed.
    fn prefix_columns_ordered(&self, k: usize, c: usize) -> bool {
        if !self.opts.symmetry_breaking || c == 0 {
            return true;
        }
        if self.column_order[k][c - 1] == ColumnOrder::Settled {
            return true;
        }
        for j in 0..k {
            let (l, r) = (self.sign(c - 1, k, j), self.sign(c, k, j));
            if l != r {
                return l < r;
            }
        }
        true
    }

    /// Records which adjacent column pairs became strictly ordered by the
    /// pattern row of position `k`.
    fn settle_columns(&mut self, k: usize) -> bool {
        if !self.opts.symmetry_breaking {
            return true;
        }
        for c in 1..self.dim {
            if self.column_order[k + 1][c - 1] == ColumnOrder::Settled {
                continue;
            }
            for j in 0..k {
                let (l, r) = (self.sign(c - 1, k, j), self.sign(c, k, j));
                if l != r {
                    if l > r {
                        return false;
                    }
                    self.column_order[k + 1][c - 1] = ColumnOrder::Settled;
                    break;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{generate, Family};

    fn dim_of(d: &Digraph) -> usize {
        dimension(d, 8, DEFAULT_BUDGET)
            .dimension
            .exact()
            .expect("solved")
    }

    #[test]
    fn short_path_needs_three() {
        let p3 = generate(Family::Path(3)).unwrap();
        assert_eq!(
            is_realizable(&p3, 2, DEFAULT_BUDGET).verdict,
            Verdict::NotRealizable
        );
        let o = is_realizable(&p3, 3, DEFAULT_BUDGET);
        assert!(realizes(&p3, o.witness().unwrap()));
    }

    #[test]
    fn triangle_needs_three() {
        let c3 = generate(Family::Cycle(3)).unwrap();
        assert_eq!(
            is_realizable(&c3, 2, DEFAULT_BUDGET).verdict,
            Verdict::NotRealizable
        );
        assert!(is_realizable(&c3, 3, DEFAULT_BUDGET).is_realizable());
    }

    #[test]
    fn golden_dimensions() {
        assert_eq!(dim_of(&Digraph::empty(4)), 0);
        let fig = Digraph::build(3, [(0, 1), (2, 1), (0, 2)]).unwrap();
        assert_eq!(dim_of(&fig), 1);
        assert_eq!(dim_of(&fig.without_arc(0, 1)), 3);
        assert_eq!(dim_of(&generate(Family::Cycle(3)).unwrap()), 3);
    }

    #[test]
    fn zero_dimension_search() {
        let e = Digraph::empty(3);
        assert!(is_realizable(&e, 0, 10).is_realizable());
        let p = generate(Family::Path(2)).unwrap();
        assert_eq!(is_realizable(&p, 0, 10).verdict, Verdict::NotRealizable);
        assert!(is_realizable(&p, 1, 10).is_realizable());
    }

    #[test]
    fn budget_exhaustion_is_a_verdict() {
        let c4 = generate(Family::Cycle(4)).unwrap();
        let o = is_realizable(&c4, 3, 5);
        assert_eq!(o.verdict, Verdict::BudgetExceeded);
        assert!(o.nodes <= 5);
        let r = dimension(&c4, 8, 5);
        assert_eq!(r.dimension, Dimension::Unknown { lower: 2, upper: 8 });
    }

    #[test]
    fn max_d_caps_the_search() {
        let c3 = generate(Family::Cycle(3)).unwrap();
        let r = dimension(&c3, 2, DEFAULT_BUDGET);
        assert_eq!(r.dimension, Dimension::Unknown { lower: 3, upper: 6 });
        assert_eq!(r.per_d.len(), 3);
    }

    #[test]
    fn configurations_agree_on_small_cases() {
        let plain = SearchOptions {
            budget: DEFAULT_BUDGET,
            condense: false,
            symmetry_breaking: false,
            pruning: false,
        };
        for d in crate::digraph::all_labeled(3) {
            for dim in 0..=3 {
                let a = is_realizable(&d, dim, DEFAULT_BUDGET).is_realizable();
                let b = is_realizable_with(&d, dim, plain).is_realizable();
                assert_eq!(a, b, "{d:?} at d = {dim}");
            }
        }
    }
}
