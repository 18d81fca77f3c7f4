//! Digraphs with simple underlying graphs, their structural predicates,
//! condensation by homogeneous classes, and the generators for the families
//! used throughout the crate.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type Arc = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("both ({0}, {1}) and ({1}, {0}) are present")]
    AntiparallelPair(Vertex, Vertex),
    #[error("vertex {vertex} is out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("arc ({0}, {1}) listed twice")]
    DuplicateArc(Vertex, Vertex),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

/// A digraph on vertices `0..n` whose underlying graph is simple: no loops
/// and at most one arc between any two vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    /// Row-major `n * n` arc matrix.
    adj: Vec<bool>,
    /// Arcs in lexicographic order.
    arcs: Vec<Arc>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs)
    }
}

impl Digraph {
    /// Validates a raw vertex count and arc list.
    pub fn build(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self, DigraphError> {
        let mut adj = vec![false; n * n];
        let mut list = Vec::new();
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(DigraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(DigraphError::Loop(u));
            }
            if adj[u * n + v] {
                return Err(DigraphError::DuplicateArc(u, v));
            }
            if adj[v * n + u] {
                return Err(DigraphError::AntiparallelPair(v, u));
            }
            adj[u * n + v] = true;
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Digraph { n, adj, arcs: list })
    }

    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            adj: vec![false; n * n],
            arcs: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// True when the digraph has no arcs.
    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// `+1` for an arc `u -> v`, `-1` for `v -> u`, `0` otherwise.
    pub fn relation(&self, u: Vertex, v: Vertex) -> i8 {
        if self.has_arc(u, v) {
            1
        } else if self.has_arc(v, u) {
            -1
        } else {
            0
        }
    }

    pub fn out_neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&v| self.adj[u * self.n + v])
    }

    pub fn in_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&u| self.adj[u * self.n + v])
    }

    pub fn out_degree(&self, u: Vertex) -> usize {
        self.out_neighbors(u).count()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_neighbors(v).count()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), DigraphError> {
        if v >= self.n {
            return Err(DigraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Returns a copy with one more arc.
    pub fn with_arc(&self, u: Vertex, v: Vertex) -> Result<Self, DigraphError> {
        Digraph::build(
            self.n,
            self.arcs.iter().copied().chain(std::iter::once((u, v))),
        )
    }

    /// Returns a copy with the arc `u -> v` removed (no-op if absent).
    pub fn without_arc(&self, u: Vertex, v: Vertex) -> Self {
        let mut d = self.clone();
        if d.has_arc(u, v) {
            d.adj[u * d.n + v] = false;
            d.arcs.retain(|&a| a != (u, v));
        }
        d
    }

    /// `(x, z)` is an arc whenever `(x, y)` and `(y, z)` are.
    pub fn is_transitive(&self) -> bool {
        self.arcs
            .iter()
            .all(|&(x, y)| self.out_neighbors(y).all(|z| self.has_arc(x, z)))
    }

    /// Some `x -> y -> z` with `x` and `z` non-adjacent.
    pub fn has_induced_two_path(&self) -> bool {
        self.induced_two_paths().next().is_some()
    }

    /// All triples `(x, y, z)` inducing a directed path of length two.
    pub fn induced_two_paths(&self) -> impl Iterator<Item = (Vertex, Vertex, Vertex)> + '_ {
        self.arcs.iter().flat_map(move |&(x, y)| {
            self.out_neighbors(y)
                .filter(move |&z| z != x && !self.adjacent(x, z))
                .map(move |z| (x, y, z))
        })
    }

    /// Every pair of distinct vertices is adjacent.
    pub fn is_tournament(&self) -> bool {
        self.arcs.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// A tournament whose arcs form a strict total order. Equivalent to the
    /// out-degrees being pairwise distinct.
    pub fn is_acyclic_tournament(&self) -> bool {
        if !self.is_tournament() {
            return false;
        }
        let mut seen = vec![false; self.n];
        (0..self.n).all(|v| !std::mem::replace(&mut seen[self.out_degree(v)], true))
    }

    /// Subdigraph induced by `subset`, relabeled in the order given.
    pub fn induced(&self, subset: &[Vertex]) -> Result<Self, DigraphError> {
        let mut seen = BTreeSet::new();
        for &v in subset {
            self.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(DigraphError::BadParams(format!(
                    "vertex {v} repeated in subset"
                )));
            }
        }
        let mut arcs = Vec::new();
        for (i, &u) in subset.iter().enumerate() {
            for (j, &v) in subset.iter().enumerate() {
                if self.has_arc(u, v) {
                    arcs.push((i, j));
                }
            }
        }
        Digraph::build(subset.len(), arcs)
    }

    /// Vertex-disjoint union; part `i` is relabeled by the total size of the
    /// parts before it.
    pub fn disjoint_union(parts: &[Digraph]) -> Digraph {
        let mut n = 0;
        let mut arcs = Vec::new();
        for part in parts {
            arcs.extend(part.arcs.iter().map(|&(u, v)| (u + n, v + n)));
            n += part.n;
        }
        Digraph::build(n, arcs).expect("union of valid digraphs is valid")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Result<Self, DigraphError> {
        if perm.len() != self.n {
            return Err(DigraphError::BadParams(
                "permutation length differs from n".into(),
            ));
        }
        Digraph::build(self.n, self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn homogeneous(&self, u: Vertex, v: Vertex) -> bool {
        (0..self.n).all(|w| {
            self.adj[u * self.n + w] == self.adj[v * self.n + w]
                && self.adj[w * self.n + u] == self.adj[w * self.n + v]
        })
    }

    /// Collapses homogeneous classes. See [`Condensation`].
    pub fn condense(&self) -> Condensation {
        let mut class_of = vec![usize::MAX; self.n];
        let mut reps: Vec<Vertex> = Vec::new();
        for (v, class) in class_of.iter_mut().enumerate() {
            if let Some(c) = reps.iter().position(|&r| self.homogeneous(r, v)) {
                *class = c;
            } else {
                *class = reps.len();
                reps.push(v);
            }
        }
        let representative = class_of.iter().map(|&c| reps[c]).collect();
        let condensed = self.induced(&reps).expect("representatives are in range");
        Condensation {
            representative,
            class_of,
            condensed,
        }
    }

    /// Base-3 digit per unordered pair `i < j` in lexicographic order:
    /// `0` non-adjacent, `1` for `i -> j`, `2` for `j -> i`.
    pub fn pair_code(&self) -> String {
        let mut s = String::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for i in 0..self.n {
            for j in i + 1..self.n {
                s.push(match self.relation(i, j) {
                    1 => '1',
                    -1 => '2',
                    _ => '0',
                });
            }
        }
        s
    }

    /// Inverse of [`Digraph::pair_code`].
    pub fn from_pair_code(n: usize, code: &str) -> Result<Self, DigraphError> {
        let expected = n * n.saturating_sub(1) / 2;
        if code.len() != expected {
            return Err(DigraphError::BadParams(format!(
                "pair code of length {} for {n} vertices (expected {expected})",
                code.len()
            )));
        }
        let mut chars = code.chars();
        let mut arcs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                match chars.next() {
                    Some('0') => {}
                    Some('1') => arcs.push((i, j)),
                    Some('2') => arcs.push((j, i)),
                    other => {
                        return Err(DigraphError::BadParams(format!(
                            "bad pair-code digit {other:?}"
                        )))
                    }
                }
            }
        }
        Digraph::build(n, arcs)
    }

    /// Lexicographically smallest pair code over all vertex relabelings.
    /// Brute force over `n!` permutations, meant for `n <= 6` or so.
    pub fn canonical_code(&self) -> String {
        let mut best = self.pair_code();
        let mut perm: Vec<Vertex> = (0..self.n).collect();
        for_each_permutation(&mut perm, 0, &mut |p| {
            let code = self.permuted(p).expect("permutation is valid").pair_code();
            if code < best {
                best = code;
            }
        });
        best
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph D {\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for &(u, v) in &self.arcs {
            s.push_str(&format!("  {u} -> {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

fn for_each_permutation(perm: &mut [Vertex], k: usize, f: &mut impl FnMut(&[Vertex])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        for_each_permutation(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Every labeled digraph on `n` vertices, in increasing pair-code order.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    let total = 3usize.pow(pairs as u32);
    (0..total).map(move |mut idx| {
        let mut digits = vec!['0'; pairs];
        for slot in digits.iter_mut().rev() {
            *slot = char::from(b'0' + (idx % 3) as u8);
            idx /= 3;
        }
        let code: String = digits.into_iter().collect();
        Digraph::from_pair_code(n, &code).expect("generated code is well formed")
    })
}

/// Homogeneous classes of a digraph: `u ~ v` iff they have the same in- and
/// out-neighborhoods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    /// Smallest vertex of each vertex's class.
    pub representative: Vec<Vertex>,
    /// Class index of each vertex; classes are numbered by first appearance,
    /// which is also the order of their representatives.
    pub class_of: Vec<usize>,
    /// Subdigraph induced by the representatives, relabeled `0..classes`.
    pub condensed: Digraph,
}

impl Condensation {
    pub fn class_count(&self) -> usize {
        self.condensed.n()
    }

    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.class_count() <= 1
    }
}

/// Named digraph families with documented labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `n` isolated vertices.
    Empty(usize),
    /// `0 -> 1 -> ... -> n-1`.
    Path(usize),
    /// `0 -> 1 -> ... -> n-1 -> 0`, `n >= 3`.
    Cycle(usize),
    /// Arc `(j, i)` for every `j > i`.
    AcyclicTournament(usize),
    /// The arc `0 -> 1` on `n >= 2` vertices.
    SingleArc(usize),
    /// Elements `1..=r` as vertices `0..r`, then every `(d+1)`-subset of
    /// `1..=r` in lexicographic order; an arc from each element to every
    /// subset containing it.
    SubsetFamily { r: usize, d: usize },
}

pub fn generate(family: Family) -> Result<Digraph, DigraphError> {
    match family {
        Family::Empty(n) => Ok(Digraph::empty(n)),
        Family::Path(n) => {
            if n == 0 {
                return Err(DigraphError::BadParams(
                    "path needs at least one vertex".into(),
                ));
            }
            Digraph::build(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(DigraphError::BadParams(format!(
                    "cycle needs n >= 3, got {n}"
                )));
            }
            Digraph::build(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::AcyclicTournament(n) => {
            Digraph::build(n, (0..n).flat_map(|j| (0..j).map(move |i| (j, i))))
        }
        Family::SingleArc(n) => {
            if n < 2 {
                return Err(DigraphError::BadParams(format!(
                    "single arc needs n >= 2, got {n}"
                )));
            }
            Digraph::build(n, [(0, 1)])
        }
        Family::SubsetFamily { r, d } => {
            if r < d + 1 {
                return Err(DigraphError::BadParams(format!(
                    "subset family needs r >= d + 1, got r = {r}, d = {d}"
                )));
            }
            let subsets = subsets_of_size(r, d + 1);
            let mut arcs = Vec::new();
            for (s, subset) in subsets.iter().enumerate() {
                arcs.extend(subset.iter().map(|&e| (e - 1, r + s)));
            }
            Digraph::build(r + subsets.len(), arcs)
        }
    }
}

/// All `k`-subsets of `1..=r` in lexicographic order.
pub fn subsets_of_size(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in start..=r {
            if r - e + 1 < k - cur.len() {
                break;
            }
            cur.push(e);
            rec(e + 1, r, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, r, k, &mut Vec::new(), &mut out);
    out
}
