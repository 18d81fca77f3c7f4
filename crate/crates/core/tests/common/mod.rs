#![allow(dead_code)]

use majdim::{Digraph, Realizer};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn margin(x: &[i64], y: &[i64]) -> i64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a > b) as i64 - (a < b) as i64)
        .sum()
}

fn fits(d: &Digraph, u: usize, v: usize, m: i64) -> bool {
    match d.relation(u, v) {
        1 => m > 0,
        -1 => m < 0,
        _ => m == 0,
    }
}

/// Every point of `[n]^dim`.
fn cube(n: usize, dim: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=n as i64).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Tries every tuple of rank vectors in `[n]^dim`, checking the whole
/// assignment only at the end.
pub fn naive_realizable(d: &Digraph, dim: usize) -> bool {
    let n = d.n();
    let points = cube(n.max(1), dim);
    let mut idx = vec![0usize; n];
    loop {
        let ok = (0..n)
            .all(|u| (u + 1..n).all(|v| fits(d, u, v, margin(&points[idx[u]], &points[idx[v]]))));
        if ok {
            return true;
        }
        let mut k = 0;
        loop {
            if k == n {
                return false;
            }
            idx[k] += 1;
            if idx[k] < points.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Plain backtracking over `[n]^dim`: vertex `k` takes any point consistent
/// with every earlier vertex. No symmetry breaking, no pruning rules.
pub fn backtrack_realizable(d: &Digraph, dim: usize) -> Option<Realizer> {
    let n = d.n();
    let points = cube(n.max(1), dim);
    fn rec(d: &Digraph, points: &[Vec<i64>], chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == d.n() {
            return true;
        }
        for c in 0..points.len() {
            if (0..k).all(|j| fits(d, k, j, margin(&points[c], &points[chosen[j]]))) {
                chosen.push(c);
                if rec(d, points, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    rec(d, &points, &mut chosen)
        .then(|| Realizer::new(dim, chosen.iter().map(|&c| points[c].clone()).collect()).unwrap())
}

/// Each unordered pair independently: no arc, or an arc either way.
pub fn random_digraph(rng: &mut impl Rng, n: usize) -> Digraph {
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match rng.gen_range(0..3) {
                1 => arcs.push((i, j)),
                2 => arcs.push((j, i)),
                _ => {}
            }
        }
    }
    Digraph::build(n, arcs).unwrap()
}

pub fn random_realizer(rng: &mut impl Rng, n: usize, dim: usize, spread: i64) -> Realizer {
    let vectors = (0..n)
        .map(|_| (0..dim).map(|_| rng.gen_range(-spread..=spread)).collect())
        .collect();
    Realizer::new(dim, vectors).unwrap()
}

/// The digraph a realizer induces.
pub fn induced_by(f: &Realizer) -> Digraph {
    let n = f.len();
    let arcs = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| f.margin(u, v) > 0);
    Digraph::build(n, arcs).unwrap()
}

/// `v1 -> v2`, `v3 -> v2`, `v1 -> v3` as vertices 0, 1, 2.
pub fn transitive_triangle() -> Digraph {
    Digraph::build(3, [(0, 1), (2, 1), (0, 2)]).unwrap()
}

/// The transitive triangle without `v1 -> v2`: the path `v1 -> v3 -> v2`.
pub fn open_two_path() -> Digraph {
    Digraph::build(3, [(2, 1), (0, 2)]).unwrap()
}

/// A single arc beside an isolated vertex.
pub fn arc_and_point() -> (Digraph, Digraph) {
    (Digraph::build(2, [(0, 1)]).unwrap(), Digraph::empty(1))
}
