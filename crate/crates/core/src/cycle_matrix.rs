//! `n x 4` integer matrices whose rows realize the directed `n`-cycle in four
//! dimensions.
//!
//! Rows are vertices in cycle order. Consecutive rows (cyclically) must split
//! the four columns 3 to 1 in favor of the earlier row, every other pair must
//! split them 2 to 2, and no column may repeat a value. Together these make
//! row `i` beat row `i + 1` by a margin of two and leave all other pairs
//! incomparable.
//!
//! Construction: the fixed base matrix for `n = 4`, a closed form for even
//! `n >= 6`, and for odd `n` a vertex split of the even matrix one size
//! smaller (see [`CycleMatrix::split`]).

use std::fmt;

use thiserror::Error;

use crate::realizer::Realizer;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Entries are positive integers.
    Positive,
    /// No column repeats a value.
    DistinctColumns,
    /// Some column peaks in the last row and a different column bottoms out
    /// in the first row.
    Extremes,
    /// Row `i` exceeds row `i + 1 (mod n)` in exactly three columns.
    ConsecutiveThreeOne,
    /// Non-consecutive rows exceed each other in exactly two columns.
    DistantTwoTwo,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleMatrixError {
    #[error("cycle matrices need at least 4 rows, got {0}")]
    TooFewRows(usize),
    #[error("matrix violates {0:?}")]
    Invalid(Vec<Condition>),
    #[error("no column holds rows {0} and its neighbors adjacently in decreasing order")]
    NotSplittable(usize),
}

#[derive(Clone, PartialEq, Eq)]
pub struct CycleMatrix {
    rows: Vec<[i64; 4]>,
}

impl fmt::Debug for CycleMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

pub const BASE_FOUR: [[i64; 4]; 4] = [[3, 1, 2, 4], [2, 4, 1, 3], [1, 3, 4, 2], [4, 2, 3, 1]];

fn wins(a: &[i64; 4], b: &[i64; 4]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x > y).count()
}

impl CycleMatrix {
    /// Validates all five conditions.
    pub fn new(rows: Vec<[i64; 4]>) -> Result<Self, CycleMatrixError> {
        if rows.len() < 4 {
            return Err(CycleMatrixError::TooFewRows(rows.len()));
        }
        let m = CycleMatrix { rows };
        let violated = m.violations();
        if violated.is_empty() {
            Ok(m)
        } else {
            Err(CycleMatrixError::Invalid(violated))
        }
    }

    /// Builds the matrix for the `n`-cycle, `n >= 4`.
    pub fn for_cycle(n: usize) -> Result<Self, CycleMatrixError> {
        match n {
            0..=3 => Err(CycleMatrixError::TooFewRows(n)),
            4 => CycleMatrix::new(BASE_FOUR.to_vec()),
            _ if n.is_multiple_of(2) => CycleMatrix::new(even_rows(n)),
            _ => CycleMatrix::new(even_rows(n - 1))?.split(1),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[[i64; 4]] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.rows[row][col]
    }

    /// The conditions this matrix fails, without duplicates.
    pub fn violations(&self) -> Vec<Condition> {
        let n = self.rows.len();
        let mut out = Vec::new();
        let column = |c: usize| self.rows.iter().map(move |r| r[c]);
        if self.rows.iter().flatten().any(|&x| x <= 0) {
            out.push(Condition::Positive);
        }
        if (0..4).any(|c| {
            let mut col: Vec<i64> = column(c).collect();
            col.sort_unstable();
            col.windows(2).any(|w| w[0] == w[1])
        }) {
            out.push(Condition::DistinctColumns);
        }
        let peaks_last = |c: usize| column(c).max().is_some_and(|mx| self.rows[n - 1][c] == mx);
        let bottoms_first = |c: usize| column(c).min().is_some_and(|mn| self.rows[0][c] == mn);
        let extremes = (0..4).any(|j| (0..4).any(|k| j != k && peaks_last(j) && bottoms_first(k)));
        if !extremes {
            out.push(Condition::Extremes);
        }
        if (0..n).any(|i| wins(&self.rows[i], &self.rows[(i + 1) % n]) != 3) {
            out.push(Condition::ConsecutiveThreeOne);
        }
        let distant_bad = (0..n).any(|i| {
            (i + 2..n).any(|j| !(i == 0 && j == n - 1) && wins(&self.rows[i], &self.rows[j]) != 2)
        });
        if distant_bad {
            out.push(Condition::DistantTwoTwo);
        }
        out
    }

    /// Replaces row `v` by two rows `v' -> v''` to realize the cycle one
    /// vertex longer.
    ///
    /// Needs a column in which the rows before and after `v` sit directly
    /// above and below it (no other row's value in between). Both copies
    /// shadow `v` everywhere, with `v'` just above `v''`, except in that
    /// column: there `v'` drops just under the successor and `v''` rises just
    /// over the predecessor. Each of those moves flips exactly one comparison,
    /// which turns the two formerly consecutive pairs into ties while `v'`
    /// still beats `v''` three columns to one.
    pub fn split(&self, v: usize) -> Result<CycleMatrix, CycleMatrixError> {
        let n = self.rows.len();
        let u = (v + n - 1) % n;
        let w = (v + 1) % n;
        let col =
            (0..4)
                .find(|&c| {
                    let (hi, mid, lo) = (self.rows[u][c], self.rows[v][c], self.rows[w][c]);
                    hi > mid
                        && mid > lo
                        && self.rows.iter().enumerate().all(|(r, row)| {
                            r == u || r == v || r == w || row[c] < lo || row[c] > hi
                        })
                })
                .ok_or(CycleMatrixError::NotSplittable(v))?;

        let doubled: Vec<[i64; 4]> = self.rows.iter().map(|r| r.map(|x| 2 * x)).collect();
        let mut first = doubled[v].map(|x| x + 1);
        let mut second = doubled[v];
        first[col] = doubled[w][col] - 1;
        second[col] = doubled[u][col] + 1;

        let mut rows = Vec::with_capacity(n + 1);
        rows.extend_from_slice(&doubled[..v]);
        rows.push(first);
        rows.push(second);
        rows.extend_from_slice(&doubled[v + 1..]);
        CycleMatrix::new(rank_columns(rows))
    }

    /// Row `i` becomes the vector of cycle vertex `i`.
    pub fn to_realizer(&self) -> Realizer {
        Realizer::new(4, self.rows.iter().map(|r| r.to_vec()).collect())
            .expect("rows have four entries")
    }
}

/// Closed form for even `n`: column 4 strictly decreasing, column 3 the same
/// with the last vertex lifted to the top, and columns 1 and 2 increasing
/// except that each swaps the two members of alternate consecutive pairs
/// (column 2 the pairs `(1,2), (3,4), ...`, column 1 the pairs
/// `(2,3), (4,5), ...` with the last vertex wrapped to second place).
fn even_rows(n: usize) -> Vec<[i64; 4]> {
    debug_assert!(n.is_multiple_of(2) && n >= 4);
    let n = n as i64;
    (1..=n)
        .map(|i| {
            let c1 = match i {
                1 => 1,
                _ if i == n => 2,
                _ if i % 2 == 0 => i + 2,
                _ => i,
            };
            let c2 = if i % 2 == 1 { i + 1 } else { i - 1 };
            let c3 = if i < n { n - i } else { n };
            [c1, c2, c3, n + 1 - i]
        })
        .collect()
}

fn rank_columns(mut rows: Vec<[i64; 4]>) -> Vec<[i64; 4]> {
    for c in 0..4 {
        let mut col: Vec<i64> = rows.iter().map(|r| r[c]).collect();
        col.sort_unstable();
        col.dedup();
        for r in rows.iter_mut() {
            r[c] = col.binary_search(&r[c]).expect("value present") as i64 + 1;
        }
    }
    rows
}
