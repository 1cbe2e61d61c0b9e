use num_traits::{One, Zero};

use crate::exact::BigRat;
use crate::genfun::{SlitSpec, Weights};

/// The `(m+2) x (m+2)` one-step matrix of the walk. Rows `0`, `m`, `m+1` are
/// absorbing unit rows; an interior row `s` holds `a1` at `s-1`, `a2` at `s+1`
/// and `a3` at `s+2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    m: usize,
    entries: Vec<Vec<BigRat>>,
}

impl TransitionMatrix {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.m + 2
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigRat {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<BigRat>] {
        &self.entries
    }

    pub fn is_absorbing(&self, state: usize) -> bool {
        state == 0 || state >= self.m
    }

    /// Transitions among interior states `1..=m-1` only.
    pub fn interior(&self) -> Vec<Vec<BigRat>> {
        (1..self.m)
            .map(|r| self.entries[r][1..self.m].to_vec())
            .collect()
    }

    /// `A^k` by repeated multiplication.
    pub fn power(&self, k: usize) -> Vec<Vec<BigRat>> {
        let n = self.size();
        let mut acc: Vec<Vec<BigRat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigRat::one()
                        } else {
                            BigRat::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for _ in 0..k {
            acc = mat_mul(&acc, &self.entries);
        }
        acc
    }
}

fn mat_mul(a: &[Vec<BigRat>], b: &[Vec<BigRat>]) -> Vec<Vec<BigRat>> {
    let n = b[0].len();
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .fold(BigRat::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn build_matrix(spec: &SlitSpec, w: &Weights) -> TransitionMatrix {
    let m = spec.m();
    let n = m + 2;
    let mut entries = vec![vec![BigRat::zero(); n]; n];
    for (s, row) in entries.iter_mut().enumerate() {
        if s == 0 || s >= m {
            row[s] = BigRat::one();
        } else {
            row[s - 1] = w.a1().clone();
            row[s + 1] = w.a2().clone();
            row[s + 2] = w.a3().clone();
        }
    }
    TransitionMatrix { m, entries }
}

/// `c_n = a1 * (A^(n-1))[m-1][1]` for `n = 1..=order` (`c_0 = 0`).
///
/// Only row `m - 1` of each power is needed, so the power is advanced one
/// row-vector product at a time.
pub fn matrix_series(spec: &SlitSpec, w: &Weights, order: usize) -> Vec<BigRat> {
    let a = build_matrix(spec, w);
    let mut row = vec![BigRat::zero(); a.size()];
    row[spec.start()] = BigRat::one();
    let mut out = vec![BigRat::zero(); order + 1];
    for c in out.iter_mut().skip(1) {
        *c = w.a1() * &row[1];
        row = mat_mul(std::slice::from_ref(&row), a.rows()).remove(0);
    }
    out
}
