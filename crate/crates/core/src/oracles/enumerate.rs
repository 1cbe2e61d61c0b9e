//! Brute-force depth-first enumeration of step sequences.
//!
//! Every surviving walk is visited individually. Since a walk's weight is
//! `a1^n1 a2^n2 a3^n3`, the search only tallies how many absorbed walks have
//! each `(length, n2, n3)` and the weights are applied once at the end.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{pow, BigRat};
use crate::genfun::{SlitSpec, Weights};

pub const DEFAULT_MAX_ENUM: usize = 30;

/// Absorption series from `m - 1`, with the default depth limit.
pub fn enumerate_paths(spec: &SlitSpec, w: &Weights, order: usize) -> Result<Vec<BigRat>> {
    enumerate_paths_from(spec, w, spec.start(), order, DEFAULT_MAX_ENUM)
}

/// `c_0..=c_order`, where `c_n` is the total weight of walks from `start` whose
/// first exit from `1..=m-1` lands on `0` at step `n`.
///
/// `start = 0` gives the series `1`; `start = m` or `m + 1` gives `0`.
pub fn enumerate_paths_from(
    spec: &SlitSpec,
    w: &Weights,
    start: usize,
    order: usize,
    limit: usize,
) -> Result<Vec<BigRat>> {
    let m = spec.m();
    if start > m + 1 {
        return Err(Error::StartOutOfRange { start, max: m + 1 });
    }
    if order > limit {
        return Err(Error::EnumerationBudget { order, limit });
    }
    let mut out = vec![BigRat::zero(); order + 1];
    if start == 0 {
        out[0] = BigRat::from_integer(1.into());
        return Ok(out);
    }
    if start >= m {
        return Ok(out);
    }

    let dim = order + 1;
    let mut walker = Walker {
        m,
        order,
        up_one: !w.a2().is_zero(),
        dim,
        counts: vec![0; dim * dim * dim],
    };
    walker.walk(start, 0, 0, 0);

    for (len, slot) in out.iter_mut().enumerate().skip(1) {
        for n2 in 0..=len {
            for n3 in 0..=len - n2 {
                let count = walker.counts[(len * dim + n2) * dim + n3];
                if count == 0 {
                    continue;
                }
                let n1 = len - n2 - n3;
                *slot += BigRat::from_integer(BigInt::from(count))
                    * pow(w.a1(), n1)
                    * pow(w.a2(), n2)
                    * pow(w.a3(), n3);
            }
        }
    }
    Ok(out)
}

struct Walker {
    m: usize,
    order: usize,
    up_one: bool,
    dim: usize,
    counts: Vec<u64>,
}

impl Walker {
    fn walk(&mut self, state: usize, len: usize, n2: usize, n3: usize) {
        let len = len + 1;
        if len > self.order {
            return;
        }
        if state == 1 {
            self.counts[(len * self.dim + n2) * self.dim + n3] += 1;
        } else {
            self.walk(state - 1, len, n2, n3);
        }
        if self.up_one && state + 1 < self.m {
            self.walk(state + 1, len, n2 + 1, n3);
        }
        if state + 2 < self.m {
            self.walk(state + 2, len, n2, n3 + 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn spec(m: usize) -> SlitSpec {
        SlitSpec::new(m).unwrap()
    }

    #[test]
    fn three_interior_by_hand() {
        let (a1, a2, a3) = (ratio(2, 3), ratio(5, 7), ratio(3, 11));
        let w = Weights::new(a1.clone(), a2.clone(), a3).unwrap();
        let c = enumerate_paths(&spec(3), &w, 6).unwrap();
        // 2 -> 1 -> 0
        assert_eq!(c[2], &a1 * &a1);
        // 2 -> 1 -> 2 -> 1 -> 0; the +2 step from 1 lands on 3 and is absorbed
        assert_eq!(c[4], &a1 * &a1 * &a1 * &a2);
        assert_eq!(c[1], rat(0));
        assert_eq!(c[3], rat(0));
    }

    #[test]
    fn single_step_from_one() {
        let w = Weights::from_integers(3, 5, 7).unwrap();
        let c = enumerate_paths(&spec(2), &w, 4).unwrap();
        assert_eq!(c, vec![rat(0), rat(3), rat(0), rat(0), rat(0)]);
    }

    #[test]
    fn unit_weights_m3() {
        let w = Weights::from_integers(1, 1, 1).unwrap();
        let c = enumerate_paths(&spec(3), &w, 6).unwrap();
        assert_eq!(c, [0, 0, 1, 0, 1, 0, 1].map(rat).to_vec());
    }

    #[test]
    fn boundary_starts() {
        let w = Weights::from_integers(1, 1, 1).unwrap();
        let from_zero = enumerate_paths_from(&spec(5), &w, 0, 3, 30).unwrap();
        assert_eq!(from_zero, [1, 0, 0, 0].map(rat).to_vec());
        for s in [5, 6] {
            let c = enumerate_paths_from(&spec(5), &w, s, 3, 30).unwrap();
            assert!(c.iter().all(Zero::is_zero));
        }
        assert!(matches!(
            enumerate_paths_from(&spec(5), &w, 7, 3, 30),
            Err(Error::StartOutOfRange { .. })
        ));
    }

    #[test]
    fn budget() {
        let w = Weights::from_integers(1, 1, 1).unwrap();
        assert_eq!(
            enumerate_paths(&spec(4), &w, 31),
            Err(Error::EnumerationBudget {
                order: 31,
                limit: 30
            })
        );
        assert!(enumerate_paths_from(&spec(4), &w, 3, 12, 12).is_ok());
    }
}
