use num_traits::{One, Zero};

use super::matrix::build_matrix;
use crate::exact::{BigRat, Poly};
use crate::genfun::{SlitSpec, Weights};

/// Coefficients `c_0 = 1, c_1, ..., c_n` of `det(x I - B) = sum_k c_k x^(n-k)`.
///
/// Faddeev–LeVerrier: `M_0 = 0`, `M_k = B M_{k-1} + c_{k-1} I`,
/// `c_k = -tr(B M_k) / k`. Exact, no pivoting, no root finding.
pub fn faddeev_leverrier(b: &[Vec<BigRat>]) -> Vec<BigRat> {
    let n = b.len();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(BigRat::one());
    let mut mk = vec![vec![BigRat::zero(); n]; n];
    for k in 1..=n {
        // M_k = B M_{k-1} + c_{k-1} I
        let mut next = vec![vec![BigRat::zero(); n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for (l, bil) in b[i].iter().enumerate() {
                if bil.is_zero() {
                    continue;
                }
                for (j, x) in row.iter_mut().enumerate() {
                    if !mk[l][j].is_zero() {
                        *x += bil * &mk[l][j];
                    }
                }
            }
            row[i] += &coeffs[k - 1];
        }
        mk = next;
        // tr(B M_k)
        let mut trace = BigRat::zero();
        for (i, brow) in b.iter().enumerate() {
            for (l, bil) in brow.iter().enumerate() {
                if !bil.is_zero() {
                    trace += bil * &mk[l][i];
                }
            }
        }
        coeffs.push(-trace / BigRat::from_integer(k.into()));
    }
    coeffs
}

/// `det(I - z B)` for the interior block `B` of the transition matrix.
///
/// With `det(x I - B) = sum_k c_k x^(n-k)`, substituting `x = 1/z` and
/// multiplying by `z^n` gives `sum_k c_k z^k`.
pub fn interior_charpoly(spec: &SlitSpec, w: &Weights) -> Poly {
    let b = build_matrix(spec, w).interior();
    Poly::from_coeffs(faddeev_leverrier(&b))
}
