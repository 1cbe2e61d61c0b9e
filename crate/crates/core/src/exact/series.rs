use num_traits::Zero;

use super::{BigRat, Poly};
use crate::error::{Error, Result};

/// First `order + 1` coefficients of the power series `1 / d(z)`.
pub fn series_inverse(d: &Poly, order: usize) -> Result<Vec<BigRat>> {
    let d0 = d.coeff(0);
    if d0.is_zero() {
        return Err(Error::NonInvertibleSeries);
    }
    let inv_d0 = d0.recip();
    let dc = d.coeffs();
    let mut out: Vec<BigRat> = Vec::with_capacity(order + 1);
    out.push(inv_d0.clone());
    for n in 1..=order {
        let mut acc = BigRat::zero();
        for k in 1..=n.min(dc.len() - 1) {
            if !dc[k].is_zero() {
                acc += &dc[k] * &out[n - k];
            }
        }
        out.push(-acc * &inv_d0);
    }
    Ok(out)
}
