//! Root-product identities for a cubic `F(x, q) = b0 x^3 + b1 x^2 + b2 x + q`.
//!
//! For each root `r_i`:
//!
//! - `F'(r_i) = b0 prod_{j != i} (r_i - r_j)`
//! - `dr_i/dq * F'(r_i) = -dF/dq = -1` (inverse-function derivative)
//! - `eps * r_i^m / (b0 prod_{j != i}(r_i - r_j)) = d/dq [r_i^(m+1) / (m+1)]`, which
//!   fixes `eps = -1` for every `i` and `m`
//!
//! and `((r_1 - r_2)(r_2 - r_3)(r_3 - r_1))^2 = D / b0^4` with `D` the discriminant.

use super::numeric::{eval_cubic, solve_cubic, C64};
use crate::error::{Error, Result};
use crate::genfun::Weights;

pub const ANALYTIC_TOL: f64 = 1e-9;
pub const FINITE_DIFF_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cubic {
    pub b0: f64,
    pub b1: f64,
    pub b2: f64,
}

impl Cubic {
    /// The characteristic cubic of the walk at `z`, normalised so that `q`
    /// is the constant term.
    pub fn characteristic(z: f64, w: &Weights) -> Self {
        let (a1, a2, a3) = w.to_f64();
        Self {
            b0: a3 / a1,
            b1: a2 / a1,
            b2: -1.0 / (z * a1),
        }
    }

    fn coeffs(&self, q: f64) -> [f64; 4] {
        [self.b0, self.b1, self.b2, q]
    }

    pub fn eval(&self, x: C64, q: f64) -> C64 {
        eval_cubic(&self.coeffs(q), x)
    }

    pub fn derivative(&self, x: C64) -> C64 {
        (x * (3.0 * self.b0) + 2.0 * self.b1) * x + self.b2
    }

    pub fn roots(&self, q: f64) -> Result<[C64; 3]> {
        solve_cubic(&self.coeffs(q))
    }

    pub fn discriminant(&self, q: f64) -> f64 {
        let Cubic { b0, b1, b2 } = *self;
        18.0 * b0 * b1 * b2 * q - 4.0 * b1.powi(3) * q + b1 * b1 * b2 * b2
            - 4.0 * b0 * b2.powi(3)
            - 27.0 * b0 * b0 * q * q
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionReport {
    pub roots: [C64; 3],
    /// max over roots of `|F'(r) - b0 prod(r - r_j)| / |F'(r)|`
    pub derivative_residual: f64,
    pub discriminant: f64,
    /// `|P^2 - D/b0^4| / |D/b0^4|` with `P = (r1-r2)(r2-r3)(r3-r1)`
    pub discriminant_residual: f64,
    /// `s` in `sqrt(D) / b0^2 = s P` (principal square root)
    pub discriminant_sign: i8,
    /// max over roots of `|dr/dq * F'(r) + 1|`, `dr/dq` by central differences
    pub inverse_derivative_residual: f64,
    /// `eps_i = b0 prod_{j != i}(r_i - r_j) dr_i/dq`, rounded
    pub power_identity_signs: [i8; 3],
}

impl ReductionReport {
    pub fn passes(&self) -> bool {
        self.derivative_residual <= ANALYTIC_TOL
            && self.discriminant_residual <= ANALYTIC_TOL
            && self.inverse_derivative_residual <= FINITE_DIFF_TOL
    }
}

fn nearest(target: C64, candidates: &[C64; 3]) -> C64 {
    *candidates
        .iter()
        .min_by(|x, y| (**x - target).norm().total_cmp(&(**y - target).norm()))
        .expect("three candidates")
}

pub fn reduction_identity_check(cubic: &Cubic, q: f64) -> Result<ReductionReport> {
    let roots = cubic.roots(q)?;
    let scale = roots.iter().fold(1.0f64, |m, r| m.max(r.norm()));
    let gap = (roots[0] - roots[1])
        .norm()
        .min((roots[1] - roots[2]).norm())
        .min((roots[2] - roots[0]).norm());
    if gap <= 1e-7 * scale {
        return Err(Error::DiscriminantVanishes);
    }

    let h = 1e-6 * q.abs().max(1.0);
    let up = cubic.roots(q + h)?;
    let down = cubic.roots(q - h)?;

    let mut derivative_residual = 0.0f64;
    let mut inverse_derivative_residual = 0.0f64;
    let mut power_identity_signs = [0i8; 3];
    for i in 0..3 {
        let r = roots[i];
        let prod: C64 = (0..3)
            .filter(|&j| j != i)
            .map(|j| r - roots[j])
            .product::<C64>()
            * cubic.b0;
        let fprime = cubic.derivative(r);
        derivative_residual = derivative_residual.max((fprime - prod).norm() / fprime.norm());

        let drdq = (nearest(r, &up) - nearest(r, &down)) / (2.0 * h);
        inverse_derivative_residual = inverse_derivative_residual.max((drdq * fprime + 1.0).norm());
        power_identity_signs[i] = (prod * drdq).re.round() as i8;
    }

    let p = (roots[0] - roots[1]) * (roots[1] - roots[2]) * (roots[2] - roots[0]);
    let d = cubic.discriminant(q);
    let scaled = d / cubic.b0.powi(4);
    let discriminant_residual = (p * p - scaled).norm() / scaled.abs();
    let sqrt_d = C64::new(d, 0.0).sqrt() / (cubic.b0 * cubic.b0);
    let discriminant_sign = if (sqrt_d / p).re >= 0.0 { 1 } else { -1 };

    Ok(ReductionReport {
        roots,
        derivative_residual,
        discriminant: d,
        discriminant_residual,
        discriminant_sign,
        inverse_derivative_residual,
        power_identity_signs,
    })
}
