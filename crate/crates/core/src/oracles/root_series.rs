//! Truncations of the root expansions against numerically computed roots.
//!
//! Small root, through the `G_n` polynomials:
//!
//! ```text
//! b^(1-m) = (a1 z q)^(1-m) (1 + (1-m) sum_{n>=1} q^n G_n(z) / (n - m + 1))
//! ```
//!
//! Large roots, to first order in `q` around the auxiliary quadratic roots:
//!
//! ```text
//! a^(1-m) = R1^(1-m) - (1-m) R1^(-m-1) q a1 / (a3 (R1 - R2)) + O(q^2)
//! ```
//!
//! and symmetrically for `c` with `R1` and `R2` exchanged.

use super::numeric::{cubic_roots, quad_roots, C64};
use crate::error::{Error, Result};
use crate::exact::to_f64;
use crate::genfun::{g_term, SlitSpec, Weights};

/// `q` values used for the first-order fit of the large roots.
pub const LARGE_ROOT_QS: [f64; 2] = [1e-2, 1e-3];

const FLOOR: f64 = 1e-13;

#[derive(Clone, Debug, PartialEq)]
pub struct LargeRootFit {
    pub quadratic_root: C64,
    /// `|root^(1-m) - first-order approximation| / |R^(1-m)|` at each `q`
    pub residuals: [f64; 2],
    /// size of the `q`-linear correction relative to `|R^(1-m)|`
    pub linear_terms: [f64; 2],
    /// fitted exponent `p` in `residual ~ q^p`
    pub order: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootSeriesReport {
    pub small_root: C64,
    /// `residuals[k]` is the relative error of the `k`-term truncation, `k = 0..=terms`
    pub residuals: Vec<f64>,
    /// `|b^(1-m) / (a1 z q)^(1-m) - 1|` at `q = 1e-6`
    pub small_q_prefactor_residual: f64,
    pub large_roots: [LargeRootFit; 2],
}

impl RootSeriesReport {
    /// Residuals never grow, up to the floating-point floor.
    pub fn non_increasing(&self) -> bool {
        self.residuals
            .windows(2)
            .all(|p| p[1] <= p[0] * (1.0 + 1e-9) || p[1] <= FLOOR)
    }

    /// Residuals for `from..=to` terms strictly decrease.
    pub fn strictly_decreasing(&self, from: usize, to: usize) -> bool {
        self.residuals[from..=to].windows(2).all(|p| p[1] < p[0])
    }

    pub fn passes(&self) -> bool {
        self.non_increasing() && self.large_roots.iter().all(|f| f.order >= 1.5)
    }
}

fn truncation(spec: &SlitSpec, w: &Weights, z: f64, q: f64, terms: usize) -> Result<Vec<C64>> {
    let m = spec.m();
    let a1 = to_f64(w.a1());
    let prefactor = C64::new(a1 * z * q, 0.0).powi(1 - m as i32);
    let mut sum = 1.0;
    let mut out = vec![prefactor * sum];
    for n in 1..=terms {
        // G_{m-1} vanishes identically, and its weight 1/(n-m+1) is singular
        if n + 1 != m {
            let g = g_term(n, spec, w)?.eval_f64(z);
            sum += (1.0 - m as f64) * q.powi(n as i32) * g / (n as f64 + 1.0 - m as f64);
        }
        out.push(prefactor * sum);
    }
    Ok(out)
}

/// Compares truncations of the small-root expansion (at `q = 1`) for
/// `0..=terms` terms with the numerically computed root, and fits the
/// large-root first-order expansions. Requires `terms <= m - 1`.
pub fn root_series_check(
    spec: &SlitSpec,
    w: &Weights,
    z: f64,
    terms: usize,
) -> Result<RootSeriesReport> {
    let m = spec.m();
    if terms > m - 1 {
        return Err(Error::TermIndexOutOfRange {
            n: terms,
            m,
            max: m - 1,
        });
    }
    let power = 1 - m as i32;
    let roots = cubic_roots(z, 1.0, w)?;
    let exact = roots.b.powi(power);
    let residuals = truncation(spec, w, z, 1.0, terms)?
        .into_iter()
        .map(|t| (t - exact).norm() / exact.norm())
        .collect();

    let tiny_q = 1e-6;
    let small = cubic_roots(z, tiny_q, w)?.b;
    let a1 = to_f64(w.a1());
    let small_q_prefactor_residual =
        (small.powi(power) / C64::new(a1 * z * tiny_q, 0.0).powi(power) - 1.0).norm();

    let (_, _, a3) = w.to_f64();
    let quad = quad_roots(z, w);
    let fit = |r: C64, other: C64| -> Result<LargeRootFit> {
        let mut residuals = [0.0; 2];
        let mut linear_terms = [0.0; 2];
        for (k, &q) in LARGE_ROOT_QS.iter().enumerate() {
            let cr = cubic_roots(z, q, w)?;
            let root = if (cr.a - r).norm() <= (cr.c - r).norm() {
                cr.a
            } else {
                cr.c
            };
            let base = r.powi(power);
            let linear = -(1.0 - m as f64) * r.powi(-(m as i32) - 1) * q * a1 / (a3 * (r - other));
            residuals[k] = (root.powi(power) - base - linear).norm() / base.norm();
            linear_terms[k] = linear.norm() / base.norm();
        }
        let order =
            (residuals[0] / residuals[1]).log10() / (LARGE_ROOT_QS[0] / LARGE_ROOT_QS[1]).log10();
        Ok(LargeRootFit {
            quadratic_root: r,
            residuals,
            linear_terms,
            order,
        })
    };

    Ok(RootSeriesReport {
        small_root: roots.b,
        residuals,
        small_q_prefactor_residual,
        large_roots: [fit(quad.r1, quad.r2)?, fit(quad.r2, quad.r1)?],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a1: i64, a2: i64, a3: i64) -> Weights {
        Weights::from_integers(a1, a2, a3).unwrap()
    }

    #[test]
    fn worked_example_converges() {
        let spec = SlitSpec::new(9).unwrap();
        let report = root_series_check(&spec, &w(1, 3, 2), 0.02, 5).unwrap();
        assert_eq!(report.residuals.len(), 6);
        assert!(report.strictly_decreasing(0, 5), "{:?}", report.residuals);
        assert!(report.residuals[5] < 1e-12);
        assert!(report.passes());
    }

    #[test]
    fn prefactor_dominates_as_q_vanishes() {
        let report = root_series_check(&SlitSpec::new(9).unwrap(), &w(1, 3, 2), 0.02, 0).unwrap();
        assert!(report.small_q_prefactor_residual < 1e-4);
        assert_eq!(report.residuals.len(), 1);
    }

    #[test]
    fn large_roots_are_second_order() {
        let report = root_series_check(&SlitSpec::new(9).unwrap(), &w(1, 3, 2), 0.05, 3).unwrap();
        for fit in &report.large_roots {
            assert!((fit.order - 2.0).abs() < 0.2, "order {}", fit.order);
            // second-order remainder is far below the linear correction
            assert!(fit.residuals[1] < 1e-3 * fit.linear_terms[1]);
        }
    }

    #[test]
    fn a2_zero_stalls_on_odd_terms() {
        let report = root_series_check(&SlitSpec::new(9).unwrap(), &w(1, 0, 2), 0.02, 6).unwrap();
        assert!(report.non_increasing());
        assert_eq!(report.residuals[0], report.residuals[1]);
    }

    #[test]
    fn term_limit() {
        let spec = SlitSpec::new(4).unwrap();
        assert!(root_series_check(&spec, &w(1, 1, 1), 0.02, 3).is_ok());
        assert!(root_series_check(&spec, &w(1, 1, 1), 0.02, 4).is_err());
    }
}
