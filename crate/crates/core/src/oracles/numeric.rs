//! Floating-point evaluation of the root-based solution.
//!
//! With `q` marking `-1` steps, the absorption generating function from
//! state `s` solves `f_s = z (q a1 f_{s-1} + a2 f_{s+1} + a3 f_{s+2})` with
//! `f_0 = 1`, `f_m = f_{m+1} = 0`. Its characteristic equation is
//!
//! ```text
//! (a3/a1) x^3 + (a2/a1) x^2 - x / (z a1) + q = 0
//! ```
//!
//! whose small root `b ~ a1 z q` and two large roots `a`, `c` give
//! `f_s = X a^s + Y b^s + W c^s`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::genfun::{SlitSpec, Weights};

pub type C64 = Complex64;

/// Roots of the characteristic cubic at one `(z, q)`; `b` is the small root.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicRoots {
    pub a: C64,
    pub b: C64,
    pub c: C64,
}

impl CubicRoots {
    pub fn as_array(&self) -> [C64; 3] {
        [self.a, self.b, self.c]
    }

    /// Largest relative deviation from Vieta's relations for the monic form
    /// `x^3 + (a2/a3) x^2 - x/(z a3) + q a1/a3`.
    pub fn vieta_residual(&self, z: f64, q: f64, w: &Weights) -> f64 {
        let (a1, a2, a3) = w.to_f64();
        let [a, b, c] = self.as_array();
        let rel = |got: C64, want: f64, scale: f64| (got - want).norm() / scale.max(want.abs());
        let s1 = a + b + c;
        let s2 = a * b + b * c + c * a;
        let s3 = a * b * c;
        let scale1 = a.norm() + b.norm() + c.norm();
        let scale2 = (a * b).norm() + (b * c).norm() + (c * a).norm();
        rel(s1, -a2 / a3, scale1)
            .max(rel(s2, -1.0 / (z * a3), scale2))
            .max(rel(s3, -q * a1 / a3, s3.norm()))
    }
}

/// Roots `R1`, `R2` of the auxiliary quadratic `a3 x^2 + a2 x - 1/z = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadRoots {
    pub r1: C64,
    pub r2: C64,
}

pub fn quad_roots(z: f64, w: &Weights) -> QuadRoots {
    let (_, a2, a3) = w.to_f64();
    let disc = C64::new(a2 * a2 + 4.0 * a3 / z, 0.0).sqrt();
    QuadRoots {
        r1: (-a2 + disc) / (2.0 * a3),
        r2: (-a2 - disc) / (2.0 * a3),
    }
}

/// Evaluates `c[0] x^3 + c[1] x^2 + c[2] x + c[3]`.
pub(crate) fn eval_cubic(c: &[f64; 4], x: C64) -> C64 {
    ((x * c[0] + c[1]) * x + c[2]) * x + c[3]
}

fn cubic_scale(c: &[f64; 4], x: C64) -> f64 {
    let r = x.norm();
    c[0].abs() * r.powi(3) + c[1].abs() * r * r + c[2].abs() * r + c[3].abs()
}

/// All three roots of `c[0] x^3 + c[1] x^2 + c[2] x + c[3]` (Durand–Kerner,
/// then Newton polishing on the original coefficients).
pub fn solve_cubic(c: &[f64; 4]) -> Result<[C64; 3]> {
    if c[0] == 0.0 || !c.iter().all(|x| x.is_finite()) {
        return Err(Error::RootFinder {
            residuals: vec![f64::NAN; 3],
        });
    }
    let monic = [1.0, c[1] / c[0], c[2] / c[0], c[3] / c[0]];
    let bound = 1.0 + monic[1..].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let seed = C64::new(0.4, 0.9);
    let mut roots = [seed * bound, seed.powu(2) * bound, seed.powu(3) * bound];
    for _ in 0..1000 {
        let mut step = 0.0f64;
        for i in 0..3 {
            let mut denom = C64::new(1.0, 0.0);
            for j in 0..3 {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            let delta = eval_cubic(&monic, roots[i]) / denom;
            if delta.is_finite() {
                roots[i] -= delta;
                step = step.max(delta.norm() / roots[i].norm().max(f64::MIN_POSITIVE));
            }
        }
        if step < 1e-15 {
            break;
        }
    }
    for r in roots.iter_mut() {
        for _ in 0..3 {
            let d = (C64::from(3.0 * c[0]) * *r + 2.0 * c[1]) * *r + c[2];
            let delta = eval_cubic(c, *r) / d;
            if delta.is_finite() {
                *r -= delta;
            }
        }
    }
    let residuals: Vec<f64> = roots
        .iter()
        .map(|&r| eval_cubic(c, r).norm() / cubic_scale(c, r))
        .collect();
    if residuals.iter().any(|e| e.is_nan() || *e >= 1e-10) {
        return Err(Error::RootFinder { residuals });
    }
    Ok(roots)
}

pub(crate) fn characteristic_coeffs(z: f64, q: f64, w: &Weights) -> [f64; 4] {
    let (a1, a2, a3) = w.to_f64();
    [a3 / a1, a2 / a1, -1.0 / (z * a1), q]
}

/// Roots of the characteristic cubic; `b` is the root closest to `a1 z q`,
/// `a` the remaining root with the larger real part.
pub fn cubic_roots(z: f64, q: f64, w: &Weights) -> Result<CubicRoots> {
    let coeffs = characteristic_coeffs(z, q, w);
    let roots = solve_cubic(&coeffs)?;
    let target = C64::new(w.to_f64().0 * z * q, 0.0);
    let small = (0..3)
        .min_by(|&i, &j| {
            (roots[i] - target)
                .norm()
                .total_cmp(&(roots[j] - target).norm())
        })
        .unwrap_or(0);
    let mut large: Vec<C64> = (0..3).filter(|&i| i != small).map(|i| roots[i]).collect();
    large.sort_by(|x, y| y.re.total_cmp(&x.re).then(y.im.total_cmp(&x.im)));
    Ok(CubicRoots {
        a: large[0],
        b: roots[small],
        c: large[1],
    })
}

fn check_separation(r: &CubicRoots) -> Result<()> {
    let [a, b, c] = r.as_array();
    let scale = a.norm().max(b.norm()).max(c.norm());
    let gap = (a - b).norm().min((b - c).norm()).min((c - a).norm());
    if gap <= 1e-8 * scale {
        return Err(Error::IllConditioned(format!(
            "roots {a}, {b}, {c} are nearly coincident"
        )));
    }
    Ok(())
}

/// Left-absorption generating function from `m - 1`, evaluated from the
/// cubic roots:
///
/// ```text
/// (a3 / (q a1)) (a-b)(b-c)(c-a) / ((b-c) a^-m + (a-b) c^-m + (c-a) b^-m)
/// ```
pub fn closed_form_numeric(z: f64, q: f64, spec: &SlitSpec, w: &Weights) -> Result<f64> {
    let r = cubic_roots(z, q, w)?;
    check_separation(&r)?;
    let (a1, _, a3) = w.to_f64();
    let m = -(spec.m() as i32);
    let CubicRoots { a, b, c } = r;
    let num = (a - b) * (b - c) * (c - a);
    let den = (b - c) * a.powi(m) + (a - b) * c.powi(m) + (c - a) * b.powi(m);
    let value = num / den * (a3 / (q * a1));
    if !value.is_finite() || den.norm() == 0.0 {
        return Err(Error::IllConditioned("vanishing denominator".into()));
    }
    Ok(value.re)
}

/// Generating function from an arbitrary start `s` in `0..=m+1`: solves the
/// boundary system `X + Y + W = 1`, `X a^m + Y b^m + W c^m = 0`,
/// `X a^(m+1) + Y b^(m+1) + W c^(m+1) = 0`, then returns
/// `X a^s + Y b^s + W c^s`.
pub fn general_start_numeric(
    z: f64,
    q: f64,
    s: usize,
    spec: &SlitSpec,
    w: &Weights,
) -> Result<f64> {
    let m = spec.m();
    if s > m + 1 {
        return Err(Error::StartOutOfRange {
            start: s,
            max: m + 1,
        });
    }
    let r = cubic_roots(z, q, w)?;
    check_separation(&r)?;
    let roots = r.as_array();
    let mut mat = [[C64::new(0.0, 0.0); 3]; 3];
    for (j, x) in roots.iter().enumerate() {
        mat[0][j] = C64::new(1.0, 0.0);
        mat[1][j] = x.powi(m as i32);
        mat[2][j] = x.powi(m as i32 + 1);
    }
    let one = C64::new(1.0, 0.0);
    let coef = solve3(mat, [one, C64::default(), C64::default()]).ok_or(Error::SingularSystem)?;
    let value: C64 = coef
        .iter()
        .zip(roots)
        .map(|(k, x)| k * x.powi(s as i32))
        .sum();
    if !value.is_finite() {
        return Err(Error::SingularSystem);
    }
    Ok(value.re)
}

/// Gaussian elimination with column equilibration and complete pivoting.
fn solve3(mut a: [[C64; 3]; 3], mut rhs: [C64; 3]) -> Option<[C64; 3]> {
    let mut col_scale = [1.0f64; 3];
    for (j, s) in col_scale.iter_mut().enumerate() {
        let norm = (0..3).fold(0.0f64, |acc, i| acc.max(a[i][j].norm()));
        if norm == 0.0 || !norm.is_finite() {
            return None;
        }
        *s = norm;
        for row in a.iter_mut() {
            row[j] /= norm;
        }
    }
    let mut perm = [0usize, 1, 2];
    for k in 0..3 {
        let (mut pi, mut pj, mut best) = (k, k, 0.0f64);
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                if x.norm() > best {
                    (pi, pj, best) = (i, j, x.norm());
                }
            }
        }
        if best < 1e-300 {
            return None;
        }
        a.swap(k, pi);
        rhs.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        perm.swap(k, pj);
        for i in k + 1..3 {
            let f = a[i][k] / a[k][k];
            let pivot = a[k];
            for (x, p) in a[i][k..].iter_mut().zip(&pivot[k..]) {
                *x -= f * p;
            }
            let t = rhs[k];
            rhs[i] -= f * t;
        }
    }
    let mut y = [C64::default(); 3];
    for k in (0..3).rev() {
        let mut acc = rhs[k];
        for j in k + 1..3 {
            acc -= a[k][j] * y[j];
        }
        y[k] = acc / a[k][k];
    }
    let mut x = [C64::default(); 3];
    for k in 0..3 {
        x[perm[k]] = y[k] / col_scale[perm[k]];
    }
    Some(x)
}
