//! The closed-form absorption generating function.
//!
//! For a walker started at `m - 1` the generating function is
//!
//! ```text
//! f(z, m) = a1^(m-1) z^(m-1) / D(z),   D(z) = 1 + G_1(z) + ... + G_N(z),
//! ```
//!
//! with `N = floor(2(m-1)/3)` and
//!
//! ```text
//! G_n(z) = [n even] (-1)^(n/2) C(m-1-n, n/2)^2 a1^n a3^(n/2) z^(3n/2)
//!        + sum_{u=0}^{floor((n-1)/2)} 2 (-1)^(n+u) C(m-1-n, u) C(m-1-n, n-u) a1^n
//!              * sum_{j=0}^{floor(k/2)} t[k][j] (a2/2)^(k-2j) a3^(u+j) z^(2n-u-j),   k = n - 2u,
//! ```
//!
//! where `t[k][j]` are the coefficients of [`ChebV`](crate::exact::ChebV). The
//! cosine-of-arccos form with half powers of `z` and `a3` collapses to this
//! integer-power form through `T_k(i y) = i^k V_k(y)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    binom, cheb_v, format_rational, parse_rational, pow, series_inverse, BigRat, Poly,
};

/// Step weights: `a1` for `-1`, `a2` for `+1`, `a3` for `+2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weights {
    a1: BigRat,
    a2: BigRat,
    a3: BigRat,
}

impl Weights {
    /// Requires `a1 > 0`, `a3 > 0` and `a2 >= 0`.
    pub fn new(a1: BigRat, a2: BigRat, a3: BigRat) -> Result<Self> {
        if !a1.is_positive() {
            return Err(Error::InvalidWeights(format!(
                "a1 must be positive, got {a1}"
            )));
        }
        if a2.is_negative() {
            return Err(Error::InvalidWeights(format!(
                "a2 must be non-negative, got {a2}"
            )));
        }
        if !a3.is_positive() {
            return Err(Error::InvalidWeights(format!(
                "a3 must be positive, got {a3}"
            )));
        }
        Ok(Self { a1, a2, a3 })
    }

    pub fn from_integers(a1: i64, a2: i64, a3: i64) -> Result<Self> {
        use crate::exact::rat;
        Self::new(rat(a1), rat(a2), rat(a3))
    }

    pub fn a1(&self) -> &BigRat {
        &self.a1
    }

    pub fn a2(&self) -> &BigRat {
        &self.a2
    }

    pub fn a3(&self) -> &BigRat {
        &self.a3
    }

    pub fn to_f64(&self) -> (f64, f64, f64) {
        use crate::exact::to_f64;
        (to_f64(&self.a1), to_f64(&self.a2), to_f64(&self.a3))
    }
}

/// Parses `"a1,a2,a3"`, each component an integer, `p/q` or decimal literal.
impl FromStr for Weights {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidWeights(format!(
                "expected three comma-separated weights a1,a2,a3, got {s:?}"
            )));
        }
        Self::new(
            parse_rational(parts[0])?,
            parse_rational(parts[1])?,
            parse_rational(parts[2])?,
        )
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a1, self.a2, self.a3)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightsRepr {
    a1: String,
    a2: String,
    a3: String,
}

/// Serialised as `{"a1": "p/q", "a2": "p/q", "a3": "p/q"}`.
impl Serialize for Weights {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        WeightsRepr {
            a1: format_rational(&self.a1),
            a2: format_rational(&self.a2),
            a3: format_rational(&self.a3),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Weights {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = WeightsRepr::deserialize(deserializer)?;
        let p = |s: &str| parse_rational(s).map_err(D::Error::custom);
        Weights::new(p(&r.a1)?, p(&r.a2)?, p(&r.a3)?).map_err(D::Error::custom)
    }
}

/// Barrier geometry: states `0`, `m`, `m + 1` absorb, `1..=m-1` are interior,
/// and the walk starts at `m - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SlitSpec {
    m: usize,
}

impl SlitSpec {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidBarrier(m));
        }
        Ok(Self { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn start(&self) -> usize {
        self.m - 1
    }
}

/// Number of `G_n` terms in the denominator: `floor(2(m-1)/3)`.
pub fn min_terms(m: usize) -> usize {
    2 * m.saturating_sub(1) / 3
}

/// `G_n(z)` for `1 <= n <= m - 1`.
///
/// Every exponent lies in `[ceil(3n/2), min(2n, m-1)]`: the binomials with
/// top `m-1-n` vanish exactly where the exponent would exceed `m - 1`.
pub fn g_term(n: usize, spec: &SlitSpec, w: &Weights) -> Result<Poly> {
    let m = spec.m();
    if n == 0 || n > m - 1 {
        return Err(Error::TermIndexOutOfRange { n, m, max: m - 1 });
    }
    let top = (m - 1 - n) as i64;
    let a1n = pow(w.a1(), n);
    let half_a2 = w.a2() / BigRat::from_integer(2.into());
    let mut coeffs = vec![BigRat::zero(); 2 * n + 1];

    if n.is_multiple_of(2) {
        let b = BigRat::from_integer(binom(top, n / 2));
        let mut c = &b * &b * &a1n * pow(w.a3(), n / 2);
        if (n / 2) % 2 == 1 {
            c = -c;
        }
        coeffs[3 * n / 2] += c;
    }

    for u in 0..=(n - 1) / 2 {
        let outer = binom(top, u) * binom(top, n - u);
        if outer.is_zero() {
            continue;
        }
        let mut outer = BigRat::from_integer(outer * 2) * &a1n;
        if (n + u) % 2 == 1 {
            outer = -outer;
        }
        let k = n - 2 * u;
        for (j, t) in cheb_v(k).coeffs().iter().enumerate() {
            let c = &outer
                * BigRat::from_integer(t.clone())
                * pow(&half_a2, k - 2 * j)
                * pow(w.a3(), u + j);
            coeffs[2 * n - u - j] += c;
        }
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// `1 + G_1 + ... + G_terms`.
pub fn partial_denominator(spec: &SlitSpec, w: &Weights, terms: usize) -> Result<Poly> {
    let mut d = Poly::one();
    for n in 1..=terms {
        d += &g_term(n, spec, w)?;
    }
    Ok(d)
}

/// The full denominator `D(z)`, of degree at most `m - 1` with constant term 1.
pub fn denominator(spec: &SlitSpec, w: &Weights) -> Poly {
    let d = partial_denominator(spec, w, min_terms(spec.m()))
        .expect("min_terms(m) <= m - 1 for every m >= 2");
    assert!(
        d.degree().unwrap_or(0) < spec.m(),
        "denominator degree {:?} exceeds m - 1 = {}",
        d.degree(),
        spec.m() - 1
    );
    d
}

/// Denominator for `a2 = 0`: `1 + sum_{n >= 1, 3n < m} (a1^2 a3)^n C(3n - m, n) z^(3n)`.
pub fn denominator_a2_zero(spec: &SlitSpec, w: &Weights) -> Result<Poly> {
    if !w.a2().is_zero() {
        return Err(Error::NonZeroA2);
    }
    let m = spec.m();
    let base = w.a1() * w.a1() * w.a3();
    let mut d = Poly::one();
    for n in (1..).take_while(|n| 3 * n < m) {
        let c = pow(&base, n) * BigRat::from_integer(binom(3 * n as i64 - m as i64, n));
        d += &Poly::monomial(c, 3 * n);
    }
    Ok(d)
}

/// `z^shift * scale / denominator`, together with its expansion `c_0..=c_order`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenFun {
    numerator_shift: usize,
    numerator_scale: BigRat,
    denominator: Poly,
    series: Vec<BigRat>,
}

impl GenFun {
    /// Expands `scale * z^shift / denominator` through `z^order`.
    pub fn from_parts(
        shift: usize,
        scale: BigRat,
        denominator: Poly,
        order: usize,
    ) -> Result<Self> {
        if order < shift {
            return Err(Error::OrderTooSmall { order, min: shift });
        }
        let inverse = series_inverse(&denominator, order - shift)?;
        let mut series = vec![BigRat::zero(); shift];
        series.extend(inverse.into_iter().map(|c| c * &scale));
        Ok(Self {
            numerator_shift: shift,
            numerator_scale: scale,
            denominator,
            series,
        })
    }

    pub fn numerator_shift(&self) -> usize {
        self.numerator_shift
    }

    pub fn numerator_scale(&self) -> &BigRat {
        &self.numerator_scale
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    /// `c_0..=c_order`.
    pub fn series(&self) -> &[BigRat] {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.len() - 1
    }

    pub fn coefficient(&self, n: usize) -> BigRat {
        self.series.get(n).cloned().unwrap_or_else(BigRat::zero)
    }

    /// `sum_{n <= upto} c_n z^n` in floating point.
    pub fn eval_truncated(&self, z: f64, upto: usize) -> f64 {
        self.series
            .iter()
            .take(upto + 1)
            .rev()
            .fold(0.0, |acc, c| acc * z + crate::exact::to_f64(c))
    }

    /// The expansion as a polynomial (handy for display).
    pub fn series_poly(&self) -> Poly {
        Poly::from_coeffs(self.series.clone())
    }
}

impl fmt::Display for GenFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = Poly::monomial(self.numerator_scale.clone(), self.numerator_shift);
        if self.denominator == Poly::one() {
            write!(f, "{num}")
        } else {
            write!(f, "{num} / ({})", self.denominator)
        }
    }
}

/// Generating function for the walk started at `m - 1`, expanded through `z^order`.
pub fn genfun(spec: &SlitSpec, w: &Weights, order: usize) -> Result<GenFun> {
    let shift = spec.m() - 1;
    GenFun::from_parts(shift, pow(w.a1(), shift), denominator(spec, w), order)
}

/// Same as [`genfun`] but through the single-sum denominator valid for `a2 = 0`.
pub fn genfun_a2_zero(spec: &SlitSpec, w: &Weights, order: usize) -> Result<GenFun> {
    let d = denominator_a2_zero(spec, w)?;
    let shift = spec.m() - 1;
    GenFun::from_parts(shift, pow(w.a1(), shift), d, order)
}
