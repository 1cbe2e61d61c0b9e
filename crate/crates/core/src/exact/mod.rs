//! Exact arithmetic: rationals, dense polynomials in `z`, binomials with a
//! possibly negative upper index, the `V_k` coefficient table and power
//! series inversion.

mod cheb;
mod poly;
mod series;

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use cheb::{cheb_v, ChebTable, ChebV};
pub use poly::Poly;
pub use series::series_inverse;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type BigRat = num_rational::BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Generalised binomial coefficient `top (top-1) ... (top-bottom+1) / bottom!`.
///
/// Defined for every integer `top`, so `binom(-2, 3) = -4`.
pub fn binom(top: i64, bottom: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..bottom {
        acc *= BigInt::from(top) - BigInt::from(i);
    }
    let mut fact = BigInt::one();
    for i in 2..=bottom {
        fact *= BigInt::from(i);
    }
    acc / fact
}

pub(crate) fn pow(base: &BigRat, exp: usize) -> BigRat {
    num_traits::pow(base.clone(), exp)
}

pub fn to_f64(x: &BigRat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"0.25"`.
pub fn parse_rational(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let err = || Error::ParseRational(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(BigRat::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = int.trim_start().starts_with('-');
        let int = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(int).map_err(|_| err())?
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac = BigRat::new(BigInt::from_str(frac).map_err(|_| err())?, scale);
        let whole = BigRat::from_integer(int.abs()) + frac;
        return Ok(if negative { -whole } else { whole });
    }
    BigInt::from_str(s)
        .map(BigRat::from_integer)
        .map_err(|_| err())
}

/// Canonical machine form: always `"p/q"`, including integers (`"3/1"`).
pub fn format_rational(x: &BigRat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binom_examples() {
        assert_eq!(binom(5, 3), BigInt::from(10));
        assert_eq!(binom(-2, 3), BigInt::from(-4));
        assert_eq!(binom(7, 0), BigInt::from(1));
        assert_eq!(binom(-3, 1), BigInt::from(-3));
        assert_eq!(binom(3, 5), BigInt::from(0));
        assert_eq!(binom(0, 0), BigInt::from(1));
    }

    #[test]
    fn pascal_rule_holds_for_negative_tops() {
        for top in -20i64..=20 {
            for bottom in 1usize..=20 {
                assert_eq!(
                    binom(top, bottom),
                    binom(top - 1, bottom - 1) + binom(top - 1, bottom),
                    "top={top} bottom={bottom}"
                );
            }
        }
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational(" 2/4 ").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-1/3").unwrap(), ratio(-1, 3));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        for bad in ["", "x", "1/0", "1.", "1/2/3", "1.2.3", "0.-5"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn zero_is_canonical() {
        let z = ratio(0, -7);
        assert_eq!(format_rational(&z), "0/1");
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
    }

    proptest! {
        #[test]
        fn format_then_parse_is_identity(n in -10_000i64..10_000, d in 1i64..10_000) {
            let x = ratio(n, d);
            prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
        }
    }
}
