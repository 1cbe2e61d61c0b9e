//! Exact absorption generating functions for weighted directed paths with
//! steps `+2`, `+1` and `-1` confined between two absorbing barriers.
//!
//! A walker starts at state `m - 1`. States `0`, `m` and `m + 1` absorb.
//! Each `-1` step carries weight `a1`, each `+1` step `a2` and each `+2`
//! step `a3`. The generating function `f(z, m)` has as coefficient of `z^n`
//! the total weight of walks absorbed at `0` after exactly `n` steps, and is
//! of the form
//!
//! ```text
//! f(z, m) = a1^(m-1) z^(m-1) / (1 + G_1(z) + ... + G_N(z)),   N = floor(2(m-1)/3)
//! ```
//!
//! where each `G_n` is an explicit polynomial built from binomials and a
//! Chebyshev-like coefficient table ([`genfun::g_term`]).
//!
//! The crate is organised as:
//!
//! - [`exact`]: rationals, dense polynomials in `z`, binomials, the `V_k` table
//!   and power-series inversion.
//! - [`genfun`]: the closed-form denominator and generating function.
//! - [`oracles`]: independent ground truth (transition-matrix powers, brute
//!   force path enumeration, Faddeev–LeVerrier characteristic polynomial,
//!   floating-point root formulas and identity checks).
//! - [`harness`]: verification sweeps producing serialisable reports.
//!
//! ```
//! use slitpath_core::{genfun, SlitSpec, Weights};
//!
//! let spec = SlitSpec::new(9).unwrap();
//! let w = Weights::from_integers(1, 3, 2).unwrap();
//! let gf = genfun::genfun(&spec, &w, 12).unwrap();
//! assert_eq!(gf.denominator().to_string(),
//!            "1 - 21z^2 - 12z^3 + 135z^4 + 120z^5 - 246z^6 - 216z^7 + 45z^8");
//! assert_eq!(gf.coefficient(12).to_string(), "306");
//! ```

pub mod error;
pub mod exact;
pub mod genfun;
pub mod harness;
pub mod oracles;

pub use error::{Error, Result};
pub use exact::{binom, cheb_v, series_inverse, BigRat, ChebV, Poly};
pub use genfun::{min_terms, GenFun, SlitSpec, Weights};
pub use harness::{OracleSet, SeriesOrder, SweepConfig, VerificationReport};
