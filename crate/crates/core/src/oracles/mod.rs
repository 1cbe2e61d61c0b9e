//! Independent ground truth for the closed form.
//!
//! The exact oracles ([`matrix`], [`charpoly`], [`enumerate`]) share nothing
//! with [`crate::genfun`] beyond the input types. The floating-point oracles
//! ([`numeric`], [`reduction`], [`root_series`]) evaluate the root-based
//! formulas the closed form is derived from.

pub mod charpoly;
pub mod enumerate;
pub mod matrix;
pub mod numeric;
pub mod reduction;
pub mod root_series;

pub use charpoly::{faddeev_leverrier, interior_charpoly};
pub use enumerate::{enumerate_paths, enumerate_paths_from, DEFAULT_MAX_ENUM};
pub use matrix::{build_matrix, matrix_series, TransitionMatrix};
pub use numeric::{
    closed_form_numeric, cubic_roots, general_start_numeric, quad_roots, CubicRoots, QuadRoots,
};
pub use reduction::{reduction_identity_check, Cubic, ReductionReport};
pub use root_series::{root_series_check, RootSeriesReport};
