use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-invertible series: constant term is zero")]
    NonInvertibleSeries,

    #[error("term index out of range: n = {n} not in 1..={max} for m = {m}")]
    TermIndexOutOfRange { n: usize, m: usize, max: usize },

    #[error("special case requires a2 = 0")]
    NonZeroA2,

    #[error("enumeration budget exceeded: order {order} > limit {limit}")]
    EnumerationBudget { order: usize, limit: usize },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid barrier position m = {0}; need m >= 2")]
    InvalidBarrier(usize),

    #[error("order {order} is below m - 1 = {min}")]
    OrderTooSmall { order: usize, min: usize },

    #[error("start state {start} outside 0..={max}")]
    StartOutOfRange { start: usize, max: usize },

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("root finder did not converge; residuals {residuals:?}")]
    RootFinder { residuals: Vec<f64> },

    #[error("ill-conditioned root configuration: {0}")]
    IllConditioned(String),

    #[error("singular boundary system")]
    SingularSystem,

    #[error("discriminant vanishes")]
    DiscriminantVanishes,
}
