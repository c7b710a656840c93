use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order {n} out of range [1, {max}]")]
    OrderOutOfRange { n: usize, max: usize },

    #[error("horizon must be positive and finite, got {0}")]
    NonPositiveHorizon(f64),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("order reduction requires n >= 2")]
    OrderTooSmall,

    #[error("singular matrix: pivot {pivot:e} below threshold {threshold:e} in column {column}")]
    SingularMatrix {
        column: usize,
        pivot: f64,
        threshold: f64,
    },

    #[error("measure sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("measure has no support points")]
    EmptyMeasure,

    #[error("measure of size {size} exceeds assignment limit {limit}")]
    TooManyPoints { size: usize, limit: usize },

    #[error("cost {total:e} is negative beyond the rounding allowance {allowance:e}")]
    InternalConsistency { total: f64, allowance: f64 },
}
