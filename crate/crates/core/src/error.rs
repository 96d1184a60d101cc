use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("spectrum is empty")]
    EmptyInput,

    #[error("entry {index} is not a finite number")]
    NonFinite { index: usize },

    #[error("entry {index} is negative ({value})")]
    NegativeWeight { index: usize, value: f64 },

    #[error("entries sum to {sum}, expected 1")]
    NotNormalized { sum: f64 },

    #[error("{name} = {value} lies outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("source parameter a = {a} must be strictly below target parameter b = {b}")]
    NotOrdered { a: f64, b: f64 },

    #[error("target parameter b = 1 (product state) is not a valid recovery problem")]
    ProductTarget,

    #[error("tolerance {eps} must lie in (0, 1e-3)")]
    InvalidTolerance { eps: f64 },

    #[error("grid resolution {n} must lie in [1, {max}]")]
    ResolutionTooLarge { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
