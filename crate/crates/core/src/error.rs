use thiserror::Error;

/// Errors raised by the exact-arithmetic evaluators and classifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("pole of order {order} at the specialization")]
    Pole { order: u64 },
    #[error("zero of positive order {order} at the specialization")]
    ZeroOfPositiveOrder { order: u64 },
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
    #[error("{0} is not a {1}-core")]
    NotACore(String, usize),
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("classification failure: {0}")]
    ClassificationFailure(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
