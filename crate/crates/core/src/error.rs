use thiserror::Error;

/// Errors raised by the library. Every fallible operation returns [`Result`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix {0} is not Hermitian")]
    NotHermitian(String),
    #[error("matrix {0} is not positive semi-definite")]
    NotPsd(String),
    #[error("equation is not solvable: {0}")]
    Unsolvable(String),
    #[error("range hypothesis violated: {0}")]
    RangeHypothesisViolated(String),
    #[error("formula value {value} for {quantity} lies outside [0, {order}]")]
    FormulaRange {
        quantity: String,
        value: i64,
        order: usize,
    },
    #[error("unsupported query: {0}")]
    UnsupportedQuery(String),
    #[error("closed-condition and profile routes disagree: {0}")]
    RouteDisagreement(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim(msg: impl Into<String>) -> Error {
    Error::DimensionMismatch(msg.into())
}
