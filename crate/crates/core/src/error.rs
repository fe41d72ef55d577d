use thiserror::Error;

/// Errors raised by partition construction, the bijections and series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty partition rejected")]
    EmptyPartition,
    #[error("invalid part {0}: parts must be positive integers")]
    InvalidPart(i64),
    #[error("invalid n {0}: n must be at least 1")]
    InvalidN(i64),
    #[error("cannot parse partition literal {0:?}")]
    Parse(String),
    /// Input lies outside the domain of a map; the message names the violated precondition.
    #[error("{input}: {reason}")]
    Domain { input: String, reason: String },
    #[error("degenerate input {0}: {1}")]
    Degenerate(String, String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("mismatched truncation windows: {0:?} vs {1:?}")]
    WindowMismatch((usize, usize), (usize, usize)),
    #[error("non-invertible grading: factor 1 - z^{bz} q^{bq} has constant term 1")]
    NonInvertible { bq: usize, bz: usize },
    #[error("undefined Pochhammer subscript {0}")]
    UndefinedPochhammer(i64),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("inexact polynomial division")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(input: impl ToString, reason: impl Into<String>) -> Self {
        Error::Domain {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
