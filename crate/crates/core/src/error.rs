use thiserror::Error;

/// Errors raised by the exact arithmetic and the verification drivers.
///
/// A failing identity is never an error: checks report failures through
/// [`crate::identities::CheckReport`]. Errors mean a precondition was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact: {0}")]
    InexactDivision(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("not a rational integer; coordinates {0:?}")]
    NotAnInteger(Vec<String>),
    #[error("independent computations disagree: {0}")]
    Inconsistent(String),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
