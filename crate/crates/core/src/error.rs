use thiserror::Error;

/// Errors raised by the counting, series and bijection routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input value lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A composition query that does not describe a finite set.
    #[error("invalid composition query: {0}")]
    Query(String),

    #[error("invalid pattern {0:?}: not a permutation of 1..m with m >= 2")]
    InvalidPattern(Vec<u32>),

    /// Series inversion needs a leading coefficient of +1 or -1.
    #[error("series is not invertible over the integers: {0}")]
    NotInvertible(String),

    /// Exact polynomial division left a nonzero remainder.
    #[error("polynomial division is not exact: {0}")]
    NotDivisible(String),

    /// A generating function produced a value that cannot be a count.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    /// A map was applied to a word outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
