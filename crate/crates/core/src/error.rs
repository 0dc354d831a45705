use thiserror::Error;

/// Errors raised by the combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} exceeds the configured bound {max}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not in the integer span of Schur functions")]
    NotInSchurSpan,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A proven identity failed to hold. Seeing this means a bug, or a
    /// counterexample to the underlying theorem.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
