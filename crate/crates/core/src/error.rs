use thiserror::Error;

/// Errors raised by element operations, predicates and sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("universe too large: {what} with n = {n} exceeds the limit n <= {limit}")]
    UniverseTooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("suite `{suite}` does not support {kind} with n = {n}")]
    UnsupportedSuite {
        suite: String,
        kind: String,
        n: usize,
    },

    #[error("universe mismatch: {left} vs {right}")]
    UniverseMismatch { left: String, right: String },

    /// A witness produced by the library failed its own defining laws.
    /// This indicates a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}
