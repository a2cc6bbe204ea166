use thiserror::Error;

/// Errors raised by the library.
///
/// Every public index appearing in a message is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size {requested} exceeds the enumeration capacity {limit}")]
    Capacity { requested: usize, limit: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("rank table does not come from an involution: {0}")]
    Reconstruction(String),

    #[error("partial-order axiom violated: {0}")]
    Axiom(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}
