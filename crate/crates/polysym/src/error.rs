use thiserror::Error;

/// Errors surfaced by the exact-algebra layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Two values live in incompatible variable spaces (different dims,
    /// symbol counts or degree caps).
    #[error("variable space mismatch: {0}")]
    SpaceMismatch(String),

    /// An argument is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured resource bound (dimension, time) was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A weight table admits no decomposition with nonnegative
    /// multiplicities; signals a bug upstream of the decomposition.
    #[error("not a polynomial character: {0}")]
    NotPolynomialCharacter(String),

    /// An internal cross-check failed; indicates a bug, never bad input.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
