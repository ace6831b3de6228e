//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid model, input data, or argument.
    #[error("validation error: {0}")]
    Validation(String),

    /// Vector or matrix dimensions do not match the model.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A matrix that the theory guarantees invertible failed to factor.
    #[error("singular matrix: {0}")]
    SingularMatrix(String),

    /// An enumeration or exhaustive computation exceeded its guard.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// An iterative scheme failed to reach its tolerance.
    #[error("convergence failure: {0}")]
    ConvergenceFailure(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
