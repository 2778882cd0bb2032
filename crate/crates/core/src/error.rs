//! Shared error type for the toolkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid configuration (bad parameters, malformed specs).
    #[error("configuration error: {0}")]
    Config(String),

    /// Numerical failure (non-convergent quadrature, non-finite state).
    #[error("numerical error: {0}")]
    Numerical(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// A statistical estimator could not produce a value.
    #[error("estimation error: {0}")]
    Estimation(String),

    /// Query outside the range covered by the data.
    #[error("range error: {0}")]
    Range(String),
}

pub type Result<T> = std::result::Result<T, Error>;
