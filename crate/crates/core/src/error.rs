//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by quadrature, special functions and the error-analysis
/// engine.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum OscqError {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Intermediate exponentials would exceed the floating-point range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// An iterative scheme failed to converge.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// The requested quantity is not available for these inputs (no
    /// closed-form reference, no bound, no inverse).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The saddle-point formula degenerates (p''(w1) ~ 0).
    #[error("degenerate saddle: {0}")]
    DegenerateSaddle(String),
}

pub type Result<T> = std::result::Result<T, OscqError>;
