//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SkpError {
    /// Invalid configuration (grid too small, mode count out of range, bad solver knobs).
    #[error("configuration error: {0}")]
    Config(String),

    /// A structural hypothesis on the reaction term is violated.
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    /// A state or intermediate quantity is NaN/inf.
    #[error("non-finite value encountered in {0}")]
    NonFinite(String),

    /// A solver hit its iteration cap with the residual still above tolerance.
    #[error("no convergence after {iterations} iterations (residual {residual:.3e} > tol {tol:.3e})")]
    NonConvergence {
        iterations: usize,
        residual: f64,
        tol: f64,
    },

    /// Cone-neighborhood calibration failed; retry with the suggested radius.
    #[error("cone contraction fails at mu = {mu:.3e}; suggested mu = {suggested:.3e}")]
    Calibration { mu: f64, suggested: f64 },
}

pub type Result<T> = std::result::Result<T, SkpError>;
