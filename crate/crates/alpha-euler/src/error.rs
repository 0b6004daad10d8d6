//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The truncation window for the boundary trace is too small: the datum
    /// has not decayed below the tail tolerance at the window edge.
    #[error("trace tail too large: |g(+-L)| = {magnitude:.3e} exceeds tolerance {tol:.3e}; grow the window")]
    TailTooLarge { magnitude: f64, tol: f64 },

    /// A reconstruction target lies outside the safe interior of the
    /// periodic window.
    #[error("target x1 = {x1} outside reconstruction window [-{half_width}, {half_width}]")]
    TargetOutsideWindow { x1: f64, half_width: f64 },

    /// Adaptive quadrature exhausted its refinement budget.
    #[error("quadrature did not converge within {evals} evaluations (error estimate {err_estimate:.3e})")]
    QuadratureNoConvergence { evals: usize, err_estimate: f64 },

    /// Grid spacing too coarse for the requested finite-difference stencils.
    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    /// A particle would leave the open half-plane during a time step.
    #[error("particle {particle} would cross the boundary at dt = {dt}")]
    BoundaryCrossing { particle: usize, dt: f64 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("parse error in {path}: {msg}")]
    Parse { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
