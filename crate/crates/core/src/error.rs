//! Shared error type for the simulation and statistics modules.

/// Errors surfaced by the numerical core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// `quantile(1)` requested for a model whose right endpoint is infinite.
    #[error("quantile at u = 1 is unbounded (infinite right endpoint)")]
    Unbounded,

    /// The requested constants are not defined for this model.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A step-process time lies beyond the tabulated index range; the
    /// sequence must be constructed with a larger cap.
    #[error("time {horizon} runs past the tabulated range (index cap {cap})")]
    Horizon { horizon: f64, cap: usize },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature tolerance {tol:e} not met (error estimate {err:e})")]
    Quadrature { tol: f64, err: f64 },

    /// A statistic was requested of an empty sample.
    #[error("empty sample")]
    EmptyInput,

    /// A deterministic flow contracted below the smallest positive normal
    /// float; the state can no longer be represented faithfully.
    #[error("flow underflowed below the smallest positive normal float")]
    FlowUnderflow,
}

pub type Result<T> = std::result::Result<T, Error>;
