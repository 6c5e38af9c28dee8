use thiserror::Error;

/// Errors produced by the simulation and analysis chain.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("integrator budget exceeded: {0}")]
    IntegratorBudget(String),

    #[error("numerical check failed: {0}")]
    Numerics(String),

    #[error("infeasible fit grid: {0}")]
    InfeasibleGrid(String),

    #[error("fit failed: {0}")]
    FitFailure(String),

    #[error("histogram error: {0}")]
    Histogram(String),
}
