use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A model evaluation hit a degenerate input (e.g. a vanishing separator
    /// denominator) that would otherwise propagate NaNs.
    #[error("model evaluation failed: {0}")]
    Evaluation(String),

    /// An integrator stage produced a non-finite value.
    #[error("integration failed at stage {stage}: {detail}")]
    Integration { stage: &'static str, detail: String },

    /// Newton iteration did not reach the residual tolerance.
    #[error("steady-state solve did not converge: best residual {best_residual:.3e} after {iterations} iterations")]
    SolverNoConvergence {
        best_residual: f64,
        iterations: usize,
    },

    /// Invalid configuration (empty grids, inconsistent dimensions, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// Shape mismatch in network or vector operations.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A message-exchange round was read before every controller published.
    #[error("message board incomplete: missing entry for subsystem {0}")]
    Synchronization(usize),

    /// Replay buffer holds fewer transitions than the requested batch.
    #[error("replay buffer underflow: have {have}, need {need}")]
    BufferUnderflow { have: usize, need: usize },

    /// A diagnostic's preconditions were violated.
    #[error("diagnostics error: {0}")]
    Diagnostics(String),

    /// Simulation failure inside a rollout, tagged with the step index.
    #[error("rollout failed at step {step}: {source}")]
    Rollout {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    /// Malformed or incompatible checkpoint data.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    #[error("TOML parse error: {0}")]
    Toml(#[from] toml::de::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Wraps a rollout failure with the step at which it occurred.
    pub fn at_step(self, step: usize) -> Error {
        Error::Rollout {
            step,
            source: Box::new(self),
        }
    }
}
