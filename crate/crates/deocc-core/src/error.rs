//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an operation's inputs was violated.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Invalid configuration (bad ranges, impossible geometry, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// Scene generation could not satisfy its constraints.
    #[error("generation failed for figure seed {seed}: {reason}")]
    Generation { seed: u64, reason: String },

    /// Training diverged or produced non-finite losses.
    #[error("training error at step {step}: {reason}")]
    Training { step: usize, reason: String },

    /// Reverse-diffusion sampling produced non-finite values.
    #[error("sampling error at timestep {step}: {reason}")]
    Sampling { step: usize, reason: String },

    /// Per-image decoder optimization failed.
    #[error("optimization error at step {step}: {reason}")]
    Optimization { step: usize, reason: String },

    /// Inference produced invalid output.
    #[error("inference error in {stage}: {reason}")]
    Inference { stage: String, reason: String },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Candle(#[from] candle_core::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Image(#[from] image::ImageError),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
