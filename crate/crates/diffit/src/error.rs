//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, DiffitError>;

#[derive(Debug, Error)]
pub enum DiffitError {
    /// Tensor shapes do not conform to the contract of the named op.
    #[error("shape mismatch in `{op}`: {detail}")]
    Shape { op: &'static str, detail: String },

    /// An op produced NaN or Inf. Silent propagation is forbidden; the first
    /// offending op fails fast.
    #[error("non-finite value produced by `{op}`{context}")]
    NonFinite { op: &'static str, context: String },

    /// An API precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Invalid model or run configuration.
    #[error("invalid config: {0}")]
    Config(String),

    /// Malformed, truncated, or corrupted checkpoint file.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl DiffitError {
    pub fn shape(op: &'static str, detail: impl Into<String>) -> Self {
        DiffitError::Shape {
            op,
            detail: detail.into(),
        }
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        DiffitError::Contract(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        DiffitError::Config(msg.into())
    }

    pub fn checkpoint(msg: impl Into<String>) -> Self {
        DiffitError::Checkpoint(msg.into())
    }

    /// Attach step context to a numeric error (used by the training loop).
    pub fn with_step(self, step: usize) -> Self {
        match self {
            DiffitError::NonFinite { op, context } => DiffitError::NonFinite {
                op,
                context: format!("{context} (at training step {step})"),
            },
            other => other,
        }
    }
}
