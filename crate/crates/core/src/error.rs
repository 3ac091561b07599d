//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violates its documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Configuration values are inconsistent or out of range.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// Two tensors that must share a shape do not.
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    /// A computation produced a non-finite value where one is not allowed.
    #[error("non-finite value in {0}")]
    NonFinite(String),

    /// The optimizer hit a non-finite objective; the trace up to that point
    /// is preserved inside the error.
    #[error("optimization diverged at iteration {iter}")]
    Diverged {
        iter: usize,
        trace: crate::design::OptimizationTrace,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("image error: {0}")]
    Image(#[from] image::ImageError),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid_argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn invalid_config(msg: impl Into<String>) -> Self {
        Error::InvalidConfig(msg.into())
    }

    pub fn shape_mismatch(expected: impl Into<String>, got: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            expected: expected.into(),
            got: got.into(),
        }
    }
}
