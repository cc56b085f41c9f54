//! Crate-wide error type, aligned with the CLI exit-code contract:
//! 2 = input error, 3 = cap exceeded, 4 = numeric-tolerance failure.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: shape/field mismatch, bad file, invalid parameter.
    #[error("input error: {0}")]
    Input(String),

    /// An enumeration or search cap was exceeded.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    /// A float-mode structural check failed its tolerance (leaky witness,
    /// residual too large, forced block not zero).
    #[error("tolerance failure: {0}")]
    Tolerance(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// CLI exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Io(_) | Error::Json(_) => 2,
            Error::CapExceeded(_) => 3,
            Error::Tolerance(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
