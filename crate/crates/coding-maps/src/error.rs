//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("parse error at index {index}: {message}")]
    Parse { index: usize, message: String },

    #[error("channel is not completely positive: {0}")]
    NotCompletelyPositive(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("recovery table error: {0}")]
    Recovery(String),

    #[error("symbolic composition exceeds the term cap ({cap} terms per polynomial); use numeric iteration instead")]
    TermCapExceeded { cap: usize },

    #[error("coefficient overflow in exact arithmetic")]
    CoefficientOverflow,

    #[error("no finite threshold: {0}")]
    NoThreshold(String),

    #[error("register too large for the dense oracle: n = {0} (limit 5)")]
    OracleTooLarge(usize),

    #[error("unknown code {0:?}; known catalog names: {1}")]
    UnknownCode(String, String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
