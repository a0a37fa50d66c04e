use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not contained: {0}")]
    NotContained(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("insufficient degrees: {0}")]
    InsufficientDegrees(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
