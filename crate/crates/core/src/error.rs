use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Lie type: {0}")]
    UnsupportedType(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("weight {0} is not dominant integral")]
    NotDominant(String),
    #[error("module dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("filtration degree {degree} exceeds truncation {cap}")]
    Truncation { degree: usize, cap: usize },
    #[error("element is not central: {0}")]
    NotCentral(String),
    #[error("algebra mismatch: {0}")]
    Mismatch(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
