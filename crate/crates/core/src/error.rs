use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position} in {input:?}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("position {position} out of range 1..={arity}")]
    PositionOutOfRange { position: usize, arity: usize },

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("arity mismatch: expected {expected}, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },

    #[error("element is not homogeneous in arity")]
    Inhomogeneous,

    #[error("{0} is not a subset of 1..={1}")]
    NotASubset(String, usize),

    #[error("arity bound mismatch: {0} vs {1}")]
    BoundMismatch(usize, usize),

    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("operad structure check failed: {0}")]
    Structure(String),

    #[error("arity {arity} exceeds the cap {cap}")]
    ArityCap { arity: usize, cap: usize },

    #[error("invalid JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
