use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: n = {left} vs n = {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("input must be real-valued")]
    NotReal,

    #[error("input must have zero average, got {0}")]
    NonZeroAverage(String),

    #[error("vector field is not tangential: {0}")]
    NotTangential(String),

    #[error("lowered form is not symmetric on frame pair ({0}, {1})")]
    SymmetryViolation(String, String),

    #[error("unsupported dimension n = {n}: {reason}")]
    UnsupportedDimension { n: usize, reason: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("singular linear system in structure solver")]
    Singular,

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
