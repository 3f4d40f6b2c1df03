use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cycle type mismatch: expected {expected}, found {found}")]
    CycleTypeMismatch { expected: String, found: String },

    #[error("invalid marking: {0}")]
    InvalidMarking(String),

    #[error("invalid marked tuple: {0}")]
    InvalidTuple(String),

    #[error("invalid Hurwitz space: {0}")]
    InvalidSpec(String),

    #[error("invalid value for {flag}: {message}")]
    Flag { flag: &'static str, message: String },

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("golden file line {line}, column {column}: {message}")]
    Golden {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    /// A broken internal invariant. Never caused by user input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
