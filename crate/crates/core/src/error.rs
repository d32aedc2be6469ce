use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("dense oracle limited to {limit} nodes, graph has {nodes}")]
    TooLarge { nodes: usize, limit: usize },

    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(String),

    #[error("non-finite value after {iterations} iterations")]
    NonFinite { iterations: usize },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
