use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("no path from {start} to {goal}")]
    NoPath { start: usize, goal: usize },

    #[error("graph has {vertices} vertices, exhaustive enumeration is limited to {limit}")]
    GraphTooLarge { vertices: usize, limit: usize },

    #[error("unknown destroy heuristic `{0}`")]
    UnknownHeuristic(String),

    #[error("repair could not reconnect the partial solution")]
    RepairFailed,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("environment error: {0}")]
    Environment(String),

    #[error("linear program failed: {0}")]
    Lp(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
