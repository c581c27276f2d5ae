use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("cannot parse {what}: offending token {token:?}")]
    Parse { what: &'static str, token: String },

    #[error("insufficient evaluation points: rank {rank} of {cols} columns")]
    InsufficientEvaluationPoints { rank: usize, cols: usize },

    #[error("inconsistent linear system at row {row}")]
    Inconsistent { row: usize },

    /// A quantity a theorem forces to be a non-negative integer was not.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
