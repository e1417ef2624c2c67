use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("vertex {vertex} out of range (instance has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search too large: {0}")]
    TooLarge(String),

    #[error("seed set is not a target set")]
    NotTargetSet,

    #[error("circuit has no satisfying assignment")]
    Unsatisfiable,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}
