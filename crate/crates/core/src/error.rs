use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is complete")]
    CompleteGraph,
    #[error("set is not a vertex cover: edge {0}-{1} is uncovered")]
    NotACover(usize, usize),
    #[error("cannot project fort to a cover: {0}")]
    ProjectionFailed(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
