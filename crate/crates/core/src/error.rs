use thiserror::Error;

use crate::graph::{Path, PathViolation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("graph invariant violated: {0}")]
    Invariant(String),

    #[error("empty graph")]
    EmptyGraph,

    #[error("invalid path: {0}")]
    InvalidPath(PathViolation),

    #[error("instance has {n} vertices, exact solver is capped at {cap}")]
    OracleRefused { n: usize, cap: usize },

    /// The exact solver ran out of time. `best` is the longest path seen so
    /// far and is not guaranteed to be optimal.
    #[error("exact solver exceeded its time budget (best so far: length {})", best.length())]
    OracleTimeout { best: Path },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
