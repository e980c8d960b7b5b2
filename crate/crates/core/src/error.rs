use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} already present")]
    DuplicateVertex(VertexId),
    #[error("edge weight must be 0 or 1, got {0}")]
    InvalidWeight(u8),
    #[error("vertex set is not a block of the graph")]
    NotABlock,
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("oracle refuses graphs with {n} vertices (limit {limit})")]
    OracleTooLarge { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
