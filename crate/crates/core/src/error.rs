use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph on {0} vertices exceeds the 64-vertex limit")]
    TooManyVertices(usize),

    #[error("vertex set is not dominating")]
    NotDominating,

    #[error("vertex set {0:?} is not a minimal dominating set")]
    NotMinimal(Vec<usize>),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("graph has a universal vertex")]
    UniversalVertexPresent,

    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
