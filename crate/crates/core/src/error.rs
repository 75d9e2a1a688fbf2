use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: VertexId, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex set is empty")]
    EmptyVertexSet,

    #[error("{what} requires parameter >= {min}, got {got}")]
    ParameterTooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("center set does not induce a connected subgraph")]
    CenterNotConnected,

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("ordering step {index} has non-positive increment {increment}")]
    NonPositiveIncrement { index: usize, increment: i64 },

    #[error("labeling does not cover vertex {0}")]
    MissingLabel(VertexId),

    #[error("labeling has {got} labels, graph has {expected} vertices")]
    LabelCountMismatch { expected: usize, got: usize },

    #[error("vertices {0} and {1} share a label")]
    DuplicateLabel(VertexId, VertexId),

    #[error("permutation is not a bijection: {0}")]
    NotBijective(String),

    #[error("{0} has no explicit construction")]
    NoConstruction(String),

    #[error("certification failed: {0}")]
    CertificationFailed(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("graph has {order} vertices, exceeds limit {limit}")]
    TooLarge { order: usize, limit: usize },

    #[error("edge {0}-{1} is not in the parent graph")]
    EdgeNotInParent(VertexId, VertexId),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no labeling within the supplied upper bound {0}")]
    UpperBoundTooLow(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
