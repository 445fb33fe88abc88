use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("no identity element in table")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("elements belong to different groups")]
    GroupMismatch,

    #[error("loop edge at vertex {0}")]
    LoopEdge(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} carries a trivial group")]
    TrivialVertexGroup(VertexId),
    #[error("vertex ids must be 0..n-1 without gaps: {0}")]
    NonDenseVertices(String),

    #[error("syllable {vertex}:{index} does not belong to the vertex group (order {order})")]
    VertexGroupMismatch {
        vertex: VertexId,
        index: u32,
        order: usize,
    },
    #[error("operands live over different defining graphs")]
    GraphMismatch,
    #[error("cannot parse word token {0:?}")]
    WordParse(String),

    #[error("the two vertices are not adjacent")]
    NotAnEdge,
    #[error("vertex is unreachable within the exploration budget")]
    Unreachable,
    #[error("enumeration cap {cap} exceeded")]
    CapExceeded { cap: usize },

    #[error("invalid graph action: {0}")]
    ActionInvalid(String),
    #[error("elements belong to different graph actions")]
    ActionMismatch,
    #[error("unknown permutation {0:?}")]
    UnknownPermutation(String),

    #[error("element is not in the stabilizer of vertex {0}")]
    NotInStabilizer(VertexId),
    #[error("vertex {w} is not in the link of {v}")]
    NotInLink { v: VertexId, w: VertexId },

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
