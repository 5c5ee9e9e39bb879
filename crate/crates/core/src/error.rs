use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),

    #[error("graph has {n} vertices, above the supported maximum of {cap}")]
    GraphTooLarge { n: usize, cap: usize },

    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(VertexId, VertexId),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: VertexId, n: usize },

    #[error("the graph has no vertices")]
    EmptyGraph,

    #[error("colouring has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },

    #[error("colouring is not proper: edge ({0}, {1}) is monochromatic")]
    ImproperColouring(VertexId, VertexId),

    #[error("invalid colouring token {token:?}: colours must be positive integers")]
    InvalidColourToken { token: String },

    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },

    #[error("more than {limit} proper partitions")]
    EnumerationLimitExceeded { limit: u64 },

    #[error("label {label} is not below the head label {head_label}")]
    InvalidLabelSubset { label: u32, head_label: u32 },

    #[error("vertex {vertex} has no neighbour with label {label} and a smaller colour")]
    WitnessMissing { vertex: VertexId, label: u32 },

    #[error("not a path: {0}")]
    NotAPath(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("brute-force oracle is limited to {cap} vertices, got {n}")]
    GraphTooLargeForOracle { n: usize, cap: usize },

    #[error("corrupt checkpoint: {0}")]
    CorruptCheckpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
