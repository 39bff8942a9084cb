use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("part {0} is not a module")]
    NotAModule(usize),
    #[error("set family is not partitive: {0}")]
    NotPartitive(String),
    #[error("instance too large for enumeration: {what} = {size} exceeds {limit}")]
    TooLarge { what: &'static str, size: usize, limit: usize },
    #[error("element {0} is not in the partition")]
    StaleElement(usize),
    #[error("vertex {0} already present")]
    DuplicateVertex(usize),
    #[error("edge ({0}, {1}): {2}")]
    EdgeState(usize, usize, &'static str),
    #[error("search guard exceeded after {0} nodes")]
    GuardExceeded(u64),
    #[error("permutations act on different ground sets")]
    GroundSetMismatch,
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("permutation is not factoring: {0}")]
    NotFactoring(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
