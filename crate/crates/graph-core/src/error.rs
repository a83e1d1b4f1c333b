use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("endpoint {0} out of range for {1} nodes")]
    NodeOutOfRange(u32, usize),
    #[error("self-loop on node {0}")]
    SelfLoop(u32),
    #[error("weight {0} does not fit the bounded-word model")]
    WeightTooLarge(u64),
    #[error("partitions cover different node counts: {0} vs {1}")]
    NodeCountMismatch(usize, usize),
    #[error("partition is missing its spanning forest")]
    MissingForest,
    #[error("input is not a single tree")]
    NotATree,
    #[error("tree of size {0} is smaller than the size bound {1}")]
    TreeTooSmall(usize, usize),
    #[error("component sizes sum to {0}, expected {1}")]
    BadComponentSizes(usize, usize),
    #[error("malformed graph text: {0}")]
    Parse(String),
}
