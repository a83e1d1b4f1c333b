use clique_runtime::RuntimeError;
use graph_core::GraphError;
use sketch_cc::GpError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Runtime(#[from] RuntimeError),
    #[error(transparent)]
    Gp(#[from] GpError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge count {count} exceeds cap {cap}")]
    TooManyEdges { count: u64, cap: u64 },
    #[error("proxy count {count} exceeds cap {cap}")]
    ProxyOverflow { count: usize, cap: usize },
    #[error("weight group of {size} edges exceeds per-node budget {cap}")]
    GroupTooLarge { size: u64, cap: u64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
