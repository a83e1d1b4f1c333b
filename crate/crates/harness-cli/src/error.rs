use thiserror::Error;

use crate::config::ConfigError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(#[from] ConfigError),
    #[error("pipeline: {0}")]
    Pipeline(#[from] mst_pipeline::PipelineError),
    #[error("graph input: {0}")]
    Graph(#[from] graph_core::GraphError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}
