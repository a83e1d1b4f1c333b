//! Library half of the command-line harness: run configuration, campaign
//! drivers, and report/CSV plumbing, kept separate from the binary so the
//! acceptance tests can drive the same code paths in-process.

pub mod campaign;
pub mod config;
pub mod error;
pub mod report;

pub use campaign::{
    bench_campaign, cc_campaign, claims_campaign, mst_campaign, single_cc, BenchRow,
    ClaimsReport, SuiteReport,
};
pub use config::{parse_params, ConfigError, Model, RunConfig};
pub use error::CliError;
pub use report::{resolve_out, write_report, CampaignReport, SeedRow};
