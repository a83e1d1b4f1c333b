use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::RunConfig;
use crate::error::CliError;

/// One row per repetition, shared by the JSON report and the CSV export.
#[derive(Debug, Clone, Serialize)]
pub struct SeedRow {
    pub rep: u64,
    pub seed: u64,
    pub matched: bool,
    pub rounds: u64,
    pub total_words: u64,
    pub max_load: u64,
    /// MST weight, component count, or suite-specific figure.
    pub value: u64,
}

#[derive(Debug, Serialize)]
pub struct CampaignReport {
    pub command: String,
    pub config: RunConfig,
    pub reps: u64,
    pub passes: u64,
    pub all_rounds_equal: bool,
    pub pass: bool,
    pub rows: Vec<SeedRow>,
}

impl CampaignReport {
    pub fn new(command: &str, config: RunConfig, rows: Vec<SeedRow>) -> CampaignReport {
        let passes = rows.iter().filter(|r| r.matched).count() as u64;
        let all_rounds_equal = rows.windows(2).all(|w| w[0].rounds == w[1].rounds);
        CampaignReport {
            command: command.to_string(),
            reps: rows.len() as u64,
            passes,
            all_rounds_equal,
            pass: passes == rows.len() as u64 && all_rounds_equal,
            config,
            rows,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Output location: explicit --out wins, then the HARNESS_OUT_DIR
/// environment variable, then the working directory.
pub fn resolve_out(out: &Option<PathBuf>, default_name: &str) -> PathBuf {
    match out {
        Some(p) => p.clone(),
        None => std::env::var_os("HARNESS_OUT_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from("."))
            .join(default_name),
    }
}

/// Writes the JSON report and a sibling CSV with per-seed rows.
pub fn write_report(path: &Path, report: &CampaignReport) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    std::fs::write(path, report.to_json() + "\n")?;
    let csv_path = path.with_extension("csv");
    let mut w = csv::Writer::from_path(&csv_path)?;
    for row in &report.rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
