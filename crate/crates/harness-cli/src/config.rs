use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use graph_core::{gen_gnp, gen_path, gen_planted, Graph};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("bad --params entry {0:?}: expected key=value")]
    BadParam(String),
    #[error("parameter {key}={value} is not a valid {want}")]
    BadValue { key: String, value: String, want: &'static str },
    #[error("model {0} requires --p")]
    MissingP(String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Erdos-Renyi G(n, p).
    Gnp,
    /// Disjoint planted components of near-equal size (`parts` param).
    Planted,
    /// A single path 0-1-…-(n-1).
    Path,
}

/// Everything a run depends on; identical configs must produce
/// byte-identical outputs.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub n: usize,
    pub model: Model,
    pub p: Option<f64>,
    pub seed: u64,
    pub reps: u64,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    pub params: BTreeMap<String, String>,
}

impl RunConfig {
    pub fn param<T: FromStr>(&self, key: &str, default: T) -> Result<T, ConfigError> {
        match self.params.get(key) {
            None => Ok(default),
            Some(raw) => raw.parse().map_err(|_| ConfigError::BadValue {
                key: key.into(),
                value: raw.clone(),
                want: std::any::type_name::<T>(),
            }),
        }
    }

    /// The graph for repetition `rep`; generator randomness is derived from
    /// the base seed so campaigns are reproducible.
    pub fn graph(&self, rep: u64) -> Result<Graph, ConfigError> {
        let seed = self.seed.wrapping_add(rep);
        match self.model {
            Model::Gnp => {
                let p = self.p.ok_or_else(|| ConfigError::MissingP("gnp".into()))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(ConfigError::Invalid(format!("p={p} out of [0,1]")));
                }
                Ok(gen_gnp(self.n, p, seed))
            }
            Model::Planted => {
                let parts: usize = self.param("parts", 4)?;
                if parts == 0 || parts > self.n {
                    return Err(ConfigError::Invalid(format!(
                        "parts={parts} must be in 1..={}",
                        self.n
                    )));
                }
                let base = self.n / parts;
                let mut sizes = vec![base; parts];
                for s in sizes.iter_mut().take(self.n % parts) {
                    *s += 1;
                }
                gen_planted(self.n, &sizes, seed)
                    .map_err(|e| ConfigError::Invalid(e.to_string()))
            }
            Model::Path => Ok(gen_path(self.n)),
        }
    }
}

pub fn parse_params(raw: &[String]) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut out = BTreeMap::new();
    for entry in raw {
        let (k, v) = entry
            .split_once('=')
            .ok_or_else(|| ConfigError::BadParam(entry.clone()))?;
        out.insert(k.to_string(), v.to_string());
    }
    Ok(out)
}
