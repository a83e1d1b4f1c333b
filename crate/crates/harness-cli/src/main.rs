use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use graph_core::{
    gen_weights, oracle_mst, parse_graph_text, write_graph_text, write_weighted_graph_text,
};
use harness_cli::{
    bench_campaign, cc_campaign, claims_campaign, mst_campaign, parse_params, resolve_out,
    single_cc, write_report, CliError, Model, RunConfig,
};

#[derive(Parser)]
#[command(name = "cliquesim", about = "Round-accounted clique simulator harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Node count.
    #[arg(long, default_value_t = 256)]
    n: usize,
    /// Graph model.
    #[arg(long, value_enum, default_value_t = Model::Gnp)]
    model: Model,
    /// Edge probability (gnp).
    #[arg(long)]
    p: Option<f64>,
    /// Base seed; repetition r uses seed + r.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Repetitions.
    #[arg(long, default_value_t = 1)]
    reps: u64,
    /// Report path (default: $HARNESS_OUT_DIR or the working directory).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Extra key=value knobs (parts, ns, *_threshold, ...).
    #[arg(long, value_name = "K=V")]
    params: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph to a file.
    Gen {
        #[command(flatten)]
        common: Common,
        /// Attach distinct random weights.
        #[arg(long)]
        weighted: bool,
    },
    /// Run the component pipeline against the oracle.
    Cc {
        #[command(flatten)]
        common: Common,
        /// Read one graph from a file instead of generating.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Run the spanning-forest pipeline against the oracle.
    Mst {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Run the statistical invariant suites.
    Claims {
        #[command(flatten)]
        common: Common,
    },
    /// Cost sweep over input sizes.
    Bench {
        #[command(flatten)]
        common: Common,
    },
}

fn config_of(common: &Common) -> Result<RunConfig, CliError> {
    Ok(RunConfig {
        n: common.n,
        model: common.model,
        p: common.p,
        seed: common.seed,
        reps: common.reps.max(1),
        out: common.out.clone(),
        params: parse_params(&common.params)?,
    })
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Gen { common, weighted } => {
            let config = config_of(&common)?;
            let g = config.graph(0)?;
            let text = if weighted {
                write_weighted_graph_text(&gen_weights(&g, config.seed ^ 0x5eed))
            } else {
                write_graph_text(&g)
            };
            let path = resolve_out(&config.out, "graph.txt");
            std::fs::write(&path, text)?;
            println!("wrote {}", path.display());
            Ok(true)
        }
        Command::Cc { common, input } => {
            let config = config_of(&common)?;
            let report = match &input {
                Some(path) => {
                    let g = parse_graph_text(&std::fs::read_to_string(path)?)?;
                    let row = single_cc(&g, config.seed)?;
                    harness_cli::CampaignReport::new("cc", config.clone(), vec![row])
                }
                None => cc_campaign(&config)?,
            };
            let path = resolve_out(&config.out, "cc_report.json");
            write_report(&path, &report)?;
            println!("{} reps, {} matched -> {}", report.reps, report.passes, path.display());
            Ok(report.pass)
        }
        Command::Mst { common, input } => {
            let config = config_of(&common)?;
            let report = match &input {
                Some(path) => {
                    let g = parse_graph_text(&std::fs::read_to_string(path)?)?;
                    let wg = gen_weights(&g, config.seed ^ 0x5eed);
                    if !wg.has_distinct_weights() {
                        eprintln!("warning: duplicate weights; ranking by (weight, endpoints)");
                    }
                    let (forest, rep) = mst_pipeline::run_mst(&wg, config.seed)?;
                    let got: std::collections::BTreeSet<_> =
                        forest.iter().map(|&(u, v, _)| (u.min(v), u.max(v))).collect();
                    let row = harness_cli::SeedRow {
                        rep: 0,
                        seed: config.seed,
                        matched: got == oracle_mst(&wg),
                        rounds: rep.rounds,
                        total_words: 0,
                        max_load: rep.max_load,
                        value: rep.mst_weight,
                    };
                    harness_cli::CampaignReport::new("mst", config.clone(), vec![row])
                }
                None => mst_campaign(&config)?,
            };
            let path = resolve_out(&config.out, "mst_report.json");
            write_report(&path, &report)?;
            println!("{} reps, {} matched -> {}", report.reps, report.passes, path.display());
            Ok(report.pass)
        }
        Command::Claims { common } => {
            let config = config_of(&common)?;
            let report = claims_campaign(&config)?;
            let path = resolve_out(&config.out, "claims_report.json");
            if let Some(dir) = path.parent() {
                if !dir.as_os_str().is_empty() {
                    std::fs::create_dir_all(dir)?;
                }
            }
            std::fs::write(&path, report.to_json() + "\n")?;
            let mut w = csv::Writer::from_path(path.with_extension("csv"))?;
            for s in &report.suites {
                w.serialize(s)?;
            }
            w.flush()?;
            for s in &report.suites {
                println!(
                    "{}: {}/{} (needs {}%) {}",
                    s.name,
                    s.passes,
                    s.reps,
                    s.threshold_percent,
                    if s.pass { "ok" } else { "FAIL" }
                );
            }
            Ok(report.pass)
        }
        Command::Bench { common } => {
            let config = config_of(&common)?;
            let rows = bench_campaign(&config)?;
            let path = resolve_out(&config.out, "bench.json");
            if let Some(dir) = path.parent() {
                if !dir.as_os_str().is_empty() {
                    std::fs::create_dir_all(dir)?;
                }
            }
            std::fs::write(&path, serde_json::to_string_pretty(&rows).unwrap() + "\n")?;
            let mut w = csv::Writer::from_path(path.with_extension("csv"))?;
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
            for r in &rows {
                println!("n={} cc_rounds={} mst_rounds={}", r.n, r.cc_rounds, r.mst_rounds);
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
