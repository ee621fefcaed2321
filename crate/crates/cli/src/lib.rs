//! Front end for `geoflow`: run configurations in, reports and trajectory
//! data out.
//!
//! Exit codes: 0 when every configured check passes, 2 when a check fails,
//! 1 on configuration or runtime errors.

pub mod commands;
pub mod config;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use commands::{cmd_list, cmd_simulate, cmd_verify, Outcome};
pub use config::RunConfig;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;

/// Environment variable capping the scan thread count.
pub const THREADS_ENV: &str = "GEOFLOW_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] geoflow_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Parser)]
#[command(name = "geoflow", version, about = "Integrability certificates for geodesic flows on compact Lie groups and bi-quotients")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct RunArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the seed in the config.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory; overrides `output.dir`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the report JSON on stdout.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the built-in scenarios.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Integrate one trajectory; writes trajectory.csv and simulate.json.
    Simulate(RunArgs),
    /// Run the configured checks; writes report.json.
    Verify(RunArgs),
}

/// Applies `GEOFLOW_THREADS` to the global rayon pool.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| CliError::Config(format!("{THREADS_ENV} must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Config(format!("thread pool: {e}")))
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = configure_threads().and_then(|()| match &cli.command {
        Command::List { json } => {
            let mut out = std::io::stdout().lock();
            cmd_list(*json, &mut out).map(|()| EXIT_PASS)
        }
        Command::Simulate(args) => run_with(args, cmd_simulate),
        Command::Verify(args) => run_with(args, cmd_verify),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("geoflow: {e}");
            EXIT_ERROR
        }
    }
}

fn run_with(args: &RunArgs, cmd: fn(&RunConfig, &std::path::Path) -> Result<Outcome, CliError>) -> Result<i32, CliError> {
    let mut cfg = RunConfig::load(&args.config)?;
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    let out_dir = args.out.clone().unwrap_or_else(|| PathBuf::from(&cfg.output.dir));
    let started = std::time::Instant::now();
    let outcome = cmd(&cfg, &out_dir)?;
    let elapsed = started.elapsed().as_secs_f64();
    commands::write_timing(&out_dir, outcome.command, elapsed)?;
    if args.json {
        print!("{}", outcome.report);
    } else {
        for line in &outcome.summary {
            println!("{line}");
        }
    }
    eprintln!("geoflow {}: {:.3} s wall-clock", outcome.command, elapsed);
    Ok(if outcome.pass { EXIT_PASS } else { EXIT_CHECK_FAILED })
}
