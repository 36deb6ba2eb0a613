//! `kpz-lab`: experiment driver for the KPZ numerics.
//!
//! ```text
//! kpz-lab <experiment> [--config FILE] [--seed N] [--t T] [--runs R] [--n N]
//!         [--rho RHO] [--u-max U] [--du DU] [--n-quad Q] [--margin M]
//!         [--s-min S] [--s-max S] [--ds DS] [--bin B] [--ic step|flat|stat]
//!         [--ensemble gue|goe] [--out PATH]
//! ```
//!
//! Experiments: `tw-table`, `airy-cov`, `tasep-onepoint`, `tasep-shape`,
//! `dbm-cov`, `compare`. The worker count is read from `KPZ_LAB_WORKERS`
//! (default: all cores); it never changes the output bytes.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod experiments;
pub mod output;

use std::ffi::OsString;

use clap::{error::ErrorKind, Args, Parser, Subcommand};

pub use config::{Experiment, ExperimentConfig, Ic};
pub use error::{exit, CliError};
pub use output::Table;

pub const WORKERS_ENV: &str = "KPZ_LAB_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "kpz-lab", version, about = "Desk-scale KPZ universality experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// s, F1(s), F2(s) on a grid, with Tracy-Widom moments
    TwTable(Flags),
    /// u, g1(u), g2(u): Airy process covariances
    AiryCov(Flags),
    /// ECDF of the rescaled TASEP height at the origin against its limit law
    TasepOnepoint(Flags),
    /// Step-IC density profile against (1 - xi)/2
    TasepShape(Flags),
    /// DBM largest-eigenvalue covariance against the Airy covariance
    DbmCov(Flags),
    /// GUE and GOE DBM covariances side by side with g2 and g1
    Compare(Flags),
}

#[derive(Args, Debug, Default)]
struct Flags {
    /// key = value file; flags override it
    #[arg(long)]
    config: Option<std::path::PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    seed: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    runs: Option<String>,
    /// matrix dimension N
    #[arg(long, short = 'N', allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    u_max: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    du: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    n_quad: Option<String>,
    /// M - s_max for the Fredholm truncation
    #[arg(long, allow_hyphen_values = true)]
    margin: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s_min: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s_max: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    ds: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    bin: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    ic: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    ensemble: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    out: Option<String>,
}

impl Flags {
    fn pairs(&self) -> Vec<(String, String)> {
        let fields = [
            ("seed", &self.seed),
            ("t", &self.t),
            ("runs", &self.runs),
            ("n", &self.n),
            ("rho", &self.rho),
            ("u_max", &self.u_max),
            ("du", &self.du),
            ("n_quad", &self.n_quad),
            ("margin", &self.margin),
            ("s_min", &self.s_min),
            ("s_max", &self.s_max),
            ("ds", &self.ds),
            ("bin", &self.bin),
            ("ic", &self.ic),
            ("ensemble", &self.ensemble),
            ("out", &self.out),
        ];
        fields.into_iter().filter_map(|(k, v)| v.as_ref().map(|v| (k.to_string(), v.clone()))).collect()
    }
}

/// Outcome of argument parsing: a configuration to run, or text (help,
/// version) to print before exiting successfully.
#[derive(Debug)]
pub enum Parsed {
    Run(ExperimentConfig),
    Print(String),
}

pub fn parse_args<I, T>(args: I) -> Result<Parsed, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Ok(Parsed::Print(e.to_string())),
                ErrorKind::InvalidValue | ErrorKind::ValueValidation => Err(CliError::InvalidValue {
                    key: "flag".into(),
                    value: String::new(),
                    reason: e.to_string(),
                }),
                _ => Err(CliError::Usage(e.to_string())),
            };
        }
    };
    let (experiment, flags) = match cli.command {
        Command::TwTable(f) => (Experiment::TwTable, f),
        Command::AiryCov(f) => (Experiment::AiryCov, f),
        Command::TasepOnepoint(f) => (Experiment::TasepOnepoint, f),
        Command::TasepShape(f) => (Experiment::TasepShape, f),
        Command::DbmCov(f) => (Experiment::DbmCov, f),
        Command::Compare(f) => (Experiment::Compare, f),
    };
    let file = match &flags.config {
        Some(path) => Some(
            std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?,
        ),
        None => None,
    };
    ExperimentConfig::resolve(experiment, file.as_deref(), &flags.pairs()).map(Parsed::Run)
}

/// Runs a configuration and renders its CSV.
pub fn execute(cfg: &ExperimentConfig) -> Result<String, CliError> {
    let table = experiments::run(cfg)?;
    Ok(output::render(cfg, &table))
}

/// Worker count from [`WORKERS_ENV`], if set to a positive integer.
pub fn workers_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::InvalidValue { key: WORKERS_ENV.into(), value: v, reason: "expected a positive integer".into() }),
        },
    }
}
