//! `hapnet` — planning toolkit for stratospheric free-space-optical mesh
//! networks.
//!
//! Subcommands:
//! - `optimize`     find the minimum-cost transceiver bundle configuration
//! - `tables`      emit the parameter-sweep tables as CSV
//! - `design`      run the full network design pipeline
//! - `scenario-gen` generate a reproducible random scenario file
//!
//! Exit codes: 0 success, 2 configuration/usage error, 3 infeasible
//! problem, 4 internal invariant violation.

mod commands;
mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::RunConfig;
use hapnet_core::PlanError;

#[derive(Debug)]
pub enum CliError {
    /// Bad configuration, arguments or input files (exit 2).
    Config(String),
    /// The problem has no feasible answer under the given parameters
    /// (exit 3).
    Infeasible(String),
    /// An internal consistency check failed (exit 4).
    Invariant(String),
}

impl From<PlanError> for CliError {
    fn from(e: PlanError) -> Self {
        match e {
            PlanError::NoFeasibleAlpha
            | PlanError::SolarInfeasible { .. }
            | PlanError::NoFeasibleBeta { .. }
            | PlanError::GeometryInfeasible { .. }
            | PlanError::BeyondHorizon { .. }
            | PlanError::RoutingFailure { .. }
            | PlanError::DesignInfeasible { .. } => CliError::Infeasible(e.to_string()),
            PlanError::InvalidParameter { .. }
            | PlanError::DegenerateBeam { .. }
            | PlanError::InvalidScenario(_)
            | PlanError::ScenarioFormat(_) => CliError::Config(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "hapnet",
    version,
    about = "Planning toolkit for stratospheric free-space-optical mesh networks"
)]
struct Cli {
    /// JSON configuration file; flags override its fields
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Wavelengths per WDM link
    #[arg(long, global = true)]
    w: Option<u32>,

    /// Initial cap on inter-platform links per platform
    #[arg(long, global = true)]
    v: Option<u32>,

    /// Daily harvested solar energy, kWh
    #[arg(long = "e-solar-kwh", global = true)]
    e_solar_kwh: Option<f64>,

    /// Ground receiver aperture radius, metres
    #[arg(long = "r-rx-m", global = true)]
    r_rx_m: Option<f64>,

    /// Ground nodes in the generated scenario
    #[arg(long = "n-nodes", global = true)]
    n_nodes: Option<u32>,

    /// Scenario generation seed
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Beam-width scan step, degrees
    #[arg(long = "step-deg", global = true)]
    step_deg: Option<f64>,

    /// Scenario JSON file (design reads it instead of generating)
    #[arg(long, global = true)]
    scenario: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the minimum-cost transceiver bundle configuration
    Optimize,
    /// Emit the parameter-sweep tables as CSV files
    Tables {
        /// Output directory for the CSV files
        #[arg(long = "out-dir", default_value = "out")]
        out_dir: PathBuf,
    },
    /// Run the full design pipeline and emit plans plus a CSV series
    Design {
        /// Output directory for plan JSONs and the series CSV
        #[arg(long = "out-dir", default_value = "out")]
        out_dir: PathBuf,
    },
    /// Generate a reproducible random scenario file
    ScenarioGen {
        /// Scenario output path (defaults inside --out-dir)
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long = "out-dir", default_value = "out")]
        out_dir: PathBuf,
    },
}

fn apply_overrides(cfg: &mut RunConfig, cli: &Cli) {
    if let Some(w) = cli.w {
        cfg.w = w;
    }
    if let Some(v) = cli.v {
        cfg.v_init = v;
    }
    if let Some(e) = cli.e_solar_kwh {
        cfg.energy.e_solar_kwh = e;
    }
    if let Some(r) = cli.r_rx_m {
        cfg.link.r_rx_m = r;
    }
    if let Some(n) = cli.n_nodes {
        cfg.n_nodes = n;
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(step) = cli.step_deg {
        cfg.step_deg = step;
    }
    if let Some(path) = &cli.scenario {
        cfg.scenario_file = Some(path.clone());
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let mut cfg = RunConfig::load(cli.config.as_deref())?;
    apply_overrides(&mut cfg, cli);
    match &cli.command {
        Command::Optimize => commands::optimize::run(&cfg),
        Command::Tables { out_dir } => commands::tables::run(&cfg, out_dir),
        Command::Design { out_dir } => commands::design::run(&cfg, out_dir),
        Command::ScenarioGen { output, out_dir } => {
            commands::scenario_gen::run(&cfg, output.as_deref(), out_dir)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Infeasible(msg)) => {
            eprintln!("infeasible: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Invariant(msg)) => {
            eprintln!("invariant violation: {msg}");
            ExitCode::from(4)
        }
    }
}
