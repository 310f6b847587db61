//! `cornerlab`: runs the vanishing-order, CGO, scattering, discrimination and
//! grating suites and writes JSON/CSV reports.
//!
//! Exit status: 0 pass, 1 verified disagreement, 2 inconclusive, 64 usage,
//! 65 invalid configuration or model error, 74 I/O error.

mod commands;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use commands::{cgo, grating, inverse, scatter, vanishing};
use run::{CliError, Global, Outcome};

#[derive(Debug, Parser)]
#[command(name = "cornerlab", version, about = "Corner vanishing orders, CGO asymptotics and two-far-field discrimination")]
struct Cli {
    /// Directory for reports.
    #[arg(long, global = true, default_value = "cornerlab-out")]
    out: PathBuf,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Factor applied to every pass/fail tolerance.
    #[arg(long, global = true, default_value_t = 1.0)]
    tol_scale: f64,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Predicted, recursed and estimated vanishing orders over a corner table.
    Vanishing(vanishing::VanishingArgs),
    /// CGO integral exactness and corner-expansion remainder slopes.
    Cgo(cgo::CgoArgs),
    /// Forward scattering: far-field CSV and solver diagnostics.
    Scatter(scatter::ScatterArgs),
    /// Two-direction far-field discrimination of two obstacles.
    Inverse(inverse::InverseArgs),
    /// Rayleigh modes, flat-grating roundtrips and distinctness checks.
    Grating(grating::GratingArgs),
}

fn execute(cli: Cli) -> Result<Outcome, CliError> {
    if !(cli.tol_scale > 0.0 && cli.tol_scale.is_finite()) {
        return Err(CliError::Usage(format!("--tol-scale must be positive, got {}", cli.tol_scale)));
    }
    if let Some(n) = cli.workers {
        if n == 0 {
            return Err(CliError::Usage("--workers must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(CliError::model)?;
    }
    let global = Global { out: cli.out, tol_scale: cli.tol_scale, seed: cli.seed };
    match cli.command {
        Command::Vanishing(a) => vanishing::run(a, &global),
        Command::Cgo(a) => cgo::run(a, &global),
        Command::Scatter(a) => scatter::run(a, &global),
        Command::Inverse(a) => inverse::run(a, &global),
        Command::Grating(a) => grating::run(a, &global),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(64);
        }
    };
    match execute(cli) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
