mod commands;
mod error;
mod files;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use persym_core::inverse::DEFAULT_TOLERANCE;
use persym_core::Algorithm;

/// Persymmetric Jacobi matrices: spectra, reconstructions, deformations.
#[derive(Debug, Parser)]
#[command(name = "persym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectrum and weights of a matrix file.
    Forward {
        matrix: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Persymmetric matrix with a prescribed spectrum.
    Reconstruct {
        spectrum: PathBuf,
        #[arg(long, default_value = "mf", value_parser = parse_algorithm)]
        algorithm: Algorithm,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Isospectral deformation of a persymmetric matrix.
    Deform {
        matrix: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
        /// Add the deformed weights (odd N only).
        #[arg(long)]
        weights: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Consistency checks on a spectrum; exits 1 if any fails.
    Verify {
        spectrum: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Timing and accuracy of the four reconstructions.
    Bench {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Seed for the random families, overriding the config.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: persym_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Forward { matrix, out } => commands::forward(&matrix, out.as_deref()),
        Command::Reconstruct {
            spectrum,
            algorithm,
            tolerance,
            out,
        } => commands::reconstruct(&spectrum, algorithm, tolerance, out.as_deref()),
        Command::Deform {
            matrix,
            theta,
            weights,
            out,
        } => commands::deform(&matrix, theta, weights, out.as_deref()),
        Command::Verify { spectrum, out } => commands::verify(&spectrum, out.as_deref()),
        Command::Bench {
            config,
            out,
            format,
            seed,
        } => commands::bench(config.as_deref(), out.as_deref(), format, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("persym: {e}");
            e.exit_code()
        }
    }
}
