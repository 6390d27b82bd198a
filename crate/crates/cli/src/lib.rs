//! Command-line harness: reads a scenario file, dispatches one subcommand,
//! and renders the result as text, CSV or JSON.

pub mod commands;
pub mod scenario;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use commands::run;
pub use scenario::{Scenario, ScenarioError};

#[derive(Debug, Parser)]
#[command(
    name = "ecotax",
    version,
    about = "Environmental tax recycling in an OLG economy with pollution-health feedback"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Scenario file (`name = value` per line).
    #[arg(long, global = true)]
    pub scenario: Option<PathBuf>,

    /// Output path for CSV results (simulate, sweep). Defaults to stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Convergence tolerance (simulate) or bracket tolerance (optimize).
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    #[arg(long, global = true)]
    pub max_periods: Option<usize>,

    /// Grid as `from:to:steps`, endpoints included.
    #[arg(long, global = true)]
    pub grid: Option<String>,

    /// Parameter to sweep.
    #[arg(long, global = true)]
    pub param: Option<String>,

    /// Comma-separated sweep outputs (default: all).
    #[arg(long, global = true, value_delimiter = ',')]
    pub outputs: Option<Vec<String>>,

    /// Print JSON to stdout where the default is text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Echo the validated scenario with all defaults resolved.
    Validate,
    /// Iterate the economy from (k0, p0) and write the trajectory CSV.
    Simulate,
    /// Closed-form steady state as JSON.
    Steady,
    /// Recycling-share thresholds, cutoffs and regime as JSON.
    Thresholds,
    /// Evaluate steady-state outputs over a grid of one parameter.
    Sweep,
    /// Numerically maximize output and welfare over beta and compare with the closed forms.
    Optimize,
    /// Sweep tau, locate regime changes, and compare with the analytic cutoffs.
    Regimes,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Numeric(String),
    #[error("{0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Numeric(_) | CliError::Output(_) => 2,
        }
    }
}

impl From<ecotax_core::Error> for CliError {
    fn from(e: ecotax_core::Error) -> Self {
        if e.is_validation() {
            CliError::Validation(e.to_string())
        } else {
            CliError::Numeric(e.to_string())
        }
    }
}

impl From<ecotax_core::ParamError> for CliError {
    fn from(e: ecotax_core::ParamError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<ScenarioError> for CliError {
    fn from(e: ScenarioError) -> Self {
        CliError::Validation(e.to_string())
    }
}
