//! `loopdress`: generate dressed metrics and surfaces, check them, export artifacts.

mod args;
mod commands;
mod manifest;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use loopdress::{GridSpec, C};

use crate::args::{parse_complex, parse_grid};
use crate::commands::selftest::Suite;

#[derive(Parser, Debug)]
#[command(name = "loopdress", version, about = "Loop-group dressing of affine spheres")]
struct Cli {
    /// Worker threads for grid evaluation.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dress the vacuum by a simple element with a unit-circle pole.
    Dress3(Dress3Args),
    /// Dress the vacuum by a six-pole element.
    Dress6(Dress6Args),
    /// Tzitzéica residual of a metric CSV.
    Verify(VerifyArgs),
    /// Mesh and invariant check of Hildebrand's sphere.
    Hildebrand(HildebrandArgs),
    /// Run the built-in invariant suites.
    Selftest(SelftestArgs),
}

#[derive(clap::Args, Debug)]
pub struct Dress3Args {
    /// Pole, `re,im`, on the unit circle.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: C,
    /// Line parameter, `re,im`, with 2|b|^2 > 1.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub b: C,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub rank: u8,
    /// `xmin:xmax:nx x ymin:ymax:ny`.
    #[arg(long, value_parser = parse_grid, default_value = "-2:2:41x-2:2:41", allow_hyphen_values = true)]
    pub grid: GridSpec,
    /// Mean curvature of the base surface.
    #[arg(long = "H", default_value_t = -2.0, allow_hyphen_values = true)]
    pub mean_curvature: f64,
    /// Metric CSV.
    #[arg(long)]
    pub out: PathBuf,
    /// Loop parameter on the unit circle used for the surface.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub lambda: Option<C>,
    #[arg(long, requires = "lambda")]
    pub obj: Option<PathBuf>,
    /// Defaults to the CSV path with extension `manifest.json`.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct Dress6Args {
    /// Pole, `re,im`, off the unit circle.
    #[arg(long, value_parser = parse_complex, default_value = "0,-0.5", allow_hyphen_values = true)]
    pub alpha: C,
    /// Second line `(b2, c2)`.
    #[arg(long, value_parser = parse_complex, default_value = "0.5,0.8660254037844386", allow_hyphen_values = true)]
    pub b2: C,
    #[arg(long, value_parser = parse_complex, default_value = "0,0", allow_hyphen_values = true)]
    pub c2: C,
    #[arg(long, value_parser = parse_grid, default_value = "-3:3:121x-3:3:121", allow_hyphen_values = true)]
    pub grid: GridSpec,
    #[arg(long = "H", default_value_t = -2.0, allow_hyphen_values = true)]
    pub mean_curvature: f64,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub lambda: Option<C>,
    #[arg(long, requires = "lambda")]
    pub obj: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Metric CSV as written by `dress3` or `dress6`.
    #[arg(long)]
    pub input: PathBuf,
    /// Defaults to the input path with extension `report.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-5)]
    pub tol: f64,
}

#[derive(clap::Args, Debug)]
pub struct HildebrandArgs {
    #[arg(long, value_parser = parse_grid, default_value = "0.1:3:59x-2:2:81", allow_hyphen_values = true)]
    pub grid: GridSpec,
    /// Shift the chart so that it lines up with the dressed vacuum.
    #[arg(long)]
    pub offset: bool,
    /// Accept grids that meet the singular line.
    #[arg(long)]
    pub allow_singular: bool,
    #[arg(long)]
    pub obj: PathBuf,
    /// Defaults to the OBJ path with extension `invariants.json`.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
    /// Finite-difference step.
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
}

#[derive(clap::Args, Debug)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Random samples per check.
    #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Write the summary here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Exit code 2 errors.
#[derive(Debug)]
pub enum CliError {
    Param(String),
    Io(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Param(s) | CliError::Io(s) => f.write_str(s),
        }
    }
}

impl From<loopdress::Error> for CliError {
    fn from(e: loopdress::Error) -> Self {
        CliError::Param(e.to_string())
    }
}

pub fn io_err(path: &std::path::Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |e| CliError::Io(format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Dress3(a) => commands::dress::dress3(a, &argv),
        Command::Dress6(a) => commands::dress::dress6(a, &argv),
        Command::Verify(a) => commands::verify::verify(a, &argv),
        Command::Hildebrand(a) => commands::hildebrand::hildebrand(a, &argv),
        Command::Selftest(a) => commands::selftest::selftest(a, &argv),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
