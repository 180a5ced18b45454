//! carinena: exact spectra, eigenfunctions, and verification suites for
//! the generalized Carinena oscillator family.

mod commands;
mod config;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::OutputFormat;

#[derive(Parser)]
#[command(
    name = "carinena",
    version,
    about = "Exact spectra and eigenfunctions of the generalized Carinena oscillators,\n\
             with symbolic and numerical verification suites",
    after_help = "Defaults for any flag may also come from a TOML file named by the\n\
                  CARINENA_CONFIG environment variable; explicit flags override it."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact spectrum table for one model
    Spectrum(SpectrumArgs),
    /// Tabulate the potential or a normalized eigenfunction on a grid
    Tabulate(TabulateArgs),
    /// Run verification suites and exit nonzero on any failure
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SpectrumArgs {
    /// Seed index (>= 1)
    #[arg(long)]
    p: Option<u32>,
    /// Largest level index to list
    #[arg(long = "n-max")]
    n_max: Option<u32>,
    /// Output format
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TabulateWhat {
    Potential,
    Eigenfunction,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct TabulateArgs {
    /// Seed index (>= 1)
    #[arg(long)]
    p: Option<u32>,
    /// Which curve to tabulate
    #[arg(long, value_enum)]
    what: Option<TabulateWhat>,
    /// Level index (required for eigenfunctions)
    #[arg(long)]
    n: Option<u32>,
    /// Evaluate at a single point instead of a grid
    #[arg(long, conflicts_with_all = ["x_min", "x_max", "samples"])]
    x: Option<f64>,
    #[arg(long = "x-min")]
    x_min: Option<f64>,
    #[arg(long = "x-max")]
    x_max: Option<f64>,
    /// Number of uniform grid points (>= 2)
    #[arg(long)]
    samples: Option<u32>,
    /// Quadrature tolerance for half-line normalization
    #[arg(long)]
    tol: Option<f64>,
    /// Output format
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Residuals,
    Orthonormality,
    AppendixA,
    Identities,
    FdOracle,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    /// Restrict the finite-difference oracle to one seed index
    #[arg(long)]
    p: Option<u32>,
    /// Largest seed index for residual/identity suites
    #[arg(long = "p-max")]
    p_max: Option<u32>,
    /// Largest level index for residual/orthonormality suites
    #[arg(long = "n-max")]
    n_max: Option<u32>,
    /// Largest seed-integral index for the appendix-a suite
    #[arg(long = "m-max")]
    m_max: Option<u32>,
    /// Numerical tolerance (suite-specific default when omitted)
    #[arg(long)]
    tol: Option<f64>,
    /// Output format
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

/// Failure modes that map onto process exit codes: usage errors exit 2,
/// failed checks and runtime breakdowns exit 1.
#[derive(Debug)]
pub enum CmdError {
    Usage(String),
    Check(String),
}

impl CmdError {
    fn usage(msg: impl Into<String>) -> Self {
        CmdError::Usage(msg.into())
    }
}

impl From<carinena_core::Error> for CmdError {
    fn from(e: carinena_core::Error) -> Self {
        CmdError::Check(e.to_string())
    }
}

fn parse_format(
    flag: Option<OutputFormat>,
    file: &Option<String>,
) -> Result<OutputFormat, CmdError> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match file.as_deref() {
        None => Ok(OutputFormat::Csv),
        Some("csv") => Ok(OutputFormat::Csv),
        Some("json") => Ok(OutputFormat::Json),
        Some(other) => Err(CmdError::usage(format!(
            "unknown format {other:?} in config file (expected csv or json)"
        ))),
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                0
            } else {
                1
            }
        }
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CmdError::Check(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<bool, CmdError> {
    let cfg = config::load().map_err(CmdError::Usage)?;
    match cli.command {
        Command::Spectrum(args) => {
            let format = parse_format(args.format, &cfg.format)?;
            let record = commands::spectrum::run(&args, &cfg)?;
            print!("{}", record.render(format));
            Ok(true)
        }
        Command::Tabulate(args) => {
            let format = parse_format(args.format, &cfg.format)?;
            let record = commands::tabulate::run(&args, &cfg)?;
            print!("{}", record.render(format));
            Ok(true)
        }
        Command::Verify(args) => {
            let format = parse_format(args.format, &cfg.format)?;
            let (record, all_passed) = commands::verify::run(&args, &cfg)?;
            print!("{}", record.render(format));
            Ok(all_passed)
        }
    }
}
