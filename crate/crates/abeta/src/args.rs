use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::grid::{parse_beta, parse_beta_list, parse_list, parse_poly, parse_positive};

/// A parsed list flag; a newtype so clap treats it as a single value.
#[derive(Debug, Clone, PartialEq)]
pub struct List(pub Vec<f64>);

fn list(s: &str) -> Result<List, String> {
    parse_list(s).map(List)
}

fn beta_list(s: &str) -> Result<List, String> {
    parse_beta_list(s).map(List)
}

fn poly(s: &str) -> Result<List, String> {
    parse_poly(s).map(List)
}

#[derive(Debug, Parser)]
#[command(name = "abeta", version, about = "Bohr radii and coefficient bounds for the class A_β")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bohr-Schwarz radius for one β.
    Radius(RadiusArgs),
    /// Bohr-Rogosinski radius for one β.
    Rogosinski(RogosinskiArgs),
    /// Fekete-Szegő bounds over β and μ grids.
    FsBound(FsBoundArgs),
    /// Logarithmic-coefficient difference bounds for f and its inverse.
    LogBounds(LogBoundsArgs),
    /// Monte-Carlo verification of every inequality; exits 2 on a violation.
    Verify(VerifyArgs),
    /// Radii over a β grid.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantChoice {
    Bohr,
    Rogosinski,
    Both,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format (the default depends on the command).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the document here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProblemArgs {
    /// Order of the leading Schwarz function.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: u32,
    /// Exponent of the leading term.
    #[arg(long, default_value_t = 1.0, value_parser = parse_positive)]
    pub p: f64,
    /// Area polynomial coefficients λ₁,λ₂,… (nonnegative).
    #[arg(long, value_parser = poly, default_value = "")]
    pub poly: List,
}

#[derive(Debug, Args)]
pub struct BetaArgs {
    #[arg(long, value_parser = parse_beta, conflicts_with = "beta_grid", required_unless_present = "beta_grid")]
    pub beta: Option<f64>,
    /// `start:stop:step` (stop excluded) or a comma-separated list.
    #[arg(long, value_parser = beta_list)]
    pub beta_grid: Option<List>,
}

impl BetaArgs {
    pub fn values(&self) -> Vec<f64> {
        match (&self.beta, &self.beta_grid) {
            (Some(b), _) => vec![*b],
            (None, Some(grid)) => grid.0.clone(),
            (None, None) => Vec::new(),
        }
    }
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    #[arg(long, value_parser = parse_beta)]
    pub beta: f64,
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, default_value_t = 1e-10, value_parser = parse_positive)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RogosinskiArgs {
    #[arg(long, value_parser = parse_beta)]
    pub beta: f64,
    /// Index where the coefficient tail starts.
    #[arg(long = "n", visible_alias = "N", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, default_value_t = 1e-10, value_parser = parse_positive)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FsBoundArgs {
    #[command(flatten)]
    pub betas: BetaArgs,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "mu_grid")]
    pub mu: Option<f64>,
    /// `start:stop:step` (stop excluded) or a comma-separated list.
    #[arg(long, allow_hyphen_values = true, value_parser = list)]
    pub mu_grid: Option<List>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LogBoundsArgs {
    #[command(flatten)]
    pub betas: BetaArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub betas: BetaArgs,
    /// Members sampled per β.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Largest number of atoms per measure.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    pub atoms: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Truncation order of the sampled series.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(3..))]
    pub order: u64,
    /// Largest n in the coefficient checks.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(2..))]
    pub n_max: u64,
    #[arg(long, allow_hyphen_values = true, value_parser = list, default_value = "-2,-1,0,0.5,1,2")]
    pub mu_grid: List,
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Index where the Rogosinski tail starts.
    #[arg(long = "n", visible_alias = "N", default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, default_value_t = 1e-9, value_parser = parse_nonnegative)]
    pub slack: f64,
    /// Radius checks run at root minus this offset.
    #[arg(long, default_value_t = 1e-3, value_parser = parse_nonnegative)]
    pub offset: f64,
    /// Coordinate-ascent rounds on the worst witness of each inequality.
    #[arg(long, default_value_t = 0)]
    pub refine: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub betas: BetaArgs,
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Index where the Rogosinski tail starts.
    #[arg(long = "n", visible_alias = "N", default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = VariantChoice::Both)]
    pub variant: VariantChoice,
    #[arg(long, default_value_t = 1e-10, value_parser = parse_positive)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_nonnegative(s: &str) -> Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(v) if v >= 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("must be a finite nonnegative number".into()),
        Err(e) => Err(e.to_string()),
    }
}
