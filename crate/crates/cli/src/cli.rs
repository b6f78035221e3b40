use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use uqgl2::representations::GaugeMode;
use uqgl2::BranchTag;

#[derive(Debug, Parser)]
#[command(name = "uqgl2", version, about = "Build and verify colored R-matrices of multiparameter U_q gl(2)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct an R-matrix and write it as JSON or CSV.
    Build(BuildArgs),
    /// Run every applicable check on a configuration or on a matrix file.
    Verify(VerifyArgs),
    /// Verify a grid of parameters in parallel and tabulate the residuals.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GaugeArg {
    #[value(name = "unit_a", alias = "unit-a")]
    UnitA,
    Balanced,
    Explicit,
}

impl From<GaugeArg> for GaugeMode {
    fn from(g: GaugeArg) -> Self {
        match g {
            GaugeArg::UnitA => GaugeMode::UnitA,
            GaugeArg::Balanced => GaugeMode::Balanced,
            GaugeArg::Explicit => GaugeMode::Explicit,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Numeric,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Generic,
    #[value(name = "root_of_unity", alias = "root-of-unity")]
    RootOfUnity,
}

impl From<BranchArg> for BranchTag {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Generic => BranchTag::Generic,
            BranchArg::RootOfUnity => BranchTag::RootOfUnity,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Series,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

/// The model: dimension, q, colors and gauge.
#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    /// Representation dimension.
    #[arg(long)]
    pub m: Option<usize>,
    /// `re,im` or `root k/n` (q = exp(2 pi i k/n)). Negative literals: `--q=-2,0`.
    #[arg(long, num_args = 1..=2, value_name = "Q")]
    pub q: Option<Vec<String>>,
    /// A color `sigma_re,sigma_im:g_re,g_im`; repeat for up to three colors.
    #[arg(long = "color", value_name = "SIGMA:G", allow_hyphen_values = true)]
    pub colors: Vec<String>,
    #[arg(long, value_enum, default_value_t = GaugeArg::UnitA)]
    pub gauge: GaugeArg,
    /// Explicit gauge: one `re,im` per index i = 1..m-1.
    #[arg(long = "a", value_name = "RE,IM", allow_hyphen_values = true)]
    pub a: Vec<String>,
    #[arg(long = "b", value_name = "RE,IM", allow_hyphen_values = true)]
    pub b: Vec<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Numeric)]
    pub mode: ModeArg,
    /// Require this branch instead of classifying.
    #[arg(long, value_enum)]
    pub branch: Option<BranchArg>,
}

#[derive(Debug, Clone, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::Series)]
    pub method: MethodArg,
    /// Tolerance for branch and gauge tests during construction.
    #[arg(long, default_value_t = uqgl2::rings::CONSTRUCTION_TOL)]
    pub tol: f64,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// A JSON matrix file written by `build`; replaces the model flags.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Residual tolerance.
    #[arg(long, default_value_t = uqgl2::rings::RESIDUAL_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub m: usize,
    /// One grid value of q (`re,im` or `root k/n`); repeat for more.
    #[arg(long, num_args = 1..=2, value_name = "Q", action = clap::ArgAction::Append)]
    pub q: Vec<String>,
    /// Grid values of sigma; sqrt(q) when absent.
    #[arg(long, value_name = "RE,IM", allow_hyphen_values = true)]
    pub sigma: Vec<String>,
    /// Grid values of g; 1 when absent.
    #[arg(long, value_name = "RE,IM", allow_hyphen_values = true)]
    pub g: Vec<String>,
    /// Extra random gauges verified at each point.
    #[arg(long, default_value_t = 0)]
    pub random_gauges: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = uqgl2::rings::RESIDUAL_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
}
