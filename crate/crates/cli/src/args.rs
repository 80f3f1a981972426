use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "dunkl-osc", version, about = "Dunkl and Hankel transforms, partial sums, oscillation seminorms and verification sweeps")]
pub struct Cli {
    /// key=value file with the same keys as the long flags; flags on the
    /// command line take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Worker threads (falls back to DUNKL_OSC_THREADS, then all cores).
    /// Results do not depend on it.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a continuous transform to a sampled function.
    Transform(TransformArgs),
    /// One partial sum S_t f.
    PartialSum(PartialSumArgs),
    /// All partial sums over a threshold grid.
    Family(FamilyArgs),
    /// Truncated oscillation seminorm of the partial-sum family.
    Osc(OscArgs),
    /// r-variation seminorm of the partial-sum family.
    Var(VarArgs),
    /// Maximal operators.
    Maximal(MaximalArgs),
    /// Evaluate a parameter-range predicate.
    Range(RangeArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
    /// Run a norm-ratio sweep (gated by the identity suite).
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    Json,
}

/// Resolution of generated inputs and of the harness grids.
#[derive(Debug, Clone, Args, Serialize)]
pub struct ResolutionArgs {
    /// Gauss–Legendre panels on each half line.
    #[arg(long, default_value_t = 16)]
    pub n_panels: usize,
    #[arg(long, default_value_t = 32)]
    pub nodes_per_panel: usize,
    /// Panel grading exponent for `corpus:` inputs (harness grids are uniform).
    #[arg(long, default_value_t = 1.0)]
    pub grading: f64,
    /// Half-width of the spatial window.
    #[arg(long, default_value_t = 6.0)]
    pub window: f64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct IoArgs {
    /// SampledFn CSV file, or `corpus:<name>` for a corpus function.
    #[arg(long)]
    pub input: String,
    /// Output path (standard output when absent).
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Seed of the corpus used by `corpus:` inputs.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[command(flatten)]
    pub resolution: ResolutionArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransformName {
    Fourier,
    Hankel,
    HankelModified,
    Dunkl,
    DunklModified,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TransformArgs {
    #[arg(long, value_enum)]
    pub kind: TransformName,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Inverse transform (Dunkl kinds and Fourier).
    #[arg(long)]
    pub inverse: bool,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SumKind {
    Dunkl,
    Hankel,
    Fourier,
    Radial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundaryName {
    Neumann,
    Dirichlet,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PartialSumArgs {
    #[arg(long, value_enum, default_value_t = SumKind::Dunkl)]
    pub kind: SumKind,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Threshold t > 0.
    #[arg(long)]
    pub t: f64,
    /// Dimension for radial sums.
    #[arg(long, default_value_t = 2)]
    pub dimension: usize,
    /// Half-line lattice for Hankel sums.
    #[arg(long, value_enum, default_value_t = BoundaryName::Neumann)]
    pub boundary: BoundaryName,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Dunkl,
    Hankel,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FamilyParams {
    #[arg(long, value_enum, default_value_t = FamilyKind::Dunkl)]
    pub kind: FamilyKind,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha: f64,
    /// `default`, `dyadic:LO:HI`, `geometric:LO:HI:N` or a comma list.
    #[arg(long, default_value = "default", allow_hyphen_values = true)]
    pub t_grid: String,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub family: FamilyParams,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OscArgs {
    #[command(flatten)]
    pub family: FamilyParams,
    /// Number of oscillation blocks.
    #[arg(long, default_value_t = 6)]
    pub j: usize,
    /// Random cut sequences for the sampled supremum.
    #[arg(long, default_value_t = 32)]
    pub n_sequences: usize,
    /// Explicit cut thresholds (comma list from the t-grid) instead of sampling.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub cuts: Option<Vec<f64>>,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VarArgs {
    #[command(flatten)]
    pub family: FamilyParams,
    #[arg(long, default_value_t = 2.0)]
    pub r: f64,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MaximalOp {
    HardyLittlewood,
    ConjugateHardy,
    MaximalHilbert,
    CarlesonHunt,
    Prestini,
    CarlesonDunkl,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MaximalArgs {
    #[arg(long, value_enum)]
    pub op: MaximalOp,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Threshold grid for the frequency suprema.
    #[arg(long, default_value = "default", allow_hyphen_values = true)]
    pub t_grid: String,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Full,
    Dyadic,
    Transplant,
    BetaStar,
    ApAlpha,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct RangeArgs {
    #[arg(long, value_enum)]
    pub predicate: Predicate,
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Second order for `transplant`.
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ReportArgs {
    /// JSON-lines reports (`json`) or the summary CSV (`csv`).
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Also write the summary CSV here.
    #[arg(long)]
    pub summary: Option<PathBuf>,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[command(flatten)]
    pub resolution: ResolutionArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Identities,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::Identities)]
    pub suite: Suite,
    /// Orders to check.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-0.5,0,0.5,1")]
    pub alpha: Vec<f64>,
    #[command(flatten)]
    pub report: ReportArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepKind {
    Oscillation,
    DyadicOscillation,
    Prestini,
    Carleson,
    Bcv,
    Transference,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Experimental {
    Conjecture,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SweepArgs {
    #[arg(long, value_enum, required_unless_present = "experimental")]
    pub kind: Option<SweepKind>,
    /// Run an experiment without pass/fail semantics instead of a sweep.
    #[arg(long, value_enum, conflicts_with = "kind")]
    pub experimental: Option<Experimental>,
    #[arg(long, default_value_t = 2.0)]
    pub p: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0")]
    pub alpha: Vec<f64>,
    #[arg(long, default_value_t = 6)]
    pub j: usize,
    #[arg(long, default_value_t = 32)]
    pub n_sequences: usize,
    /// Weights `power:BETA` or `wab:A:B`, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "power:0")]
    pub weights: Vec<String>,
    /// Dimension for the transference demo.
    #[arg(long, default_value_t = 3)]
    pub dimension: usize,
    /// Multiplier family: `dyadic:KMIN:KMAX`, `identity` or increasing breaks `b0,b1,...`.
    #[arg(long, default_value = "dyadic:-2:4")]
    pub family: String,
    #[command(flatten)]
    pub report: ReportArgs,
}
