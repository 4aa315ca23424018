//! Command-line argument definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ratiomax::DEFAULT_TOLERANCE;

use crate::commands::SolveMethod;
use crate::gen::{GenSpec, Kind, Preset, RegionSpec};
use crate::io::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "ratiomax",
    version,
    about = "Certify and solve multiple-ratio fractional 0-1 programs",
    long_about = "Certify submodularity/monotonicity of sums of hyperbolic ratios over \
                  subsets, solve them by greedy and brute force with approximation-bound \
                  reporting, and generate reproducible instance corpora. Assortment (mmnl) \
                  and facility-location (pchoice) instances reduce to the same core model."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Certify each ratio of an instance and aggregate the verdicts.
    ///
    /// Exit codes: 0 certified submodular, 1 input error,
    /// 2 not submodular (with a replayable witness), 3 inconclusive.
    Certify(CertifyArgs),
    /// Solve an instance by greedy and/or brute force.
    Solve(SolveArgs),
    /// Generate a seeded random instance file.
    Generate(GenerateArgs),
    /// Generate, certify and solve a seeded batch of instances.
    Batch(BatchArgs),
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    /// Instance file (JSON).
    pub instance: PathBuf,
    /// Classification tolerance for all inequality checks.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Instance file (JSON).
    pub instance: PathBuf,
    #[arg(long, value_enum, default_value_t = SolveMethod::Both)]
    pub method: SolveMethod,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Override the homogenization parameter of pchoice instances.
    #[arg(long)]
    pub delta: Option<f64>,
    /// Recorded in the report header; solving itself is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    Multiratio,
    Mmnl,
    Pchoice,
}

impl From<KindArg> for Kind {
    fn from(kind: KindArg) -> Kind {
        match kind {
            KindArg::Multiratio => Kind::Multiratio,
            KindArg::Mmnl => Kind::Mmnl,
            KindArg::Pchoice => Kind::Pchoice,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RegionArg {
    Unconstrained,
    Cardinality,
    Knapsack,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PresetArg {
    /// mmnl: high no-purchase weights, narrow revenue spread.
    Competitive,
    /// mmnl: low no-purchase weights, wide revenue spread.
    Monopoly,
    /// mmnl: ascending utilities with descending revenue-utility products.
    ValueConscious,
    /// multiratio: certifies monotone submodular by construction.
    NearMonotone,
    /// multiratio: homogeneous ratios (b0 = 0).
    Homogeneous,
    /// pchoice: spreads narrow enough for the closed-form condition.
    NearUniform,
}

impl From<PresetArg> for Preset {
    fn from(preset: PresetArg) -> Preset {
        match preset {
            PresetArg::Competitive => Preset::Competitive,
            PresetArg::Monopoly => Preset::Monopoly,
            PresetArg::ValueConscious => Preset::ValueConscious,
            PresetArg::NearMonotone => Preset::NearMonotone,
            PresetArg::Homogeneous => Preset::Homogeneous,
            PresetArg::NearUniform => Preset::NearUniform,
        }
    }
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got {s:?}"))?;
    let lo: f64 = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: f64 = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad upper bound: {e}"))?;
    Ok((lo, hi))
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    /// Ground set size (products / locations / items).
    #[arg(long)]
    pub n: usize,
    /// Ratios, segments or demand points depending on the kind.
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = RegionArg::Unconstrained)]
    pub region: RegionArg,
    /// Cardinality bound; also the facility count for pchoice.
    #[arg(long)]
    pub p: Option<usize>,
    /// Knapsack capacity as a fraction of the total item weight.
    #[arg(long)]
    pub capacity_fraction: Option<f64>,
    #[arg(long, value_enum)]
    pub preset: Option<PresetArg>,
    /// Homogenization parameter for pchoice instances.
    #[arg(long)]
    pub delta: Option<f64>,
    /// Uniform revenue range, as lo:hi.
    #[arg(long, value_parser = parse_range)]
    pub revenue_range: Option<(f64, f64)>,
    /// Uniform preference/utility weight range, as lo:hi.
    #[arg(long, value_parser = parse_range)]
    pub weight_range: Option<(f64, f64)>,
    /// Uniform no-purchase weight range, as lo:hi.
    #[arg(long, value_parser = parse_range)]
    pub no_purchase_range: Option<(f64, f64)>,
    /// Write the instance here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl GenerateArgs {
    pub fn to_spec(&self) -> Result<GenSpec, CliError> {
        let region = match self.region {
            RegionArg::Unconstrained => RegionSpec::Unconstrained,
            RegionArg::Cardinality => RegionSpec::Cardinality(self.p),
            RegionArg::Knapsack => RegionSpec::Knapsack(self.capacity_fraction),
        };
        let spec = GenSpec {
            kind: self.kind.into(),
            n: self.n,
            m: self.m,
            region,
            preset: self.preset.map(Into::into),
            p: self.p,
            delta: self.delta,
            revenue_range: self.revenue_range,
            weight_range: self.weight_range,
            no_purchase_range: self.no_purchase_range,
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Args, Debug)]
pub struct BatchArgs {
    #[command(flatten)]
    pub gen: GenerateArgs,
    /// Number of instances; seeds run from --seed upward.
    #[arg(long)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = SolveMethod::Both)]
    pub method: SolveMethod,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
}
