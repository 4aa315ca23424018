//! Seeded instance generators.
//!
//! All randomness flows through a ChaCha8 stream cipher seeded with a
//! single `u64`, so generated corpora are reproducible across platforms
//! and builds. The presets mirror market situations with known
//! certification behavior: a competitive market (high no-purchase
//! weight, narrow revenue spread) tends to produce monotone submodular
//! revenue functions, a monopoly (low no-purchase weight, wide spread)
//! tends not to.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::io::{
    CliError, GeneratorMeta, InstanceFile, InstancePayload, MmnlFile, MultiRatioFile, PChoiceFile,
    RatioFile, RegionFile, SegmentFile,
};

/// Instance kinds the generator can produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Multiratio,
    Mmnl,
    Pchoice,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Multiratio => write!(f, "multiratio"),
            Kind::Mmnl => write!(f, "mmnl"),
            Kind::Pchoice => write!(f, "pchoice"),
        }
    }
}

/// Coefficient presets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// mmnl: large no-purchase weights, narrow revenue spread.
    Competitive,
    /// mmnl: tiny no-purchase weights, wide revenue spread.
    Monopoly,
    /// mmnl: utilities ascending and revenue-weighted utilities
    /// descending, shared across segments.
    ValueConscious,
    /// multiratio: nearly flat marginal ratios with a large constant
    /// denominator term; certifies monotone by construction.
    NearMonotone,
    /// multiratio: no constant denominator term (b0 = 0).
    Homogeneous,
    /// pchoice: narrow utility and weight spreads that satisfy the
    /// closed-form submodularity condition.
    NearUniform,
}

impl Preset {
    pub fn name(&self) -> &'static str {
        match self {
            Preset::Competitive => "competitive",
            Preset::Monopoly => "monopoly",
            Preset::ValueConscious => "value-conscious",
            Preset::NearMonotone => "near-monotone",
            Preset::Homogeneous => "homogeneous",
            Preset::NearUniform => "near-uniform",
        }
    }

    fn supports(&self, kind: Kind) -> bool {
        matches!(
            (self, kind),
            (
                Preset::Competitive | Preset::Monopoly | Preset::ValueConscious,
                Kind::Mmnl
            ) | (Preset::NearMonotone | Preset::Homogeneous, Kind::Multiratio)
                | (Preset::NearUniform, Kind::Pchoice)
        )
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Preset, String> {
        match s {
            "competitive" => Ok(Preset::Competitive),
            "monopoly" => Ok(Preset::Monopoly),
            "value-conscious" => Ok(Preset::ValueConscious),
            "near-monotone" => Ok(Preset::NearMonotone),
            "homogeneous" => Ok(Preset::Homogeneous),
            "near-uniform" => Ok(Preset::NearUniform),
            other => Err(format!("unknown preset {other:?}")),
        }
    }
}

/// Region requested for a generated instance (facility instances always
/// use the cardinality family implied by `p`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RegionSpec {
    Unconstrained,
    /// A fixed bound, or a seeded draw from `1..=n` when `None`.
    Cardinality(Option<usize>),
    /// Capacity as a fraction of the total weight; seeded draw from
    /// `0.3..0.8` when `None`.
    Knapsack(Option<f64>),
}

/// Everything the generator needs besides the seed.
#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub kind: Kind,
    pub n: usize,
    /// Ratios, segments or demand points depending on the kind.
    pub m: usize,
    pub region: RegionSpec,
    pub preset: Option<Preset>,
    /// Facility count for pchoice instances; falls back to the region
    /// cardinality or a seeded draw.
    pub p: Option<usize>,
    /// Homogenization parameter for pchoice instances.
    pub delta: Option<f64>,
    pub revenue_range: Option<(f64, f64)>,
    pub weight_range: Option<(f64, f64)>,
    pub no_purchase_range: Option<(f64, f64)>,
}

impl GenSpec {
    pub fn new(kind: Kind, n: usize, m: usize) -> GenSpec {
        GenSpec {
            kind,
            n,
            m,
            region: RegionSpec::Unconstrained,
            preset: None,
            p: None,
            delta: None,
            revenue_range: None,
            weight_range: None,
            no_purchase_range: None,
        }
    }

    pub fn with_region(mut self, region: RegionSpec) -> GenSpec {
        self.region = region;
        self
    }

    pub fn with_preset(mut self, preset: Preset) -> GenSpec {
        self.preset = Some(preset);
        self
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.n == 0 || self.n > ratiomax::MAX_GROUND_SET {
            return Err(CliError::Usage(format!(
                "--n must lie in 1..={}, got {}",
                ratiomax::MAX_GROUND_SET,
                self.n
            )));
        }
        if self.m == 0 {
            return Err(CliError::Usage("--m must be at least 1".into()));
        }
        if let Some(preset) = self.preset {
            if !preset.supports(self.kind) {
                return Err(CliError::Usage(format!(
                    "preset {:?} does not apply to kind {}",
                    preset.name(),
                    self.kind
                )));
            }
        }
        if let Some(p) = self.p {
            if p == 0 || p > self.n {
                return Err(CliError::Usage(format!(
                    "--p must lie in 1..={}, got {p}",
                    self.n
                )));
            }
        }
        if let RegionSpec::Cardinality(Some(p)) = self.region {
            if p == 0 || p > self.n {
                return Err(CliError::Usage(format!(
                    "--p must lie in 1..={}, got {p}",
                    self.n
                )));
            }
        }
        if let Some(delta) = self.delta {
            if !(delta > 0.0 && delta < 1.0) {
                return Err(CliError::Usage(format!(
                    "--delta must lie strictly inside (0, 1), got {delta}"
                )));
            }
        }
        for (name, range) in [
            ("--revenue-range", self.revenue_range),
            ("--weight-range", self.weight_range),
            ("--no-purchase-range", self.no_purchase_range),
        ] {
            if let Some((lo, hi)) = range {
                if !(lo.is_finite() && hi.is_finite() && lo < hi && lo >= 0.0) {
                    return Err(CliError::Usage(format!(
                        "{name} must be a nonnegative interval lo:hi with lo < hi"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn draw(rng: &mut ChaCha8Rng, range: (f64, f64)) -> f64 {
    rng.gen_range(range.0..range.1)
}

fn draw_vec(rng: &mut ChaCha8Rng, len: usize, range: (f64, f64)) -> Vec<f64> {
    (0..len).map(|_| draw(rng, range)).collect()
}

fn region_file(spec: &GenSpec, rng: &mut ChaCha8Rng) -> RegionFile {
    match spec.region {
        RegionSpec::Unconstrained => RegionFile::Unconstrained,
        RegionSpec::Cardinality(p) => RegionFile::Cardinality {
            p: p.unwrap_or_else(|| rng.gen_range(1..=spec.n)),
        },
        RegionSpec::Knapsack(fraction) => {
            let weights = draw_vec(rng, spec.n, (0.5, 2.0));
            let fraction = fraction.unwrap_or_else(|| rng.gen_range(0.3..0.8));
            let capacity = fraction * weights.iter().sum::<f64>();
            RegionFile::Knapsack { weights, capacity }
        }
    }
}

fn normalized_probabilities(rng: &mut ChaCha8Rng, m: usize) -> Vec<f64> {
    let mut probabilities = draw_vec(rng, m, (0.1, 1.0));
    let total: f64 = probabilities.iter().sum();
    for p in probabilities.iter_mut() {
        *p /= total;
    }
    probabilities
}

fn generate_multiratio(spec: &GenSpec, rng: &mut ChaCha8Rng) -> MultiRatioFile {
    let region = region_file(spec, rng);
    let ratios = (0..spec.m)
        .map(|_| match spec.preset {
            Some(Preset::NearMonotone) => {
                let base = draw(rng, (0.5, 2.0));
                let b = draw_vec(rng, spec.n, (0.5, 1.5));
                let a = b
                    .iter()
                    .map(|bi| base * bi * (1.0 + draw(rng, (0.0, 0.05))))
                    .collect();
                let b0 = draw(rng, (0.2, 1.0)) * b.iter().sum::<f64>().max(1.0) + 0.5;
                RatioFile { a, b0, b }
            }
            Some(Preset::Homogeneous) => RatioFile {
                a: draw_vec(rng, spec.n, (0.5, 2.0)),
                b0: 0.0,
                b: draw_vec(rng, spec.n, (0.5, 2.0)),
            },
            _ => RatioFile {
                a: draw_vec(rng, spec.n, (0.0, 2.0)),
                b0: draw(rng, (0.2, 3.0)),
                b: draw_vec(rng, spec.n, (0.5, 2.0)),
            },
        })
        .collect();
    MultiRatioFile {
        n: spec.n,
        ratios,
        region,
    }
}

fn generate_mmnl(spec: &GenSpec, rng: &mut ChaCha8Rng) -> MmnlFile {
    let region = region_file(spec, rng);
    let (revenue_range, weight_range, no_purchase_range) = match spec.preset {
        Some(Preset::Competitive) => ((1.0, 1.2), (0.5, 1.5), (5.0, 15.0)),
        Some(Preset::Monopoly) => ((1.0, 10.0), (0.5, 1.5), (0.01, 0.1)),
        _ => (
            spec.revenue_range.unwrap_or((0.5, 3.0)),
            spec.weight_range.unwrap_or((0.3, 2.0)),
            spec.no_purchase_range.unwrap_or((0.5, 8.0)),
        ),
    };

    if spec.preset == Some(Preset::ValueConscious) {
        // Shared ascending utility profile u and descending products d:
        // v_ki = s_k u_i is ascending and r_i v_ki is proportional to
        // d_i, descending, for every segment.
        let mut u = draw_vec(rng, spec.n, (0.5, 2.0));
        u.sort_by(f64::total_cmp);
        let mut d = draw_vec(rng, spec.n, (0.5, 2.0));
        d.sort_by(|x, y| y.total_cmp(x));
        let revenues = d.iter().zip(&u).map(|(d, u)| d / u).collect();
        let segments = normalized_probabilities(rng, spec.m)
            .into_iter()
            .map(|probability| {
                let scale = draw(rng, (0.5, 2.0));
                SegmentFile {
                    probability,
                    no_purchase_weight: draw(rng, (0.5, 4.0)),
                    weights: u.iter().map(|u| scale * u).collect(),
                }
            })
            .collect();
        return MmnlFile {
            revenues,
            segments,
            region,
        };
    }

    let revenues = draw_vec(rng, spec.n, revenue_range);
    let segments = normalized_probabilities(rng, spec.m)
        .into_iter()
        .map(|probability| SegmentFile {
            probability,
            no_purchase_weight: draw(rng, no_purchase_range),
            weights: draw_vec(rng, spec.n, weight_range),
        })
        .collect();
    MmnlFile {
        revenues,
        segments,
        region,
    }
}

fn generate_pchoice(spec: &GenSpec, rng: &mut ChaCha8Rng) -> PChoiceFile {
    let (utility_range, weight_range, default_delta) = match spec.preset {
        Some(Preset::NearUniform) => ((1.0, 1.3), (1.0, 1.05), 0.75),
        _ => (
            spec.weight_range.unwrap_or((0.5, 3.0)),
            (0.5, 3.0),
            ratiomax::DEFAULT_DELTA,
        ),
    };
    let p = match (spec.p, spec.region) {
        (Some(p), _) => p,
        (None, RegionSpec::Cardinality(Some(p))) => p,
        _ => rng.gen_range(1..=spec.n),
    };
    PChoiceFile {
        demands: draw_vec(rng, spec.m, (0.5, 3.0)),
        utilities: (0..spec.m)
            .map(|_| draw_vec(rng, spec.n, utility_range))
            .collect(),
        weights: draw_vec(rng, spec.n, weight_range),
        p,
        delta: spec.delta.unwrap_or(default_delta),
    }
}

/// Generates an instance file. Identical `(spec, seed)` pairs produce
/// identical files.
pub fn generate(spec: &GenSpec, seed: u64) -> Result<InstanceFile, CliError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let payload = match spec.kind {
        Kind::Multiratio => InstancePayload::Multiratio(generate_multiratio(spec, &mut rng)),
        Kind::Mmnl => InstancePayload::Mmnl(generate_mmnl(spec, &mut rng)),
        Kind::Pchoice => InstancePayload::Pchoice(generate_pchoice(spec, &mut rng)),
    };
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), spec.n.to_string());
    params.insert("m".to_string(), spec.m.to_string());
    let meta = GeneratorMeta {
        seed,
        preset: spec.preset.map(|p| p.name().to_string()),
        params,
    };
    Ok(InstanceFile::new(payload, Some(meta)))
}
