//! Instance files: a JSON schema with a format version, a kind tag and
//! the kind-specific payload, plus optional generator metadata.
//!
//! Numbers are serialized as shortest round-tripping decimals, so
//! parse(serialize(x)) reproduces every numeric field bit for bit.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use ratiomax::{FeasibleRegion, MmnlInstance, MultiRatioInstance, PChoiceInstance, Ratio, Segment};

/// Current instance file format version.
pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error in {path} at line {line}, column {column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported format version {found:?} in {path} (expected {FORMAT_VERSION:?})")]
    FormatVersion { path: String, found: String },
    #[error("invalid instance: {0}")]
    Invalid(#[from] ratiomax::Error),
    #[error("{0}")]
    Usage(String),
}

/// Top-level instance file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub format_version: String,
    #[serde(flatten)]
    pub payload: InstancePayload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorMeta>,
}

/// Kind tag plus the matching payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "lowercase")]
pub enum InstancePayload {
    Multiratio(MultiRatioFile),
    Mmnl(MmnlFile),
    Pchoice(PChoiceFile),
}

impl InstancePayload {
    pub fn kind_name(&self) -> &'static str {
        match self {
            InstancePayload::Multiratio(_) => "multiratio",
            InstancePayload::Mmnl(_) => "mmnl",
            InstancePayload::Pchoice(_) => "pchoice",
        }
    }
}

/// Provenance of generated instances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorMeta {
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultiRatioFile {
    pub n: usize,
    pub ratios: Vec<RatioFile>,
    pub region: RegionFile,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioFile {
    pub a: Vec<f64>,
    pub b0: f64,
    pub b: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MmnlFile {
    pub revenues: Vec<f64>,
    pub segments: Vec<SegmentFile>,
    pub region: RegionFile,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SegmentFile {
    pub probability: f64,
    pub no_purchase_weight: f64,
    pub weights: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PChoiceFile {
    pub demands: Vec<f64>,
    pub utilities: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
    pub p: usize,
    pub delta: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RegionFile {
    Unconstrained,
    Cardinality { p: usize },
    Knapsack { weights: Vec<f64>, capacity: f64 },
}

impl From<&FeasibleRegion> for RegionFile {
    fn from(region: &FeasibleRegion) -> RegionFile {
        match region {
            FeasibleRegion::Unconstrained => RegionFile::Unconstrained,
            FeasibleRegion::Cardinality(p) => RegionFile::Cardinality { p: *p },
            FeasibleRegion::Knapsack { weights, capacity } => RegionFile::Knapsack {
                weights: weights.clone(),
                capacity: *capacity,
            },
        }
    }
}

impl From<&RegionFile> for FeasibleRegion {
    fn from(region: &RegionFile) -> FeasibleRegion {
        match region {
            RegionFile::Unconstrained => FeasibleRegion::Unconstrained,
            RegionFile::Cardinality { p } => FeasibleRegion::Cardinality(*p),
            RegionFile::Knapsack { weights, capacity } => FeasibleRegion::Knapsack {
                weights: weights.clone(),
                capacity: *capacity,
            },
        }
    }
}

/// A parsed and validated instance of one of the three kinds.
#[derive(Clone, Debug)]
pub enum LoadedInstance {
    MultiRatio(MultiRatioInstance),
    Mmnl(MmnlInstance),
    PChoice(PChoiceInstance),
}

impl LoadedInstance {
    /// The core multi-ratio view: the identity for multiratio files,
    /// the segment reduction for assortment files, the homogenization
    /// for facility files.
    pub fn as_multi_ratio(&self) -> MultiRatioInstance {
        match self {
            LoadedInstance::MultiRatio(inst) => inst.clone(),
            LoadedInstance::Mmnl(inst) => inst.to_multi_ratio(),
            LoadedInstance::PChoice(inst) => inst.homogenize(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            LoadedInstance::MultiRatio(inst) => format!(
                "multiratio (n={}, m={}, region={})",
                inst.n(),
                inst.num_ratios(),
                inst.region()
            ),
            LoadedInstance::Mmnl(inst) => format!(
                "mmnl (n={}, m={}, region={})",
                inst.n(),
                inst.num_segments(),
                inst.region()
            ),
            LoadedInstance::PChoice(inst) => format!(
                "pchoice (n={}, m={}, p={}, delta={})",
                inst.n(),
                inst.num_demand_points(),
                inst.p(),
                inst.delta()
            ),
        }
    }
}

impl InstanceFile {
    pub fn new(payload: InstancePayload, generator: Option<GeneratorMeta>) -> InstanceFile {
        InstanceFile {
            format_version: FORMAT_VERSION.to_string(),
            payload,
            generator,
        }
    }

    /// Validates and converts to core types. `delta_override` replaces
    /// the stored homogenization parameter of facility instances.
    pub fn to_core(&self, delta_override: Option<f64>) -> Result<LoadedInstance, ratiomax::Error> {
        match &self.payload {
            InstancePayload::Multiratio(file) => {
                let ratios = file
                    .ratios
                    .iter()
                    .map(|r| Ratio::new(r.a.clone(), r.b0, r.b.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                for ratio in &ratios {
                    if ratio.n() != file.n {
                        return Err(ratiomax::Error::InvalidModel(format!(
                            "ratio has {} coefficients but the file declares n = {}",
                            ratio.n(),
                            file.n
                        )));
                    }
                }
                let inst = MultiRatioInstance::new(ratios, (&file.region).into())?;
                Ok(LoadedInstance::MultiRatio(inst))
            }
            InstancePayload::Mmnl(file) => {
                let segments = file
                    .segments
                    .iter()
                    .map(|s| Segment {
                        probability: s.probability,
                        no_purchase_weight: s.no_purchase_weight,
                        weights: s.weights.clone(),
                    })
                    .collect();
                let inst =
                    MmnlInstance::new(file.revenues.clone(), segments, (&file.region).into())?;
                Ok(LoadedInstance::Mmnl(inst))
            }
            InstancePayload::Pchoice(file) => {
                let inst = PChoiceInstance::new(
                    file.demands.clone(),
                    file.utilities.clone(),
                    file.weights.clone(),
                    file.p,
                    delta_override.unwrap_or(file.delta),
                )?;
                Ok(LoadedInstance::PChoice(inst))
            }
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("instance files always serialize");
        text.push('\n');
        text
    }

    pub fn load(path: &Path) -> Result<InstanceFile, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let file: InstanceFile = serde_json::from_str(&text).map_err(|err| CliError::Parse {
            path: path.display().to_string(),
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        })?;
        if file.format_version != FORMAT_VERSION {
            return Err(CliError::FormatVersion {
                path: path.display().to_string(),
                found: file.format_version,
            });
        }
        Ok(file)
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        write_atomic(path, &self.to_json())
    }
}

/// Writes via a sibling temp file and a rename, so readers never see a
/// half-written file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp);
    fs::write(&tmp, contents).map_err(io_err)?;
    fs::rename(&tmp, path).map_err(io_err)
}
