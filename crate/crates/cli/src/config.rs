//! Experiment configuration: a flat TOML file with one section per pipeline
//! stage, round-tripping losslessly so a run's `config.toml` echo is exact
//! provenance. Presets mirror the configurations compared in the study.

use std::fs;
use std::path::Path;

use anyhow::Context;
use gfs_core::ga::GaConfig;
use gfs_core::tsk::TskOrder;
use serde::{Deserialize, Serialize};

use crate::error::{data, usage, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VariantKind {
    Brute,
    Gft,
    ClusteredGauss,
    ClusteredFcm,
}

impl VariantKind {
    pub fn is_clustered(self) -> bool {
        matches!(self, VariantKind::ClusteredGauss | VariantKind::ClusteredFcm)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClusterSpace {
    #[serde(rename = "inputs")]
    Inputs,
    #[serde(rename = "inputs+target")]
    InputsAndTarget,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetSection {
    pub path: String,
    #[serde(default = "default_train_fraction")]
    pub train_fraction: f64,
    #[serde(default = "default_seed")]
    pub split_seed: u64,
    #[serde(default)]
    pub log_frequency: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariantSection {
    pub kind: VariantKind,
    #[serde(default = "default_mfs")]
    pub mfs_per_input: usize,
    #[serde(default = "default_order")]
    pub order: u8,
    #[serde(default = "default_clusters")]
    pub clusters: usize,
    #[serde(default = "default_fuzzifier")]
    pub fuzzifier: f64,
    #[serde(default = "default_cluster_space")]
    pub cluster_space: ClusterSpace,
    #[serde(default = "default_seed")]
    pub cluster_seed: u64,
    #[serde(default = "default_fcm_tolerance")]
    pub fcm_tolerance: f64,
    #[serde(default = "default_fcm_max_iterations")]
    pub fcm_max_iterations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaSection {
    #[serde(default = "default_population")]
    pub population_size: usize,
    #[serde(default = "default_generations")]
    pub generations: usize,
    #[serde(default = "default_crossover")]
    pub crossover_rate: f64,
    /// Per-gene mutation probability; omitted means one expected mutation per
    /// child (1 / genome length).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation_rate: Option<f64>,
    #[serde(default = "default_sigma")]
    pub mutation_sigma: f64,
    #[serde(default = "default_tournament")]
    pub tournament_size: usize,
    #[serde(default = "default_elites")]
    pub elite_count: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

impl GaSection {
    pub fn resolve(&self, genome_len: usize) -> GaConfig {
        GaConfig {
            population_size: self.population_size,
            generations: self.generations,
            crossover_rate: self.crossover_rate,
            mutation_rate: self.mutation_rate.unwrap_or(1.0 / genome_len.max(1) as f64),
            mutation_sigma: self.mutation_sigma,
            tournament_size: self.tournament_size,
            elite_count: self.elite_count,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub dir: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub dataset: DatasetSection,
    pub variant: VariantSection,
    pub ga: GaSection,
    pub output: OutputSection,
}

fn default_train_fraction() -> f64 {
    0.8
}
fn default_seed() -> u64 {
    42
}
fn default_mfs() -> usize {
    5
}
fn default_order() -> u8 {
    1
}
fn default_clusters() -> usize {
    15
}
fn default_fuzzifier() -> f64 {
    2.0
}
fn default_cluster_space() -> ClusterSpace {
    ClusterSpace::InputsAndTarget
}
fn default_fcm_tolerance() -> f64 {
    1e-6
}
fn default_fcm_max_iterations() -> usize {
    300
}
fn default_population() -> usize {
    50
}
fn default_generations() -> usize {
    100
}
fn default_crossover() -> f64 {
    0.9
}
fn default_sigma() -> f64 {
    0.1
}
fn default_tournament() -> usize {
    3
}
fn default_elites() -> usize {
    1
}

impl ExperimentConfig {
    pub fn load(path: impl AsRef<Path>) -> CliResult<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))
            .map_err(data)?;
        let config: ExperimentConfig = toml::from_str(&text)
            .with_context(|| format!("cannot parse config {}", path.display()))
            .map_err(data)?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serialization cannot fail")
    }

    pub fn validate(&self) -> CliResult<()> {
        if !(self.dataset.train_fraction > 0.0 && self.dataset.train_fraction < 1.0) {
            return Err(usage(format!(
                "dataset.train_fraction must lie strictly between 0 and 1, got {}",
                self.dataset.train_fraction
            )));
        }
        if self.variant.order > 1 {
            return Err(usage(format!("variant.order must be 0 or 1, got {}", self.variant.order)));
        }
        match self.variant.kind {
            VariantKind::Brute | VariantKind::Gft => {
                if self.variant.mfs_per_input < 2 {
                    return Err(usage("variant.mfs_per_input must be at least 2"));
                }
            }
            VariantKind::ClusteredGauss | VariantKind::ClusteredFcm => {
                if self.variant.clusters < 2 {
                    return Err(usage("variant.clusters must be at least 2 (the FCM fit needs 2)"));
                }
                if !(self.variant.fuzzifier.is_finite() && self.variant.fuzzifier > 1.0) {
                    return Err(usage("variant.fuzzifier must be finite and > 1"));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> TskOrder {
        if self.variant.order == 0 {
            TskOrder::Zero
        } else {
            TskOrder::One
        }
    }

    /// Short label used in comparison rows and output paths, matching the
    /// preset names ("brute-5mf-o1", "clustered-fcm-15", ...).
    pub fn label(&self) -> String {
        match self.variant.kind {
            VariantKind::Brute => {
                format!("brute-{}mf-o{}", self.variant.mfs_per_input, self.variant.order)
            }
            VariantKind::Gft => {
                format!("gft-{}mf-o{}", self.variant.mfs_per_input, self.variant.order)
            }
            VariantKind::ClusteredGauss => format!("clustered-gauss-{}", self.variant.clusters),
            VariantKind::ClusteredFcm => format!("clustered-fcm-{}", self.variant.clusters),
        }
    }
}

/// The configurations compared in the study, in comparison order.
pub const PRESET_NAMES: [&str; 7] = [
    "brute-5mf-o1",
    "gft-3mf-o0",
    "gft-3mf-o1",
    "gft-5mf-o0",
    "gft-5mf-o1",
    "clustered-gauss-15",
    "clustered-fcm-15",
];

/// Build a preset configuration. `data_path` points at the `.dat` file and
/// `out_root` is the directory the run writes under (one subdirectory per
/// preset).
pub fn preset(name: &str, data_path: &str, out_root: &str) -> Option<ExperimentConfig> {
    let (kind, mfs, order, clusters) = match name {
        "brute-5mf-o1" => (VariantKind::Brute, 5, 1, default_clusters()),
        "gft-3mf-o0" => (VariantKind::Gft, 3, 0, default_clusters()),
        "gft-3mf-o1" => (VariantKind::Gft, 3, 1, default_clusters()),
        "gft-5mf-o0" => (VariantKind::Gft, 5, 0, default_clusters()),
        "gft-5mf-o1" => (VariantKind::Gft, 5, 1, default_clusters()),
        "clustered-gauss-15" => (VariantKind::ClusteredGauss, default_mfs(), 1, 15),
        "clustered-fcm-15" => (VariantKind::ClusteredFcm, default_mfs(), 1, 15),
        _ => return None,
    };
    Some(ExperimentConfig {
        dataset: DatasetSection {
            path: data_path.to_string(),
            train_fraction: default_train_fraction(),
            split_seed: default_seed(),
            log_frequency: false,
        },
        variant: VariantSection {
            kind,
            mfs_per_input: mfs,
            order,
            clusters,
            fuzzifier: default_fuzzifier(),
            cluster_space: default_cluster_space(),
            cluster_seed: default_seed(),
            fcm_tolerance: default_fcm_tolerance(),
            fcm_max_iterations: default_fcm_max_iterations(),
        },
        ga: GaSection {
            population_size: default_population(),
            generations: default_generations(),
            crossover_rate: default_crossover(),
            mutation_rate: None,
            mutation_sigma: default_sigma(),
            tournament_size: default_tournament(),
            elite_count: default_elites(),
            seed: default_seed(),
        },
        output: OutputSection { dir: format!("{out_root}/{name}") },
    })
}
