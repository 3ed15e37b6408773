//! The four regressor variants behind one contract: brute-force grid TSK,
//! cascading fuzzy tree, and the two clustered systems (Gaussian activations
//! on frozen cluster centers, or FCM memberships as rule activations).
//!
//! A [`Regressor`] couples an [`Architecture`] with its genome layout and any
//! frozen data (cluster centers). `decode` turns a gene vector into a
//! [`TrainedModel`] that can be evaluated cheaply over many rows; `predict`
//! is the one-shot convenience path.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::fcm::fcm_membership;
use crate::genome::{GenomeError, GenomeLayout, SegmentKind};
use crate::mf::{Mf, TriangularMf};
use crate::tsk::{FuzzySystem, InputPartition, Prediction, TskError, TskOrder, TskRule, COVERAGE_EPSILON};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ArchError {
    Genome(GenomeError),
    Tsk(TskError),
    DimensionMismatch { expected: usize, got: usize },
    NonFiniteInput,
    TooFewInputs { got: usize, need: usize },
    TooFewMfs(usize),
    NoClusters,
    InvalidFuzzifier(f64),
    InconsistentCenters,
    ModelShape(&'static str),
}

impl fmt::Display for ArchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArchError::Genome(e) => write!(f, "{e}"),
            ArchError::Tsk(e) => write!(f, "{e}"),
            ArchError::DimensionMismatch { expected, got } => {
                write!(f, "input has {got} dimensions, regressor expects {expected}")
            }
            ArchError::NonFiniteInput => write!(f, "input vector contains a non-finite value"),
            ArchError::TooFewInputs { got, need } => {
                write!(f, "architecture needs at least {need} inputs, got {got}")
            }
            ArchError::TooFewMfs(m) => write!(f, "grid systems need at least 2 MFs per input, got {m}"),
            ArchError::NoClusters => write!(f, "clustered architectures need at least one center"),
            ArchError::InvalidFuzzifier(m) => write!(f, "fuzzifier must be finite and > 1, got {m}"),
            ArchError::InconsistentCenters => write!(f, "cluster centers have inconsistent dimensionality"),
            ArchError::ModelShape(msg) => write!(f, "model does not fit the architecture: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ArchError {}

impl From<GenomeError> for ArchError {
    fn from(e: GenomeError) -> Self {
        ArchError::Genome(e)
    }
}

impl From<TskError> for ArchError {
    fn from(e: TskError) -> Self {
        ArchError::Tsk(e)
    }
}

/// Structural description of a regressor variant.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub enum Architecture {
    /// Full rule grid: every combination of MF indices is one rule.
    Brute { inputs: usize, mfs_per_input: usize, order: TskOrder },
    /// Left-deep chain of 2-input grids: stage 1 reads inputs (0, 1), stage k
    /// reads (previous output clamped to [0, 1], input k+1).
    Cascade { inputs: usize, mfs_per_input: usize, order: TskOrder },
    /// Gaussian activation around each frozen center; widths are trained.
    ClusteredGauss { clusters: usize, inputs: usize },
    /// FCM membership to each frozen center as the rule activation.
    ClusteredFcm { clusters: usize, inputs: usize },
}

impl Architecture {
    pub fn inputs(&self) -> usize {
        match *self {
            Architecture::Brute { inputs, .. }
            | Architecture::Cascade { inputs, .. }
            | Architecture::ClusteredGauss { inputs, .. }
            | Architecture::ClusteredFcm { inputs, .. } => inputs,
        }
    }

    pub fn rule_count(&self) -> usize {
        match *self {
            Architecture::Brute { inputs, mfs_per_input, .. } => mfs_per_input.pow(inputs as u32),
            Architecture::Cascade { inputs, mfs_per_input, .. } => {
                (inputs - 1) * mfs_per_input * mfs_per_input
            }
            Architecture::ClusteredGauss { clusters, .. }
            | Architecture::ClusteredFcm { clusters, .. } => clusters,
        }
    }

    /// Trainable parameter count. Grid: m^d consequent blocks plus d*m
    /// triangular triples; cascade: the same per 2-input stage; clustered:
    /// one affine consequent per cluster, plus one width per cluster for the
    /// Gaussian variant.
    pub fn param_count(&self) -> usize {
        match *self {
            Architecture::Brute { inputs, mfs_per_input, order } => {
                mfs_per_input.pow(inputs as u32) * order.consequent_len(inputs)
                    + inputs * mfs_per_input * 3
            }
            Architecture::Cascade { inputs, mfs_per_input, order } => {
                let per_stage =
                    mfs_per_input * mfs_per_input * order.consequent_len(2) + 2 * mfs_per_input * 3;
                (inputs - 1) * per_stage
            }
            Architecture::ClusteredGauss { clusters, inputs } => {
                clusters + clusters * (inputs + 1)
            }
            Architecture::ClusteredFcm { clusters, inputs } => clusters * (inputs + 1),
        }
    }

    fn layout(&self) -> GenomeLayout {
        let mut layout = GenomeLayout::new();
        match *self {
            Architecture::Brute { inputs, mfs_per_input, order } => {
                for i in 0..inputs {
                    layout.push(
                        format!("mf[{i}]"),
                        mfs_per_input * 3,
                        SegmentKind::MfPartition { mf_count: mfs_per_input },
                    );
                }
                push_consequents(&mut layout, "consequents", mfs_per_input.pow(inputs as u32), inputs, order);
            }
            Architecture::Cascade { inputs, mfs_per_input, order } => {
                for stage in 0..inputs - 1 {
                    for side in 0..2 {
                        layout.push(
                            format!("stage[{stage}].mf[{side}]"),
                            mfs_per_input * 3,
                            SegmentKind::MfPartition { mf_count: mfs_per_input },
                        );
                    }
                    push_consequents(
                        &mut layout,
                        format!("stage[{stage}].consequents"),
                        mfs_per_input * mfs_per_input,
                        2,
                        order,
                    );
                }
            }
            Architecture::ClusteredGauss { clusters, inputs } => {
                layout.push("sigmas", clusters, SegmentKind::Sigmas);
                layout.push(
                    "consequents",
                    clusters * (inputs + 1),
                    SegmentKind::Order1Consequents { inputs },
                );
            }
            Architecture::ClusteredFcm { clusters, inputs } => {
                layout.push(
                    "consequents",
                    clusters * (inputs + 1),
                    SegmentKind::Order1Consequents { inputs },
                );
            }
        }
        layout
    }
}

fn push_consequents(
    layout: &mut GenomeLayout,
    name: impl Into<alloc::string::String>,
    rules: usize,
    inputs: usize,
    order: TskOrder,
) {
    match order {
        TskOrder::Zero => layout.push(name, rules, SegmentKind::Order0Consequents),
        TskOrder::One => {
            layout.push(name, rules * (inputs + 1), SegmentKind::Order1Consequents { inputs })
        }
    }
}

/// A regressor variant plus everything frozen at build time: genome layout,
/// cluster centers, fuzzifier, and the fallback value returned for uncovered
/// inputs.
#[derive(Clone, Debug)]
pub struct Regressor {
    architecture: Architecture,
    layout: GenomeLayout,
    centers: Vec<Vec<f64>>,
    fuzzifier: f64,
    fallback: f64,
}

impl Regressor {
    /// Full-grid TSK system over `inputs` dimensions.
    pub fn brute(inputs: usize, mfs_per_input: usize, order: TskOrder) -> Result<Self, ArchError> {
        if inputs < 1 {
            return Err(ArchError::TooFewInputs { got: inputs, need: 1 });
        }
        if mfs_per_input < 2 {
            return Err(ArchError::TooFewMfs(mfs_per_input));
        }
        let architecture = Architecture::Brute { inputs, mfs_per_input, order };
        Ok(Regressor::from_architecture(architecture, Vec::new(), 0.0))
    }

    /// Genetic fuzzy tree: a chain of `inputs - 1` two-input grid stages.
    pub fn cascade(inputs: usize, mfs_per_input: usize, order: TskOrder) -> Result<Self, ArchError> {
        if inputs < 2 {
            return Err(ArchError::TooFewInputs { got: inputs, need: 2 });
        }
        if mfs_per_input < 2 {
            return Err(ArchError::TooFewMfs(mfs_per_input));
        }
        let architecture = Architecture::Cascade { inputs, mfs_per_input, order };
        Ok(Regressor::from_architecture(architecture, Vec::new(), 0.0))
    }

    /// Clustered system with trainable Gaussian widths around frozen centers.
    pub fn clustered_gauss(centers: Vec<Vec<f64>>) -> Result<Self, ArchError> {
        let inputs = check_centers(&centers)?;
        let architecture = Architecture::ClusteredGauss { clusters: centers.len(), inputs };
        Ok(Regressor::from_architecture(architecture, centers, 0.0))
    }

    /// Clustered system whose activations are FCM memberships to the frozen
    /// centers; they sum to one, so every input is covered.
    pub fn clustered_fcm(centers: Vec<Vec<f64>>, fuzzifier: f64) -> Result<Self, ArchError> {
        let inputs = check_centers(&centers)?;
        if !(fuzzifier.is_finite() && fuzzifier > 1.0) {
            return Err(ArchError::InvalidFuzzifier(fuzzifier));
        }
        let architecture = Architecture::ClusteredFcm { clusters: centers.len(), inputs };
        Ok(Regressor::from_architecture(architecture, centers, fuzzifier))
    }

    fn from_architecture(architecture: Architecture, centers: Vec<Vec<f64>>, fuzzifier: f64) -> Self {
        Regressor {
            layout: architecture.layout(),
            architecture,
            centers,
            fuzzifier,
            fallback: 0.5,
        }
    }

    /// Value reported for uncovered inputs; the harness sets this to the mean
    /// scaled training target.
    pub fn with_fallback(mut self, fallback: f64) -> Self {
        self.fallback = fallback;
        self
    }

    pub fn fallback(&self) -> f64 {
        self.fallback
    }

    pub fn architecture(&self) -> &Architecture {
        &self.architecture
    }

    pub fn layout(&self) -> &GenomeLayout {
        &self.layout
    }

    pub fn centers(&self) -> &[Vec<f64>] {
        &self.centers
    }

    pub fn fuzzifier(&self) -> f64 {
        self.fuzzifier
    }

    pub fn num_inputs(&self) -> usize {
        self.architecture.inputs()
    }

    /// Decode a gene vector into an evaluable model. Membership triples are
    /// sort-repaired, so any in-bounds vector of the right length decodes.
    pub fn decode(&self, genes: &[f64]) -> Result<TrainedModel, ArchError> {
        self.layout.check_len(genes)?;
        match self.architecture {
            Architecture::Brute { inputs, mfs_per_input, order } => {
                let system = decode_grid(&self.layout, genes, "", inputs, mfs_per_input, order)?;
                Ok(TrainedModel::Grid(system))
            }
            Architecture::Cascade { inputs, mfs_per_input, order } => {
                let stages = (0..inputs - 1)
                    .map(|s| {
                        decode_grid(&self.layout, genes, &format!("stage[{s}]."), 2, mfs_per_input, order)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(TrainedModel::Cascade(stages))
            }
            Architecture::ClusteredGauss { clusters, inputs } => {
                let sigmas = segment_slice(&self.layout, genes, "sigmas")?.to_vec();
                let consequents = split_consequents(
                    segment_slice(&self.layout, genes, "consequents")?,
                    clusters,
                    inputs + 1,
                );
                Ok(TrainedModel::Clustered(ClusteredPredictor {
                    centers: self.centers.clone(),
                    consequents,
                    activation: Activation::Gaussian { sigmas },
                }))
            }
            Architecture::ClusteredFcm { clusters, inputs } => {
                let consequents = split_consequents(
                    segment_slice(&self.layout, genes, "consequents")?,
                    clusters,
                    inputs + 1,
                );
                Ok(TrainedModel::Clustered(ClusteredPredictor {
                    centers: self.centers.clone(),
                    consequents,
                    activation: Activation::FcmMembership { fuzzifier: self.fuzzifier },
                }))
            }
        }
    }

    /// Inverse of [`Regressor::decode`]; errors if the model's shape does not
    /// match this architecture.
    pub fn encode(&self, model: &TrainedModel) -> Result<Vec<f64>, ArchError> {
        let mut genes = vec![0.0; self.layout.total_len()];
        match (&self.architecture, model) {
            (&Architecture::Brute { inputs, mfs_per_input, order }, TrainedModel::Grid(system)) => {
                encode_grid(&self.layout, &mut genes, "", system, inputs, mfs_per_input, order)?;
            }
            (&Architecture::Cascade { inputs, mfs_per_input, order }, TrainedModel::Cascade(stages)) => {
                if stages.len() != inputs - 1 {
                    return Err(ArchError::ModelShape("wrong stage count"));
                }
                for (s, stage) in stages.iter().enumerate() {
                    encode_grid(&self.layout, &mut genes, &format!("stage[{s}]."), stage, 2, mfs_per_input, order)?;
                }
            }
            (&Architecture::ClusteredGauss { clusters, inputs }, TrainedModel::Clustered(p)) => {
                let Activation::Gaussian { sigmas } = &p.activation else {
                    return Err(ArchError::ModelShape("expected gaussian activation"));
                };
                if sigmas.len() != clusters {
                    return Err(ArchError::ModelShape("wrong sigma count"));
                }
                write_segment(&self.layout, &mut genes, "sigmas", sigmas)?;
                write_consequents(&self.layout, &mut genes, &p.consequents, clusters, inputs + 1)?;
            }
            (&Architecture::ClusteredFcm { clusters, inputs }, TrainedModel::Clustered(p)) => {
                if !matches!(p.activation, Activation::FcmMembership { .. }) {
                    return Err(ArchError::ModelShape("expected fcm activation"));
                }
                write_consequents(&self.layout, &mut genes, &p.consequents, clusters, inputs + 1)?;
            }
            _ => return Err(ArchError::ModelShape("variant mismatch")),
        }
        Ok(genes)
    }

    /// Decode-and-evaluate convenience for a single input.
    pub fn predict(&self, genes: &[f64], x: &[f64]) -> Result<Prediction, ArchError> {
        let model = self.decode(genes)?;
        model.predict(x, self.fallback)
    }

    /// Decode once, evaluate every row.
    pub fn evaluate(&self, genes: &[f64], rows: &[Vec<f64>]) -> Result<Vec<Prediction>, ArchError> {
        let model = self.decode(genes)?;
        rows.iter().map(|x| model.predict(x, self.fallback)).collect()
    }

    /// Fitness for the GA: negated RMSE between decoded-model predictions and
    /// `targets`, in scaled units. Uncovered rows contribute the fallback.
    pub fn training_objective<'a>(
        &'a self,
        rows: &'a [Vec<f64>],
        targets: &'a [f64],
    ) -> impl Fn(&[f64]) -> f64 + Sync + 'a {
        assert_eq!(rows.len(), targets.len());
        assert!(!rows.is_empty());
        move |genes: &[f64]| {
            let model = self.decode(genes).expect("GA genomes always match the layout");
            let mut squared = 0.0;
            for (x, &y) in rows.iter().zip(targets) {
                let p = model.predict(x, self.fallback).expect("training rows are validated");
                let err = p.value - y;
                squared += err * err;
            }
            -libm::sqrt(squared / rows.len() as f64)
        }
    }
}

fn check_centers(centers: &[Vec<f64>]) -> Result<usize, ArchError> {
    if centers.is_empty() {
        return Err(ArchError::NoClusters);
    }
    let dim = centers[0].len();
    if dim == 0 || centers.iter().any(|c| c.len() != dim) {
        return Err(ArchError::InconsistentCenters);
    }
    if centers.iter().flatten().any(|v| !v.is_finite()) {
        return Err(ArchError::InconsistentCenters);
    }
    Ok(dim)
}

/// Keep the first `dims` coordinates of every center: projects centers fitted
/// in input+target space down to the input space used at predict time.
pub fn project_centers(centers: &[Vec<f64>], dims: usize) -> Result<Vec<Vec<f64>>, ArchError> {
    if centers.iter().any(|c| c.len() < dims) {
        return Err(ArchError::InconsistentCenters);
    }
    Ok(centers.iter().map(|c| c[..dims].to_vec()).collect())
}

fn segment_slice<'g>(
    layout: &GenomeLayout,
    genes: &'g [f64],
    name: &str,
) -> Result<&'g [f64], ArchError> {
    let segment = layout.segment(name).ok_or(ArchError::ModelShape("missing segment"))?;
    Ok(&genes[segment.offset..segment.offset + segment.len])
}

fn split_consequents(flat: &[f64], rules: usize, width: usize) -> Vec<Vec<f64>> {
    debug_assert_eq!(flat.len(), rules * width);
    flat.chunks_exact(width).map(|c| c.to_vec()).collect()
}

fn write_segment(
    layout: &GenomeLayout,
    genes: &mut [f64],
    name: &str,
    values: &[f64],
) -> Result<(), ArchError> {
    let segment = layout.segment(name).ok_or(ArchError::ModelShape("missing segment"))?;
    if values.len() != segment.len {
        return Err(ArchError::ModelShape("segment length mismatch"));
    }
    genes[segment.offset..segment.offset + segment.len].copy_from_slice(values);
    Ok(())
}

fn write_consequents(
    layout: &GenomeLayout,
    genes: &mut [f64],
    consequents: &[Vec<f64>],
    rules: usize,
    width: usize,
) -> Result<(), ArchError> {
    if consequents.len() != rules || consequents.iter().any(|c| c.len() != width) {
        return Err(ArchError::ModelShape("wrong consequent shape"));
    }
    let flat: Vec<f64> = consequents.iter().flatten().copied().collect();
    write_segment(layout, genes, "consequents", &flat)
}

/// Antecedent tuple of grid rule `rule_index`, mixed radix with input 0 as
/// the most significant digit.
pub fn grid_antecedents(rule_index: usize, inputs: usize, mfs_per_input: usize) -> Vec<usize> {
    let mut digits = vec![0; inputs];
    let mut rest = rule_index;
    for slot in digits.iter_mut().rev() {
        *slot = rest % mfs_per_input;
        rest /= mfs_per_input;
    }
    digits
}

/// Inverse of [`grid_antecedents`].
pub fn grid_rule_index(antecedents: &[usize], mfs_per_input: usize) -> usize {
    antecedents.iter().fold(0, |acc, &a| acc * mfs_per_input + a)
}

fn decode_grid(
    layout: &GenomeLayout,
    genes: &[f64],
    prefix: &str,
    inputs: usize,
    mfs_per_input: usize,
    order: TskOrder,
) -> Result<FuzzySystem, ArchError> {
    let mut partitions = Vec::with_capacity(inputs);
    for i in 0..inputs {
        let raw = segment_slice(layout, genes, &format!("{prefix}mf[{i}]"))?;
        let mfs = raw
            .chunks_exact(3)
            .map(|t| Mf::Triangular(TriangularMf::from_unsorted(t[0], t[1], t[2])))
            .collect();
        partitions.push(InputPartition::new(mfs)?);
    }
    let consequents = segment_slice(layout, genes, &format!("{prefix}consequents"))?;
    let rule_count = mfs_per_input.pow(inputs as u32);
    let width = order.consequent_len(inputs);
    let rules = (0..rule_count)
        .map(|r| TskRule {
            antecedents: grid_antecedents(r, inputs, mfs_per_input),
            consequent: consequents[r * width..(r + 1) * width].to_vec(),
        })
        .collect();
    Ok(FuzzySystem::new(partitions, rules, order)?)
}

fn encode_grid(
    layout: &GenomeLayout,
    genes: &mut [f64],
    prefix: &str,
    system: &FuzzySystem,
    inputs: usize,
    mfs_per_input: usize,
    order: TskOrder,
) -> Result<(), ArchError> {
    if system.order != order || system.num_inputs() != inputs {
        return Err(ArchError::ModelShape("order or input count mismatch"));
    }
    if system.rule_count() != mfs_per_input.pow(inputs as u32) {
        return Err(ArchError::ModelShape("wrong rule count for grid"));
    }
    for (i, partition) in system.partitions.iter().enumerate() {
        if partition.len() != mfs_per_input {
            return Err(ArchError::ModelShape("wrong MF count in partition"));
        }
        let mut triples = Vec::with_capacity(mfs_per_input * 3);
        for mf in &partition.mfs {
            match mf {
                Mf::Triangular(t) => triples.extend([t.a, t.b, t.c]),
                Mf::Gaussian(_) => return Err(ArchError::ModelShape("grid systems use triangular MFs")),
            }
        }
        write_segment(layout, genes, &format!("{prefix}mf[{i}]"), &triples)?;
    }
    let width = order.consequent_len(inputs);
    let mut flat = Vec::with_capacity(system.rule_count() * width);
    for (r, rule) in system.rules.iter().enumerate() {
        if rule.antecedents != grid_antecedents(r, inputs, mfs_per_input) {
            return Err(ArchError::ModelShape("rules are not in grid enumeration order"));
        }
        flat.extend_from_slice(&rule.consequent);
    }
    write_segment(layout, genes, &format!("{prefix}consequents"), &flat)
}

/// Per-cluster affine rules activated either by Gaussians around the centers
/// or by FCM memberships to them.
#[derive(Clone, Debug, PartialEq)]
pub struct ClusteredPredictor {
    pub centers: Vec<Vec<f64>>,
    /// Per cluster: `inputs` slopes then an intercept.
    pub consequents: Vec<Vec<f64>>,
    pub activation: Activation,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Activation {
    Gaussian { sigmas: Vec<f64> },
    FcmMembership { fuzzifier: f64 },
}

fn affine(consequent: &[f64], x: &[f64]) -> f64 {
    let mut y = consequent[x.len()];
    for (xi, si) in x.iter().zip(consequent) {
        y += xi * si;
    }
    y
}

impl ClusteredPredictor {
    fn predict(&self, x: &[f64], fallback: f64) -> Prediction {
        match &self.activation {
            Activation::Gaussian { sigmas } => {
                let mut numerator = 0.0;
                let mut total = 0.0;
                for ((center, sigma), consequent) in
                    self.centers.iter().zip(sigmas).zip(&self.consequents)
                {
                    let d2: f64 = center.iter().zip(x).map(|(c, v)| (c - v) * (c - v)).sum();
                    let act = libm::exp(-d2 / (2.0 * sigma * sigma));
                    numerator += act * affine(consequent, x);
                    total += act;
                }
                if total < COVERAGE_EPSILON {
                    Prediction { value: fallback, covered: false }
                } else {
                    Prediction { value: numerator / total, covered: true }
                }
            }
            Activation::FcmMembership { fuzzifier } => {
                let u = fcm_membership(x, &self.centers, *fuzzifier);
                let value = u
                    .iter()
                    .zip(&self.consequents)
                    .map(|(&w, consequent)| w * affine(consequent, x))
                    .sum();
                Prediction { value, covered: true }
            }
        }
    }
}

/// A decoded, evaluable model.
#[derive(Clone, Debug)]
pub enum TrainedModel {
    Grid(FuzzySystem),
    Cascade(Vec<FuzzySystem>),
    Clustered(ClusteredPredictor),
}

impl TrainedModel {
    pub fn num_inputs(&self) -> usize {
        match self {
            TrainedModel::Grid(system) => system.num_inputs(),
            TrainedModel::Cascade(stages) => stages.len() + 1,
            TrainedModel::Clustered(p) => p.centers[0].len(),
        }
    }

    pub fn predict(&self, x: &[f64], fallback: f64) -> Result<Prediction, ArchError> {
        let expected = self.num_inputs();
        if x.len() != expected {
            return Err(ArchError::DimensionMismatch { expected, got: x.len() });
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(ArchError::NonFiniteInput);
        }
        match self {
            TrainedModel::Grid(system) => Ok(system.eval(x, fallback)?),
            TrainedModel::Cascade(stages) => {
                let mut covered = true;
                let first = stages[0].eval(&[x[0], x[1]], fallback)?;
                covered &= first.covered;
                let mut value = first.value;
                for (k, stage) in stages.iter().enumerate().skip(1) {
                    let p = stage.eval(&[value.clamp(0.0, 1.0), x[k + 1]], fallback)?;
                    covered &= p.covered;
                    value = p.value;
                }
                Ok(Prediction { value, covered })
            }
            TrainedModel::Clustered(p) => Ok(p.predict(x, fallback)),
        }
    }
}
