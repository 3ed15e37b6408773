//! Trained-model persistence (JSON) and file-based prediction.
//!
//! A saved model bundles the architecture tag, any frozen data (cluster
//! centers, fuzzifier), the trained gene vector, the scaler fitted on the
//! training split, and the uncovered-input fallback — everything needed to
//! map raw input rows to dB predictions identically to the in-memory model.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context};
use gfs_core::arch::{Architecture, Regressor};
use gfs_core::dataset::Scaler;
use gfs_core::tsk::TskOrder;
use serde::{Deserialize, Serialize};

use crate::config::VariantKind;
use crate::data_io::read_input_csv;
use crate::error::{data, CliResult};

pub const MODEL_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SavedModel {
    pub format_version: u32,
    pub variant: VariantKind,
    pub inputs: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mfs_per_input: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fuzzifier: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centers: Option<Vec<Vec<f64>>>,
    pub fallback: f64,
    pub scaler: Scaler,
    pub genes: Vec<f64>,
}

impl SavedModel {
    pub fn from_parts(
        variant: VariantKind,
        regressor: &Regressor,
        scaler: &Scaler,
        genes: Vec<f64>,
    ) -> Self {
        let (mfs_per_input, order) = match *regressor.architecture() {
            Architecture::Brute { mfs_per_input, order, .. }
            | Architecture::Cascade { mfs_per_input, order, .. } => {
                (Some(mfs_per_input), Some(order_to_u8(order)))
            }
            _ => (None, None),
        };
        let centers = (!regressor.centers().is_empty()).then(|| regressor.centers().to_vec());
        let fuzzifier = matches!(variant, VariantKind::ClusteredFcm).then(|| regressor.fuzzifier());
        SavedModel {
            format_version: MODEL_FORMAT_VERSION,
            variant,
            inputs: regressor.num_inputs(),
            mfs_per_input,
            order,
            fuzzifier,
            centers,
            fallback: regressor.fallback(),
            scaler: scaler.clone(),
            genes,
        }
    }

    /// Rebuild the regressor; errors if required fields are missing or the
    /// gene vector does not match the architecture's layout.
    pub fn to_regressor(&self) -> CliResult<Regressor> {
        let missing = |what: &str| data(anyhow!("model file is missing '{what}'"));
        let regressor = match self.variant {
            VariantKind::Brute => Regressor::brute(
                self.inputs,
                self.mfs_per_input.ok_or_else(|| missing("mfs_per_input"))?,
                u8_to_order(self.order.ok_or_else(|| missing("order"))?)?,
            ),
            VariantKind::Gft => Regressor::cascade(
                self.inputs,
                self.mfs_per_input.ok_or_else(|| missing("mfs_per_input"))?,
                u8_to_order(self.order.ok_or_else(|| missing("order"))?)?,
            ),
            VariantKind::ClusteredGauss => {
                Regressor::clustered_gauss(self.centers.clone().ok_or_else(|| missing("centers"))?)
            }
            VariantKind::ClusteredFcm => Regressor::clustered_fcm(
                self.centers.clone().ok_or_else(|| missing("centers"))?,
                self.fuzzifier.ok_or_else(|| missing("fuzzifier"))?,
            ),
        }
        .map_err(|e| data(anyhow!("invalid model: {e}")))?;
        if self.genes.len() != regressor.layout().total_len() {
            return Err(data(anyhow!(
                "model has {} genes but the {} layout needs {}",
                self.genes.len(),
                label_of(self),
                regressor.layout().total_len()
            )));
        }
        Ok(regressor.with_fallback(self.fallback))
    }

    pub fn save(&self, path: impl AsRef<Path>) -> CliResult<()> {
        let path = path.as_ref();
        let json = serde_json::to_string_pretty(self)
            .map_err(|e| crate::error::internal(anyhow!("model serialization failed: {e}")))?;
        fs::write(path, json)
            .with_context(|| format!("cannot write model {}", path.display()))
            .map_err(data)
    }

    pub fn load(path: impl AsRef<Path>) -> CliResult<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read model {}", path.display()))
            .map_err(data)?;
        let model: SavedModel = serde_json::from_str(&text)
            .with_context(|| format!("malformed model file {}", path.display()))
            .map_err(data)?;
        if model.format_version != MODEL_FORMAT_VERSION {
            return Err(data(anyhow!(
                "{}: unsupported model format version {} (this build reads version {})",
                path.display(),
                model.format_version,
                MODEL_FORMAT_VERSION
            )));
        }
        Ok(model)
    }
}

fn order_to_u8(order: TskOrder) -> u8 {
    match order {
        TskOrder::Zero => 0,
        TskOrder::One => 1,
    }
}

fn u8_to_order(order: u8) -> CliResult<TskOrder> {
    match order {
        0 => Ok(TskOrder::Zero),
        1 => Ok(TskOrder::One),
        other => Err(data(anyhow!("model order must be 0 or 1, got {other}"))),
    }
}

fn label_of(model: &SavedModel) -> String {
    match model.variant {
        VariantKind::Brute => format!(
            "brute-{}mf-o{}",
            model.mfs_per_input.unwrap_or(0),
            model.order.unwrap_or(0)
        ),
        VariantKind::Gft => format!(
            "gft-{}mf-o{}",
            model.mfs_per_input.unwrap_or(0),
            model.order.unwrap_or(0)
        ),
        VariantKind::ClusteredGauss => {
            format!("clustered-gauss-{}", model.centers.as_ref().map_or(0, |c| c.len()))
        }
        VariantKind::ClusteredFcm => {
            format!("clustered-fcm-{}", model.centers.as_ref().map_or(0, |c| c.len()))
        }
    }
}

/// Run a saved model over an input CSV; writes `index,predicted_dB` rows
/// (plus `actual_dB` when the input carries a noise column) and returns the
/// prediction count.
pub fn predict_file(
    model_path: impl AsRef<Path>,
    input_path: impl AsRef<Path>,
    output_path: impl AsRef<Path>,
) -> CliResult<usize> {
    let model = SavedModel::load(model_path)?;
    let regressor = model.to_regressor()?;
    let decoded = regressor
        .decode(&model.genes)
        .map_err(|e| data(anyhow!("model genes do not decode: {e}")))?;
    let rows = read_input_csv(input_path)?;

    let mut out = String::new();
    match &rows.actual_db {
        Some(actual) => {
            out.push_str("index,actual_dB,predicted_dB\n");
            for (i, (inputs, a)) in rows.inputs.iter().zip(actual).enumerate() {
                let scaled = model.scaler.scale_inputs(*inputs);
                let p = decoded
                    .predict(&scaled, model.fallback)
                    .map_err(|e| data(anyhow!("prediction failed: {e}")))?;
                let _ = writeln!(out, "{},{},{}", i, a, model.scaler.invert_target(p.value));
            }
        }
        None => {
            out.push_str("index,predicted_dB\n");
            for (i, inputs) in rows.inputs.iter().enumerate() {
                let scaled = model.scaler.scale_inputs(*inputs);
                let p = decoded
                    .predict(&scaled, model.fallback)
                    .map_err(|e| data(anyhow!("prediction failed: {e}")))?;
                let _ = writeln!(out, "{},{}", i, model.scaler.invert_target(p.value));
            }
        }
    }
    let output_path = output_path.as_ref();
    fs::write(output_path, out)
        .with_context(|| format!("cannot write predictions {}", output_path.display()))
        .map_err(data)?;
    Ok(rows.inputs.len())
}

/// Human-readable structure summary for `gfs describe`.
pub fn describe(model: &SavedModel) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "model: {}", label_of(model));
    let _ = writeln!(out, "inputs: {}", model.inputs);
    let _ = writeln!(out, "parameters: {}", model.genes.len());
    match model.variant {
        VariantKind::Brute => {
            let m = model.mfs_per_input.unwrap_or(0);
            let _ = writeln!(out, "structure: full rule grid, {m} triangular MFs per input");
            let _ = writeln!(out, "rules: {}", m.pow(model.inputs as u32));
            let _ = writeln!(out, "order: {}", model.order.unwrap_or(0));
        }
        VariantKind::Gft => {
            let m = model.mfs_per_input.unwrap_or(0);
            let stages = model.inputs.saturating_sub(1);
            let _ = writeln!(out, "structure: cascade of {stages} two-input grids, {m} MFs per input");
            let _ = writeln!(out, "rules: {}", stages * m * m);
            let _ = writeln!(out, "order: {}", model.order.unwrap_or(0));
        }
        VariantKind::ClusteredGauss => {
            let c = model.centers.as_ref().map_or(0, |c| c.len());
            let _ = writeln!(out, "structure: {c} Gaussian activations on frozen FCM centers, trained widths");
            let _ = writeln!(out, "rules: {c} (one affine consequent per cluster)");
        }
        VariantKind::ClusteredFcm => {
            let c = model.centers.as_ref().map_or(0, |c| c.len());
            let _ = writeln!(
                out,
                "structure: {c} FCM-membership activations (fuzzifier {}) on frozen centers",
                model.fuzzifier.unwrap_or(f64::NAN)
            );
            let _ = writeln!(out, "rules: {c} (one affine consequent per cluster)");
        }
    }
    if let Ok(regressor) = model.to_regressor() {
        let _ = writeln!(out, "genome segments:");
        for segment in regressor.layout().segments() {
            let _ = writeln!(out, "  {:<24} offset {:>6}  len {:>6}", segment.name, segment.offset, segment.len);
        }
    }
    let (t_min, t_max) = model.scaler.target_range;
    let _ = writeln!(
        out,
        "scaler: target [{t_min}, {t_max}] dB, log-frequency {}",
        if model.scaler.log_frequency { "on" } else { "off" }
    );
    let _ = writeln!(out, "uncovered-input fallback (scaled): {}", model.fallback);
    out
}
