//! File I/O around the core dataset types: loading the UCI `.dat` file,
//! exporting the canonical CSV, and reading input CSVs for prediction.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context};
use gfs_core::dataset::{Dataset, FEATURE_NAMES, TARGET_NAME};

use crate::error::{data, CliResult};

/// Load and validate the airfoil self-noise file (whitespace-separated, six
/// columns, no header).
pub fn load_airfoil(path: impl AsRef<Path>) -> CliResult<Dataset> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read dataset file {}", path.display()))
        .map_err(data)?;
    Dataset::parse_dat(&text)
        .map_err(|e| data(anyhow!("{}: {e}", path.display())))
}

pub const CSV_HEADER: &str = "frequency,angle,chord,velocity,thickness,noise";

/// Canonical CSV export: header plus one row per sample, values printed with
/// the shortest round-trip representation.
pub fn canonical_csv(dataset: &Dataset) -> String {
    let mut out = String::with_capacity(dataset.len() * 48);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for s in dataset.samples() {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            s.frequency,
            s.angle_of_attack,
            s.chord_length,
            s.free_stream_velocity,
            s.suction_side_displacement_thickness,
            s.noise
        ));
    }
    out
}

pub fn write_canonical_csv(dataset: &Dataset, path: impl AsRef<Path>) -> CliResult<()> {
    let path = path.as_ref();
    fs::write(path, canonical_csv(dataset))
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(data)
}

/// Rows read back from a canonical CSV: raw input values plus the observed
/// noise column when present.
pub struct InputRows {
    pub inputs: Vec<[f64; 5]>,
    pub actual_db: Option<Vec<f64>>,
}

/// Parse a prediction-input CSV. The header must start with the five
/// canonical feature columns; a trailing `noise` column is optional and, when
/// present, is carried through for side-by-side reporting.
pub fn read_input_csv(path: impl AsRef<Path>) -> CliResult<InputRows> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read input CSV {}", path.display()))
        .map_err(data)?;
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| data(anyhow!("{}: empty file", path.display())))?;
    let columns: Vec<&str> = header.split(',').map(str::trim).collect();
    let expects_noise = if columns == FEATURE_NAMES {
        false
    } else if columns.len() == 6 && columns[..5] == FEATURE_NAMES && columns[5] == TARGET_NAME {
        true
    } else {
        return Err(data(anyhow!(
            "{}: expected header '{}' (noise column optional), got '{header}'",
            path.display(),
            CSV_HEADER
        )));
    };

    let mut inputs = Vec::new();
    let mut actual = Vec::new();
    for (index, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let expected = if expects_noise { 6 } else { 5 };
        if fields.len() != expected {
            return Err(data(anyhow!(
                "{}: line {}: expected {} fields, found {}",
                path.display(),
                index + 1,
                expected,
                fields.len()
            )));
        }
        let mut row = [0.0f64; 5];
        for (i, slot) in row.iter_mut().enumerate() {
            *slot = fields[i].parse().map_err(|_| {
                data(anyhow!("{}: line {}: '{}' is not a number", path.display(), index + 1, fields[i]))
            })?;
        }
        if row.iter().any(|v| !v.is_finite()) {
            return Err(data(anyhow!("{}: line {}: non-finite input", path.display(), index + 1)));
        }
        inputs.push(row);
        if expects_noise {
            actual.push(fields[5].parse().map_err(|_| {
                data(anyhow!("{}: line {}: '{}' is not a number", path.display(), index + 1, fields[5]))
            })?);
        }
    }
    if inputs.is_empty() {
        return Err(data(anyhow!("{}: no data rows", path.display())));
    }
    Ok(InputRows { inputs, actual_db: expects_noise.then_some(actual) })
}
