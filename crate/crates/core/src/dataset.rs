//! The airfoil self-noise dataset: parsing, validation, splitting, scaling.
//!
//! Five inputs (frequency, angle of attack, chord length, free-stream
//! velocity, suction-side displacement thickness) and one target (scaled
//! sound pressure level in dB). Loading validates each row; frequency,
//! velocity and noise are checked against the published measurement ranges,
//! while angle, chord and thickness are only required to be finite and
//! non-negative because the published bounds for those columns disagree with
//! the actual file (see `column_ranges` for the observed values).

use alloc::vec::Vec;
use core::fmt;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::rng::Rng;

pub const NUM_INPUTS: usize = 5;
pub const FEATURE_NAMES: [&str; NUM_INPUTS] =
    ["frequency", "angle", "chord", "velocity", "thickness"];
pub const TARGET_NAME: &str = "noise";

pub const FREQUENCY_RANGE: (f64, f64) = (50.0, 20_000.0);
pub const VELOCITY_RANGE: (f64, f64) = (31.7, 71.3);
pub const NOISE_RANGE: (f64, f64) = (103.38, 140.987);

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RowError {
    WrongColumnCount { got: usize },
    InvalidNumber { column: &'static str },
    NonFinite { column: &'static str },
    OutOfRange { column: &'static str, value: f64, min: f64, max: f64 },
    Negative { column: &'static str, value: f64 },
}

impl fmt::Display for RowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowError::WrongColumnCount { got } => write!(f, "expected 6 columns, found {got}"),
            RowError::InvalidNumber { column } => write!(f, "{column} is not a number"),
            RowError::NonFinite { column } => write!(f, "{column} is not finite"),
            RowError::OutOfRange { column, value, min, max } => {
                write!(f, "{column} = {value} outside [{min}, {max}]")
            }
            RowError::Negative { column, value } => write!(f, "{column} = {value} must be non-negative"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DatasetError {
    Empty,
    Row { line: usize, reason: RowError },
    InvalidFraction(f64),
    EmptySplit,
    ConstantFeature { name: &'static str },
}

impl fmt::Display for DatasetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatasetError::Empty => write!(f, "dataset is empty"),
            DatasetError::Row { line, reason } => write!(f, "line {line}: {reason}"),
            DatasetError::InvalidFraction(v) => {
                write!(f, "train fraction must lie strictly between 0 and 1, got {v}")
            }
            DatasetError::EmptySplit => write!(f, "split would leave an empty partition"),
            DatasetError::ConstantFeature { name } => {
                write!(f, "feature '{name}' is constant; min-max scaling is undefined")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DatasetError {}

/// One measurement row.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Sample {
    pub frequency: f64,
    pub angle_of_attack: f64,
    pub chord_length: f64,
    pub free_stream_velocity: f64,
    pub suction_side_displacement_thickness: f64,
    /// Scaled sound pressure level, dB (the regression target).
    pub noise: f64,
}

impl Sample {
    pub fn new(values: [f64; 6]) -> Result<Self, RowError> {
        let names = ["frequency", "angle", "chord", "velocity", "thickness", "noise"];
        for (v, name) in values.iter().zip(names) {
            if !v.is_finite() {
                return Err(RowError::NonFinite { column: name });
            }
        }
        let [frequency, angle, chord, velocity, thickness, noise] = values;
        check_range("frequency", frequency, FREQUENCY_RANGE)?;
        check_range("velocity", velocity, VELOCITY_RANGE)?;
        check_range("noise", noise, NOISE_RANGE)?;
        if angle < 0.0 {
            return Err(RowError::Negative { column: "angle", value: angle });
        }
        if chord < 0.0 {
            return Err(RowError::Negative { column: "chord", value: chord });
        }
        if thickness < 0.0 {
            return Err(RowError::Negative { column: "thickness", value: thickness });
        }
        Ok(Sample {
            frequency,
            angle_of_attack: angle,
            chord_length: chord,
            free_stream_velocity: velocity,
            suction_side_displacement_thickness: thickness,
            noise,
        })
    }

    pub fn inputs(&self) -> [f64; NUM_INPUTS] {
        [
            self.frequency,
            self.angle_of_attack,
            self.chord_length,
            self.free_stream_velocity,
            self.suction_side_displacement_thickness,
        ]
    }
}

fn check_range(column: &'static str, value: f64, (min, max): (f64, f64)) -> Result<(), RowError> {
    if value < min || value > max {
        return Err(RowError::OutOfRange { column, value, min, max });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Dataset {
    samples: Vec<Sample>,
}

impl Dataset {
    pub fn from_samples(samples: Vec<Sample>) -> Result<Self, DatasetError> {
        if samples.is_empty() {
            return Err(DatasetError::Empty);
        }
        Ok(Dataset { samples })
    }

    /// Parse the UCI `.dat` layout: one sample per line, six
    /// whitespace/tab-separated numeric fields, no header. Blank lines are
    /// skipped; errors carry the 1-based line number.
    pub fn parse_dat(text: &str) -> Result<Self, DatasetError> {
        let mut samples = Vec::new();
        for (index, line) in text.lines().enumerate() {
            let line_no = index + 1;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(DatasetError::Row {
                    line: line_no,
                    reason: RowError::WrongColumnCount { got: fields.len() },
                });
            }
            let names = ["frequency", "angle", "chord", "velocity", "thickness", "noise"];
            let mut values = [0.0; 6];
            for (i, field) in fields.iter().enumerate() {
                values[i] = field.parse::<f64>().map_err(|_| DatasetError::Row {
                    line: line_no,
                    reason: RowError::InvalidNumber { column: names[i] },
                })?;
            }
            let sample =
                Sample::new(values).map_err(|reason| DatasetError::Row { line: line_no, reason })?;
            samples.push(sample);
        }
        Dataset::from_samples(samples)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    /// Observed (min, max) per column, in file column order.
    pub fn column_ranges(&self) -> [(f64, f64); 6] {
        let mut ranges = [(f64::INFINITY, f64::NEG_INFINITY); 6];
        for s in &self.samples {
            let row = [
                s.frequency,
                s.angle_of_attack,
                s.chord_length,
                s.free_stream_velocity,
                s.suction_side_displacement_thickness,
                s.noise,
            ];
            for (r, v) in ranges.iter_mut().zip(row) {
                r.0 = r.0.min(v);
                r.1 = r.1.max(v);
            }
        }
        ranges
    }

    /// Deterministic shuffle-and-cut split. The train side gets
    /// `floor(n * train_fraction)` rows; together the two sides are a
    /// permutation of the original samples.
    pub fn split(&self, train_fraction: f64, seed: u64) -> Result<(Dataset, Dataset), DatasetError> {
        if !(train_fraction > 0.0 && train_fraction < 1.0) {
            return Err(DatasetError::InvalidFraction(train_fraction));
        }
        let n = self.samples.len();
        let train_len = libm::floor(n as f64 * train_fraction) as usize;
        if train_len == 0 || train_len == n {
            return Err(DatasetError::EmptySplit);
        }
        let mut order: Vec<usize> = (0..n).collect();
        Rng::seed_from(seed).shuffle(&mut order);
        let train = order[..train_len].iter().map(|&i| self.samples[i]).collect();
        let test = order[train_len..].iter().map(|&i| self.samples[i]).collect();
        Ok((Dataset { samples: train }, Dataset { samples: test }))
    }
}

/// Min-max scaler fitted on a training split: each input and the target map
/// to [0, 1] over the fitting set. Inputs are clamped at application time so
/// out-of-range test samples stay inside the membership-function supports;
/// the target mapping is affine and exactly invertible.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Scaler {
    pub input_ranges: [(f64, f64); NUM_INPUTS],
    pub target_range: (f64, f64),
    /// Apply log10 to frequency before min-max scaling.
    pub log_frequency: bool,
}

impl Scaler {
    pub fn fit(dataset: &Dataset, log_frequency: bool) -> Result<Self, DatasetError> {
        if dataset.is_empty() {
            return Err(DatasetError::Empty);
        }
        let mut input_ranges = [(f64::INFINITY, f64::NEG_INFINITY); NUM_INPUTS];
        let mut target_range = (f64::INFINITY, f64::NEG_INFINITY);
        for sample in dataset.samples() {
            let inputs = transform_inputs(sample.inputs(), log_frequency);
            for (r, v) in input_ranges.iter_mut().zip(inputs) {
                r.0 = r.0.min(v);
                r.1 = r.1.max(v);
            }
            target_range.0 = target_range.0.min(sample.noise);
            target_range.1 = target_range.1.max(sample.noise);
        }
        for (i, r) in input_ranges.iter().enumerate() {
            if r.1 <= r.0 {
                return Err(DatasetError::ConstantFeature { name: FEATURE_NAMES[i] });
            }
        }
        if target_range.1 <= target_range.0 {
            return Err(DatasetError::ConstantFeature { name: TARGET_NAME });
        }
        Ok(Scaler { input_ranges, target_range, log_frequency })
    }

    /// Scale raw input values (file units) into the clamped unit box.
    pub fn scale_inputs(&self, raw: [f64; NUM_INPUTS]) -> [f64; NUM_INPUTS] {
        let transformed = transform_inputs(raw, self.log_frequency);
        let mut out = [0.0; NUM_INPUTS];
        for (o, (v, (min, max))) in out.iter_mut().zip(transformed.into_iter().zip(self.input_ranges)) {
            *o = ((v - min) / (max - min)).clamp(0.0, 1.0);
        }
        out
    }

    pub fn scale_sample(&self, sample: &Sample) -> [f64; NUM_INPUTS] {
        self.scale_inputs(sample.inputs())
    }

    pub fn scale_target(&self, noise_db: f64) -> f64 {
        (noise_db - self.target_range.0) / self.target_span()
    }

    pub fn invert_target(&self, scaled: f64) -> f64 {
        self.target_range.0 + scaled * self.target_span()
    }

    /// Width of the target range in dB; converts scaled-domain errors to dB.
    pub fn target_span(&self) -> f64 {
        self.target_range.1 - self.target_range.0
    }
}

fn transform_inputs(mut inputs: [f64; NUM_INPUTS], log_frequency: bool) -> [f64; NUM_INPUTS] {
    if log_frequency {
        inputs[0] = libm::log10(inputs[0]);
    }
    inputs
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::String;

    fn synthetic_text(rows: usize) -> String {
        let mut rng = Rng::seed_from(77);
        let mut text = String::new();
        for _ in 0..rows {
            text.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                rng.uniform(200.0, 20_000.0),
                rng.uniform(0.0, 22.2),
                rng.uniform(0.0254, 0.3048),
                rng.uniform(31.7, 71.3),
                rng.uniform(0.0004, 0.0584),
                rng.uniform(103.38, 140.987),
            ));
        }
        text
    }

    #[test]
    fn parses_tab_and_space_separated_rows() {
        let text = "800\t0\t0.3048\t71.3\t0.00266337\t126.201\n1000 0 0.3048 71.3 0.00266337 125.201\n";
        let ds = Dataset::parse_dat(text).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds.samples()[0].frequency, 800.0);
        assert_eq!(ds.samples()[1].noise, 125.201);
    }

    #[test]
    fn wrong_arity_reports_line_number() {
        let mut text = synthetic_text(6);
        text.push_str("800 0 0.3048 71.3 126.201\n"); // 5 columns on line 7
        let err = Dataset::parse_dat(&text).unwrap_err();
        assert_eq!(
            err,
            DatasetError::Row { line: 7, reason: RowError::WrongColumnCount { got: 5 } }
        );
    }

    #[test]
    fn bad_token_reports_column_and_line() {
        let text = "800\tzero\t0.3048\t71.3\t0.00266337\t126.201\n";
        let err = Dataset::parse_dat(text).unwrap_err();
        assert_eq!(err, DatasetError::Row { line: 1, reason: RowError::InvalidNumber { column: "angle" } });
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(Dataset::parse_dat(""), Err(DatasetError::Empty));
        assert_eq!(Dataset::parse_dat("\n \n"), Err(DatasetError::Empty));
    }

    #[test]
    fn out_of_range_frequency_is_rejected() {
        let text = "30000 0 0.3048 71.3 0.00266337 126.201\n";
        match Dataset::parse_dat(text).unwrap_err() {
            DatasetError::Row { line: 1, reason: RowError::OutOfRange { column: "frequency", .. } } => {}
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn split_sizes_follow_floor_rule() {
        let ds = Dataset::parse_dat(&synthetic_text(1503)).unwrap();
        let (train, test) = ds.split(0.8, 42).unwrap();
        assert_eq!(train.len(), 1202);
        assert_eq!(test.len(), 301);
    }

    #[test]
    fn split_is_deterministic_and_a_partition() {
        let ds = Dataset::parse_dat(&synthetic_text(101)).unwrap();
        for seed in [0, 1, 42] {
            for fraction in [0.2, 0.5, 0.8] {
                let (tr1, te1) = ds.split(fraction, seed).unwrap();
                let (tr2, te2) = ds.split(fraction, seed).unwrap();
                assert_eq!(tr1, tr2);
                assert_eq!(te1, te2);

                let mut combined: Vec<_> = tr1.samples().to_vec();
                combined.extend_from_slice(te1.samples());
                assert_eq!(combined.len(), ds.len());
                let mut original = ds.samples().to_vec();
                let key = |s: &Sample| (s.frequency, s.noise, s.angle_of_attack);
                combined.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap());
                original.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap());
                assert_eq!(combined, original);
            }
        }
    }

    #[test]
    fn degenerate_fractions_are_rejected() {
        let ds = Dataset::parse_dat(&synthetic_text(10)).unwrap();
        assert_eq!(ds.split(1.0, 0), Err(DatasetError::InvalidFraction(1.0)));
        assert_eq!(ds.split(0.0, 0), Err(DatasetError::InvalidFraction(0.0)));
        assert_eq!(ds.split(-0.5, 0), Err(DatasetError::InvalidFraction(-0.5)));
    }

    #[test]
    fn scaler_maps_extremes_to_unit_corners() {
        let ds = Dataset::parse_dat(&synthetic_text(200)).unwrap();
        let scaler = Scaler::fit(&ds, false).unwrap();
        let mins: [f64; NUM_INPUTS] = core::array::from_fn(|i| scaler.input_ranges[i].0);
        let maxs: [f64; NUM_INPUTS] = core::array::from_fn(|i| scaler.input_ranges[i].1);
        assert_eq!(scaler.scale_inputs(mins), [0.0; NUM_INPUTS]);
        assert_eq!(scaler.scale_inputs(maxs), [1.0; NUM_INPUTS]);
    }

    #[test]
    fn target_round_trip_within_1e12_relative() {
        let ds = Dataset::parse_dat(&synthetic_text(100)).unwrap();
        let scaler = Scaler::fit(&ds, false).unwrap();
        for sample in ds.samples() {
            let y = sample.noise;
            let back = scaler.invert_target(scaler.scale_target(y));
            assert!((back - y).abs() / y.abs() < 1e-12);
        }
    }

    #[test]
    fn scaled_inputs_stay_in_unit_box_and_clamp_outside() {
        let ds = Dataset::parse_dat(&synthetic_text(150)).unwrap();
        let scaler = Scaler::fit(&ds, false).unwrap();
        for sample in ds.samples() {
            for v in scaler.scale_sample(sample) {
                assert!((0.0..=1.0).contains(&v));
            }
        }
        let wild = scaler.scale_inputs([1.0e9, 1.0e9, 1.0e9, 1.0e9, 1.0e9]);
        assert_eq!(wild, [1.0; NUM_INPUTS]);
    }

    #[test]
    fn log_frequency_transform_is_applied_before_scaling() {
        let text = "\
100 0 0.1 40.0 0.01 110.0
1000 1 0.2 50.0 0.02 120.0
10000 2 0.3 60.0 0.03 130.0
";
        let ds = Dataset::parse_dat(text).unwrap();
        let scaler = Scaler::fit(&ds, true).unwrap();
        // log10: 2, 3, 4 -> the middle row scales to exactly 0.5
        let mid = scaler.scale_sample(&ds.samples()[1]);
        assert!((mid[0] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn constant_feature_is_an_error() {
        let text = "\
800 0 0.3048 71.3 0.00266337 126.201
900 1 0.3048 71.3 0.00266337 125.0
";
        let ds = Dataset::parse_dat(text).unwrap();
        assert_eq!(Scaler::fit(&ds, false), Err(DatasetError::ConstantFeature { name: "chord" }));
    }
}
