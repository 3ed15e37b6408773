//! Takagi-Sugeno-Kang inference (order 0 and 1) over explicit rule bases.
//!
//! Firing strengths use the product t-norm; the output is the
//! firing-strength-weighted average of the rule consequents. When the total
//! firing strength drops below [`COVERAGE_EPSILON`] the input is *uncovered*:
//! evaluation returns the caller-supplied fallback and flags the sample so
//! that the harness can report how often the rule base failed to cover its
//! inputs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::mf::Mf;

/// Total firing strength below this counts as "no rule fired".
pub const COVERAGE_EPSILON: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TskError {
    DimensionMismatch { expected: usize, got: usize },
    NonFiniteInput,
    AntecedentOutOfRange { rule: usize, input: usize, index: usize },
    ConsequentArity { rule: usize, expected: usize, got: usize },
    EmptyRuleBase,
    EmptyPartition,
}

impl fmt::Display for TskError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TskError::DimensionMismatch { expected, got } => {
                write!(f, "input has {got} dimensions, system expects {expected}")
            }
            TskError::NonFiniteInput => write!(f, "input vector contains a non-finite value"),
            TskError::AntecedentOutOfRange { rule, input, index } => {
                write!(f, "rule {rule} references membership function {index} on input {input}, which does not exist")
            }
            TskError::ConsequentArity { rule, expected, got } => {
                write!(f, "rule {rule} has {got} consequent coefficients, expected {expected}")
            }
            TskError::EmptyRuleBase => write!(f, "rule base is empty"),
            TskError::EmptyPartition => write!(f, "input partition has no membership functions"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for TskError {}

/// TSK consequent order: constant (0) or affine in the inputs (1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub enum TskOrder {
    Zero,
    One,
}

impl TskOrder {
    /// Coefficients a consequent carries: 1 constant, or `inputs` slopes
    /// followed by an intercept.
    pub fn consequent_len(self, inputs: usize) -> usize {
        match self {
            TskOrder::Zero => 1,
            TskOrder::One => inputs + 1,
        }
    }
}

/// Ordered membership functions over one scaled input dimension.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct InputPartition {
    pub mfs: Vec<Mf>,
}

impl InputPartition {
    pub fn new(mfs: Vec<Mf>) -> Result<Self, TskError> {
        if mfs.is_empty() {
            return Err(TskError::EmptyPartition);
        }
        Ok(InputPartition { mfs })
    }

    pub fn len(&self) -> usize {
        self.mfs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mfs.is_empty()
    }
}

/// One rule: an MF index per input plus consequent coefficients.
/// Order-1 consequents are laid out as `[slope_0, .., slope_{d-1}, intercept]`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct TskRule {
    pub antecedents: Vec<usize>,
    pub consequent: Vec<f64>,
}

impl TskRule {
    pub fn output(&self, x: &[f64], order: TskOrder) -> f64 {
        match order {
            TskOrder::Zero => self.consequent[0],
            TskOrder::One => {
                let mut y = self.consequent[x.len()];
                for (xi, si) in x.iter().zip(&self.consequent) {
                    y += xi * si;
                }
                y
            }
        }
    }
}

/// Result of evaluating a fuzzy regressor at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Prediction {
    pub value: f64,
    pub covered: bool,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct FuzzySystem {
    pub partitions: Vec<InputPartition>,
    pub rules: Vec<TskRule>,
    pub order: TskOrder,
}

impl FuzzySystem {
    pub fn new(
        partitions: Vec<InputPartition>,
        rules: Vec<TskRule>,
        order: TskOrder,
    ) -> Result<Self, TskError> {
        let system = FuzzySystem { partitions, rules, order };
        system.validate()?;
        Ok(system)
    }

    /// Check antecedent indices and consequent arities against the partitions.
    pub fn validate(&self) -> Result<(), TskError> {
        if self.rules.is_empty() {
            return Err(TskError::EmptyRuleBase);
        }
        for partition in &self.partitions {
            if partition.is_empty() {
                return Err(TskError::EmptyPartition);
            }
        }
        let d = self.partitions.len();
        let consequent_len = self.order.consequent_len(d);
        for (r, rule) in self.rules.iter().enumerate() {
            if rule.antecedents.len() != d {
                return Err(TskError::DimensionMismatch { expected: d, got: rule.antecedents.len() });
            }
            for (i, &a) in rule.antecedents.iter().enumerate() {
                if a >= self.partitions[i].len() {
                    return Err(TskError::AntecedentOutOfRange { rule: r, input: i, index: a });
                }
            }
            if rule.consequent.len() != consequent_len {
                return Err(TskError::ConsequentArity {
                    rule: r,
                    expected: consequent_len,
                    got: rule.consequent.len(),
                });
            }
        }
        Ok(())
    }

    pub fn num_inputs(&self) -> usize {
        self.partitions.len()
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    fn check_input(&self, x: &[f64]) -> Result<(), TskError> {
        if x.len() != self.partitions.len() {
            return Err(TskError::DimensionMismatch { expected: self.partitions.len(), got: x.len() });
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(TskError::NonFiniteInput);
        }
        Ok(())
    }

    /// Per-input MF degrees, flattened per partition.
    fn degree_table(&self, x: &[f64], table: &mut Vec<Vec<f64>>) {
        table.clear();
        for (partition, &xi) in self.partitions.iter().zip(x) {
            table.push(partition.mfs.iter().map(|mf| mf.degree(xi)).collect());
        }
    }

    /// Product t-norm firing strength of every rule at `x`.
    pub fn firing_strengths(&self, x: &[f64]) -> Result<Vec<f64>, TskError> {
        self.check_input(x)?;
        let mut table = Vec::new();
        self.degree_table(x, &mut table);
        Ok(self
            .rules
            .iter()
            .map(|rule| {
                rule.antecedents
                    .iter()
                    .enumerate()
                    .map(|(i, &a)| table[i][a])
                    .product()
            })
            .collect())
    }

    /// Weighted-average TSK output. Returns `fallback` (flagged uncovered)
    /// when no rule fires above [`COVERAGE_EPSILON`].
    pub fn eval(&self, x: &[f64], fallback: f64) -> Result<Prediction, TskError> {
        self.check_input(x)?;
        let mut scratch = EvalScratch::new();
        Ok(self.eval_prepared(x, fallback, &mut scratch))
    }

    /// Evaluation core without input validation, reusing scratch storage.
    /// Used by the fitness loop where the same system is applied to many rows.
    pub(crate) fn eval_prepared(
        &self,
        x: &[f64],
        fallback: f64,
        scratch: &mut EvalScratch,
    ) -> Prediction {
        self.degree_table(x, &mut scratch.degrees);
        let mut numerator = 0.0;
        let mut total_weight = 0.0;
        for rule in &self.rules {
            let mut w = 1.0;
            for (i, &a) in rule.antecedents.iter().enumerate() {
                w *= scratch.degrees[i][a];
                if w == 0.0 {
                    break;
                }
            }
            if w > 0.0 {
                numerator += w * rule.output(x, self.order);
                total_weight += w;
            }
        }
        if total_weight < COVERAGE_EPSILON {
            Prediction { value: fallback, covered: false }
        } else {
            Prediction { value: numerator / total_weight, covered: true }
        }
    }
}

/// Reusable degree-table storage for repeated evaluation.
#[derive(Default)]
pub(crate) struct EvalScratch {
    degrees: Vec<Vec<f64>>,
}

impl EvalScratch {
    pub(crate) fn new() -> Self {
        EvalScratch { degrees: vec![] }
    }
}
