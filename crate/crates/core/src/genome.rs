//! Flat real-vector encoding of fuzzy models.
//!
//! A [`GenomeLayout`] is an ordered list of named, contiguous segments. Each
//! segment knows its per-gene bounds, how to draw initial values, and how to
//! repair genes after variation (sorting membership-function triples so every
//! chromosome stays decodable).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::mf::ruspini_triangles;
use crate::rng::Rng;

/// Gene bounds for order-1 consequents, in scaled target units.
pub const SLOPE_BOUNDS: (f64, f64) = (-2.0, 2.0);
pub const INTERCEPT_BOUNDS: (f64, f64) = (-1.0, 2.0);
/// Gene bounds for the per-cluster Gaussian widths.
pub const SIGMA_BOUNDS: (f64, f64) = (0.01, 2.0);
/// Relative jitter applied to the Ruspini seed triangles at initialisation.
const INIT_JITTER: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GenomeError {
    LengthMismatch { expected: usize, got: usize },
}

impl fmt::Display for GenomeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenomeError::LengthMismatch { expected, got } => {
                write!(f, "genome has {got} genes, layout expects {expected}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GenomeError {}

/// What a segment's genes mean, which fixes their bounds, initialisation,
/// and repair rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentKind {
    /// `mf_count` triangular membership functions as (a, b, c) triples in [0, 1].
    MfPartition { mf_count: usize },
    /// One constant per rule, in [0, 1] (scaled target units).
    Order0Consequents,
    /// Per rule: `inputs` slopes then an intercept.
    Order1Consequents { inputs: usize },
    /// One Gaussian width per cluster.
    Sigmas,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    pub name: String,
    pub offset: usize,
    pub len: usize,
    pub kind: SegmentKind,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenomeLayout {
    segments: Vec<Segment>,
    total: usize,
}

impl GenomeLayout {
    pub fn new() -> Self {
        GenomeLayout { segments: Vec::new(), total: 0 }
    }

    pub fn push(&mut self, name: impl Into<String>, len: usize, kind: SegmentKind) {
        if let SegmentKind::MfPartition { mf_count } = kind {
            debug_assert_eq!(len, mf_count * 3);
        }
        self.segments.push(Segment { name: name.into(), offset: self.total, len, kind });
        self.total += len;
    }

    pub fn total_len(&self) -> usize {
        self.total
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn segment(&self, name: &str) -> Option<&Segment> {
        self.segments.iter().find(|s| s.name == name)
    }

    pub fn check_len(&self, genes: &[f64]) -> Result<(), GenomeError> {
        if genes.len() != self.total {
            return Err(GenomeError::LengthMismatch { expected: self.total, got: genes.len() });
        }
        Ok(())
    }

    /// (lo, hi) for every gene, in layout order.
    pub fn bounds_vec(&self) -> Vec<(f64, f64)> {
        let mut bounds = Vec::with_capacity(self.total);
        for segment in &self.segments {
            match segment.kind {
                SegmentKind::MfPartition { .. } | SegmentKind::Order0Consequents => {
                    bounds.extend(core::iter::repeat_n((0.0, 1.0), segment.len));
                }
                SegmentKind::Order1Consequents { inputs } => {
                    let per_rule = inputs + 1;
                    debug_assert_eq!(segment.len % per_rule, 0);
                    for g in 0..segment.len {
                        if g % per_rule == inputs {
                            bounds.push(INTERCEPT_BOUNDS);
                        } else {
                            bounds.push(SLOPE_BOUNDS);
                        }
                    }
                }
                SegmentKind::Sigmas => {
                    bounds.extend(core::iter::repeat_n(SIGMA_BOUNDS, segment.len));
                }
            }
        }
        bounds
    }

    /// Sort-repair every membership-function triple in place. Idempotent;
    /// leaves non-MF segments untouched.
    pub fn repair(&self, genes: &mut [f64]) {
        for segment in &self.segments {
            if let SegmentKind::MfPartition { .. } = segment.kind {
                let genes = &mut genes[segment.offset..segment.offset + segment.len];
                for triple in genes.chunks_exact_mut(3) {
                    if triple[0] > triple[1] {
                        triple.swap(0, 1);
                    }
                    if triple[1] > triple[2] {
                        triple.swap(1, 2);
                    }
                    if triple[0] > triple[1] {
                        triple.swap(0, 1);
                    }
                }
            }
        }
    }

    /// Draw one genome. Membership triples start from the uniform Ruspini
    /// partition plus a small jitter so generation 0 covers the whole input
    /// box; everything else is uniform within its bounds.
    pub fn init_genes(&self, rng: &mut Rng) -> Vec<f64> {
        let mut genes = Vec::with_capacity(self.total);
        for segment in &self.segments {
            match segment.kind {
                SegmentKind::MfPartition { mf_count } => {
                    let step = 1.0 / (mf_count - 1) as f64;
                    for t in ruspini_triangles(mf_count) {
                        for v in [t.a, t.b, t.c] {
                            // the boundary feet and peaks stay pinned so the
                            // initial population always covers [0, 1]
                            if v == 0.0 || v == 1.0 {
                                genes.push(v);
                            } else {
                                let jittered = v + rng.uniform(-INIT_JITTER, INIT_JITTER) * step;
                                genes.push(jittered.clamp(0.0, 1.0));
                            }
                        }
                    }
                }
                SegmentKind::Order0Consequents => {
                    for _ in 0..segment.len {
                        genes.push(rng.uniform(0.0, 1.0));
                    }
                }
                SegmentKind::Order1Consequents { inputs } => {
                    let per_rule = inputs + 1;
                    for g in 0..segment.len {
                        let (lo, hi) = if g % per_rule == inputs {
                            INTERCEPT_BOUNDS
                        } else {
                            SLOPE_BOUNDS
                        };
                        genes.push(rng.uniform(lo, hi));
                    }
                }
                SegmentKind::Sigmas => {
                    for _ in 0..segment.len {
                        genes.push(rng.uniform(SIGMA_BOUNDS.0, SIGMA_BOUNDS.1));
                    }
                }
            }
        }
        self.repair(&mut genes);
        genes
    }
}

impl Default for GenomeLayout {
    fn default() -> Self {
        Self::new()
    }
}

/// A candidate solution: genes plus cached fitness once evaluated.
#[derive(Clone, Debug, PartialEq)]
pub struct Chromosome {
    pub genes: Vec<f64>,
    pub fitness: Option<f64>,
}

impl Chromosome {
    pub fn new(genes: Vec<f64>) -> Self {
        Chromosome { genes, fitness: None }
    }
}
