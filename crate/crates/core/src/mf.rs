//! Triangular and Gaussian membership functions over scaled inputs.

use alloc::vec::Vec;
use core::fmt;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MfError {
    UnorderedTriangle { a: f64, b: f64, c: f64 },
    NonPositiveSigma(f64),
    NonFiniteParameter,
}

impl fmt::Display for MfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MfError::UnorderedTriangle { a, b, c } => {
                write!(f, "triangular membership function requires a <= b <= c, got ({a}, {b}, {c})")
            }
            MfError::NonPositiveSigma(s) => write!(f, "gaussian sigma must be positive, got {s}"),
            MfError::NonFiniteParameter => write!(f, "membership function parameter is not finite"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for MfError {}

/// Triangle with feet `a`, `c` and peak `b`. Degenerate edges (`a == b` or
/// `b == c`) give the half-open triangles used at domain boundaries.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct TriangularMf {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl TriangularMf {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self, MfError> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(MfError::NonFiniteParameter);
        }
        if !(a <= b && b <= c) {
            return Err(MfError::UnorderedTriangle { a, b, c });
        }
        Ok(TriangularMf { a, b, c })
    }

    /// Sort-repair constructor: any three finite values become a valid triangle.
    pub fn from_unsorted(x: f64, y: f64, z: f64) -> Self {
        let mut t = [x, y, z];
        if t[0] > t[1] {
            t.swap(0, 1);
        }
        if t[1] > t[2] {
            t.swap(1, 2);
        }
        if t[0] > t[1] {
            t.swap(0, 1);
        }
        TriangularMf { a: t[0], b: t[1], c: t[2] }
    }

    pub fn degree(&self, x: f64) -> f64 {
        if x < self.a || x > self.c {
            0.0
        } else if x == self.b {
            1.0
        } else if x < self.b {
            (x - self.a) / (self.b - self.a)
        } else {
            (self.c - x) / (self.c - self.b)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct GaussianMf {
    pub mu: f64,
    pub sigma: f64,
}

impl GaussianMf {
    pub fn new(mu: f64, sigma: f64) -> Result<Self, MfError> {
        if !(mu.is_finite() && sigma.is_finite()) {
            return Err(MfError::NonFiniteParameter);
        }
        if sigma <= 0.0 {
            return Err(MfError::NonPositiveSigma(sigma));
        }
        Ok(GaussianMf { mu, sigma })
    }

    pub fn degree(&self, x: f64) -> f64 {
        let d = x - self.mu;
        libm::exp(-(d * d) / (2.0 * self.sigma * self.sigma))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub enum Mf {
    Triangular(TriangularMf),
    Gaussian(GaussianMf),
}

impl Mf {
    pub fn degree(&self, x: f64) -> f64 {
        match self {
            Mf::Triangular(t) => t.degree(x),
            Mf::Gaussian(g) => g.degree(x),
        }
    }

    /// Peak location, used to keep partitions sorted.
    pub fn peak(&self) -> f64 {
        match self {
            Mf::Triangular(t) => t.b,
            Mf::Gaussian(g) => g.mu,
        }
    }
}

/// `count` triangles over [0, 1] with peaks at k/(count-1) and feet on the
/// neighbouring peaks. Degrees sum to exactly 1 everywhere in [0, 1].
pub fn ruspini_triangles(count: usize) -> Vec<TriangularMf> {
    assert!(count >= 2, "a Ruspini partition needs at least two functions");
    let step = 1.0 / (count - 1) as f64;
    (0..count)
        .map(|k| {
            let peak = k as f64 * step;
            let a = if k == 0 { 0.0 } else { peak - step };
            let c = if k == count - 1 { 1.0 } else { peak + step };
            TriangularMf { a, b: peak, c }
        })
        .collect()
}
