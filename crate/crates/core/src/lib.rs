//! Core building blocks for genetic fuzzy regression: membership functions,
//! TSK inference, real-valued genome encodings, a crossover-based GA, and
//! fuzzy c-means clustering.
//!
//! Everything in this crate is pure computation over `f64` slices. All
//! randomness flows through the seeded [`rng::Rng`] stream so that any run is
//! reproducible bit-for-bit, regardless of how fitness evaluation is
//! parallelised by the caller.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod arch;
pub mod dataset;
pub mod fcm;
pub mod ga;
pub mod genome;
pub mod mf;
pub mod rng;
pub mod tsk;

pub use arch::{Architecture, Regressor, TrainedModel};
pub use dataset::{Dataset, Sample, Scaler};
pub use fcm::{fcm_fit, fcm_membership, ClusterModel, ElbowCurve, FcmParams};
pub use ga::{evolve, Evaluator, GaConfig, GaOutcome, GenerationStats, SerialEvaluator};
pub use genome::{Chromosome, GenomeLayout, Segment, SegmentKind};
pub use mf::{GaussianMf, Mf, TriangularMf};
pub use tsk::{FuzzySystem, InputPartition, Prediction, TskOrder, TskRule};
