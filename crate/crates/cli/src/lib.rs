//! Harness library behind the `gfs` binary: experiment configuration,
//! dataset file I/O, the run/compare/cluster pipelines, model persistence,
//! and the rayon-backed population evaluator.

pub mod config;
pub mod data_io;
pub mod error;
pub mod experiment;
pub mod model_io;
pub mod parallel;
