//! Rayon-backed population evaluation. The GA draws all randomness before
//! evaluation and the objective is pure, so results are byte-identical to the
//! serial evaluator at any thread count.

use gfs_core::ga::{Evaluator, Objective, SerialEvaluator};
use rayon::prelude::*;

use crate::error::{internal, CliResult};

pub struct RayonEvaluator {
    pool: rayon::ThreadPool,
}

impl RayonEvaluator {
    pub fn new(threads: usize) -> CliResult<Self> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(internal)?;
        Ok(RayonEvaluator { pool })
    }
}

impl Evaluator for RayonEvaluator {
    fn evaluate(&self, objective: &Objective<'_>, genomes: &[&[f64]]) -> Vec<f64> {
        self.pool.install(|| genomes.par_iter().map(|g| objective(g)).collect())
    }
}

/// `Some(1)` gets the serial path; anything else a rayon pool (`None` sizes
/// it to the available cores).
pub fn make_evaluator(threads: Option<usize>) -> CliResult<Box<dyn Evaluator>> {
    match threads {
        Some(1) => Ok(Box::new(SerialEvaluator)),
        Some(n) => Ok(Box::new(RayonEvaluator::new(n)?)),
        None => Ok(Box::new(RayonEvaluator::new(0)?)), // 0 = rayon default
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_serial_bit_for_bit() {
        let objective = |genes: &[f64]| genes.iter().map(|g| (g - 0.3).abs().sqrt()).sum::<f64>();
        let genomes: Vec<Vec<f64>> = (0..40)
            .map(|i| (0..20).map(|j| ((i * 31 + j * 17) % 97) as f64 / 97.0).collect())
            .collect();
        let refs: Vec<&[f64]> = genomes.iter().map(|g| g.as_slice()).collect();

        let serial = SerialEvaluator.evaluate(&objective, &refs);
        for threads in [2, 8] {
            let parallel = RayonEvaluator::new(threads).unwrap().evaluate(&objective, &refs);
            assert_eq!(serial.len(), parallel.len());
            for (a, b) in serial.iter().zip(&parallel) {
                assert_eq!(a.to_bits(), b.to_bits());
            }
        }
    }
}
