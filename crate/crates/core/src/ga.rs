//! Crossover-based genetic algorithm over bounded real-valued genomes.
//!
//! Selection is tournament, crossover is uniform per-gene, mutation is a
//! per-gene Gaussian perturbation clamped to the gene bounds, and the top
//! `elite_count` individuals are copied through unchanged, which makes the
//! best fitness non-decreasing across generations.
//!
//! All randomness is drawn serially from one seeded stream *before* fitness
//! evaluation, and fitness itself must be a pure function of the genes, so
//! results are identical whether a population is evaluated serially or by any
//! number of worker threads.

use alloc::vec::Vec;
use core::fmt;

use crate::genome::{Chromosome, GenomeLayout};
use crate::rng::Rng;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GaError {
    PopulationTooSmall(usize),
    EliteCountInvalid { elite: usize, population: usize },
    RateOutOfRange(&'static str),
    TournamentTooSmall,
    NoGenerations,
}

impl fmt::Display for GaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaError::PopulationTooSmall(n) => write!(f, "population size must be at least 2, got {n}"),
            GaError::EliteCountInvalid { elite, population } => {
                write!(f, "elite count must be in [1, {population}), got {elite}")
            }
            GaError::RateOutOfRange(which) => write!(f, "{which} must lie in [0, 1]"),
            GaError::TournamentTooSmall => write!(f, "tournament size must be at least 1"),
            GaError::NoGenerations => write!(f, "generation count must be at least 1"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GaError {}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GaConfig {
    pub population_size: usize,
    pub generations: usize,
    pub crossover_rate: f64,
    /// Per-gene mutation probability.
    pub mutation_rate: f64,
    /// Mutation step as a fraction of each gene's bound width.
    pub mutation_sigma: f64,
    pub tournament_size: usize,
    pub elite_count: usize,
    pub seed: u64,
}

impl GaConfig {
    /// Conventional defaults: population 50, 100 generations, uniform
    /// crossover at 0.9, one expected mutation per child, sigma 0.1,
    /// tournament of 3, one elite.
    pub fn recommended(genome_len: usize, seed: u64) -> Self {
        GaConfig {
            population_size: 50,
            generations: 100,
            crossover_rate: 0.9,
            mutation_rate: 1.0 / genome_len.max(1) as f64,
            mutation_sigma: 0.1,
            tournament_size: 3,
            elite_count: 1,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), GaError> {
        if self.population_size < 2 {
            return Err(GaError::PopulationTooSmall(self.population_size));
        }
        if self.elite_count < 1 || self.elite_count >= self.population_size {
            return Err(GaError::EliteCountInvalid {
                elite: self.elite_count,
                population: self.population_size,
            });
        }
        if !(0.0..=1.0).contains(&self.crossover_rate) {
            return Err(GaError::RateOutOfRange("crossover rate"));
        }
        if !(0.0..=1.0).contains(&self.mutation_rate) {
            return Err(GaError::RateOutOfRange("mutation rate"));
        }
        if self.mutation_sigma <= 0.0 || !self.mutation_sigma.is_finite() {
            return Err(GaError::RateOutOfRange("mutation sigma"));
        }
        if self.tournament_size < 1 {
            return Err(GaError::TournamentTooSmall);
        }
        if self.generations < 1 {
            return Err(GaError::NoGenerations);
        }
        Ok(())
    }
}

/// Fitness function: higher is better; must be pure and deterministic.
pub type Objective<'a> = dyn Fn(&[f64]) -> f64 + Sync + 'a;

/// Maps a batch of genomes to their fitness values, preserving order.
/// Implementations may evaluate in parallel; because the objective is pure
/// the result must not depend on evaluation order.
pub trait Evaluator {
    fn evaluate(&self, objective: &Objective<'_>, genomes: &[&[f64]]) -> Vec<f64>;
}

/// Straight-line, single-threaded evaluation.
pub struct SerialEvaluator;

impl Evaluator for SerialEvaluator {
    fn evaluate(&self, objective: &Objective<'_>, genomes: &[&[f64]]) -> Vec<f64> {
        genomes.iter().map(|g| objective(g)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GenerationStats {
    pub best: f64,
    pub mean: f64,
    pub worst: f64,
}

#[derive(Clone, Debug)]
pub struct GaOutcome {
    pub best: Chromosome,
    /// One entry per generation, recorded after that generation's evaluation.
    pub history: Vec<GenerationStats>,
}

/// Indices of the population sorted best-first; ties break on lower index.
fn rank_desc(fitness: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..fitness.len()).collect();
    order.sort_by(|&a, &b| fitness[b].partial_cmp(&fitness[a]).unwrap_or(core::cmp::Ordering::Equal).then(a.cmp(&b)));
    order
}

fn tournament(rng: &mut Rng, fitness: &[f64], size: usize) -> usize {
    let mut winner = rng.index(fitness.len());
    for _ in 1..size {
        let challenger = rng.index(fitness.len());
        if fitness[challenger] > fitness[winner]
            || (fitness[challenger] == fitness[winner] && challenger < winner)
        {
            winner = challenger;
        }
    }
    winner
}

/// Run the GA. `history` has exactly `config.generations` entries and, with
/// at least one elite, its `best` column is non-decreasing.
pub fn evolve(
    layout: &GenomeLayout,
    config: &GaConfig,
    objective: &Objective<'_>,
    evaluator: &dyn Evaluator,
) -> Result<GaOutcome, GaError> {
    config.validate()?;
    let bounds = layout.bounds_vec();
    let mut rng = Rng::seed_from(config.seed);

    let mut genomes: Vec<Vec<f64>> = (0..config.population_size)
        .map(|_| layout.init_genes(&mut rng))
        .collect();
    let refs: Vec<&[f64]> = genomes.iter().map(|g| g.as_slice()).collect();
    let mut fitness: Vec<f64> = evaluator.evaluate(objective, &refs);

    let mut history = Vec::with_capacity(config.generations);
    for _ in 0..config.generations {
        let ranking = rank_desc(&fitness);

        let mut next_genomes: Vec<Vec<f64>> = Vec::with_capacity(config.population_size);
        let mut next_fitness: Vec<Option<f64>> = Vec::with_capacity(config.population_size);
        for &elite in ranking.iter().take(config.elite_count) {
            next_genomes.push(genomes[elite].clone());
            next_fitness.push(Some(fitness[elite]));
        }

        while next_genomes.len() < config.population_size {
            let p1 = tournament(&mut rng, &fitness, config.tournament_size);
            let p2 = tournament(&mut rng, &fitness, config.tournament_size);
            let mut child = if rng.next_f64() < config.crossover_rate {
                genomes[p1]
                    .iter()
                    .zip(&genomes[p2])
                    .map(|(&a, &b)| if rng.next_f64() < 0.5 { a } else { b })
                    .collect::<Vec<f64>>()
            } else {
                genomes[p1].clone()
            };
            for (gene, &(lo, hi)) in child.iter_mut().zip(&bounds) {
                if rng.next_f64() < config.mutation_rate {
                    *gene += rng.normal() * config.mutation_sigma * (hi - lo);
                    *gene = gene.clamp(lo, hi);
                }
            }
            layout.repair(&mut child);
            next_genomes.push(child);
            next_fitness.push(None);
        }

        // evaluate only the fresh individuals; elites keep their fitness
        let pending: Vec<usize> =
            (0..next_genomes.len()).filter(|&i| next_fitness[i].is_none()).collect();
        let pending_refs: Vec<&[f64]> = pending.iter().map(|&i| next_genomes[i].as_slice()).collect();
        let evaluated = evaluator.evaluate(objective, &pending_refs);
        for (&i, value) in pending.iter().zip(evaluated) {
            next_fitness[i] = Some(value);
        }

        genomes = next_genomes;
        fitness = next_fitness.into_iter().map(|f| f.expect("population fully evaluated")).collect();

        let best = fitness.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let worst = fitness.iter().cloned().fold(f64::INFINITY, f64::min);
        let mean = fitness.iter().sum::<f64>() / fitness.len() as f64;
        history.push(GenerationStats { best, mean, worst });
    }

    let best_index = rank_desc(&fitness)[0];
    Ok(GaOutcome {
        best: Chromosome { genes: genomes.swap_remove(best_index), fitness: Some(fitness[best_index]) },
        history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genome::SegmentKind;

    fn scalar_layout() -> GenomeLayout {
        let mut layout = GenomeLayout::new();
        layout.push("consequents", 1, SegmentKind::Order0Consequents);
        layout
    }

    fn toy_config(seed: u64) -> GaConfig {
        GaConfig {
            population_size: 50,
            generations: 100,
            crossover_rate: 0.9,
            mutation_rate: 0.5,
            mutation_sigma: 0.1,
            tournament_size: 3,
            elite_count: 1,
            seed,
        }
    }

    #[test]
    fn recovers_quadratic_optimum() {
        let layout = scalar_layout();
        let objective = |genes: &[f64]| -(genes[0] - 0.3) * (genes[0] - 0.3);
        let outcome = evolve(&layout, &toy_config(42), &objective, &SerialEvaluator).unwrap();
        assert!(
            (outcome.best.genes[0] - 0.3).abs() <= 0.02,
            "best gene {} too far from 0.3",
            outcome.best.genes[0]
        );
    }

    #[test]
    fn elitism_makes_best_fitness_monotone() {
        let layout = scalar_layout();
        let objective = |genes: &[f64]| -(genes[0] - 0.7).abs();
        for seed in 0..10 {
            let outcome = evolve(&layout, &toy_config(seed), &objective, &SerialEvaluator).unwrap();
            assert_eq!(outcome.history.len(), 100);
            for pair in outcome.history.windows(2) {
                assert!(pair[1].best >= pair[0].best, "seed {seed}");
            }
        }
    }

    #[test]
    fn same_seed_reproduces_history_and_genes() {
        let layout = scalar_layout();
        let objective = |genes: &[f64]| -(genes[0] - 0.3) * (genes[0] - 0.3);
        let a = evolve(&layout, &toy_config(7), &objective, &SerialEvaluator).unwrap();
        let b = evolve(&layout, &toy_config(7), &objective, &SerialEvaluator).unwrap();
        assert_eq!(a.best.genes, b.best.genes);
        assert_eq!(a.history.len(), b.history.len());
        for (x, y) in a.history.iter().zip(&b.history) {
            assert_eq!(x.best.to_bits(), y.best.to_bits());
            assert_eq!(x.mean.to_bits(), y.mean.to_bits());
            assert_eq!(x.worst.to_bits(), y.worst.to_bits());
        }
    }

    #[test]
    fn genes_stay_in_bounds_for_every_evaluated_genome() {
        // the objective sees every genome the GA ever evaluates, so it can
        // police the bounds invariant across all generations
        let mut layout = GenomeLayout::new();
        layout.push("mf[0]", 9, SegmentKind::MfPartition { mf_count: 3 });
        layout.push("consequents", 9, SegmentKind::Order1Consequents { inputs: 2 });
        let bounds = layout.bounds_vec();
        for seed in [1, 2, 3] {
            let violated = core::sync::atomic::AtomicBool::new(false);
            let objective = |genes: &[f64]| {
                for (g, &(lo, hi)) in genes.iter().zip(&bounds) {
                    if !(lo..=hi).contains(g) {
                        violated.store(true, core::sync::atomic::Ordering::Relaxed);
                    }
                }
                -genes.iter().map(|g| g * g).sum::<f64>()
            };
            let mut config = toy_config(seed);
            config.generations = 30;
            evolve(&layout, &config, &objective, &SerialEvaluator).unwrap();
            assert!(
                !violated.load(core::sync::atomic::Ordering::Relaxed),
                "bounds violated under seed {seed}"
            );
        }
    }

    #[test]
    fn mf_triples_stay_sorted_in_children() {
        let mut layout = GenomeLayout::new();
        layout.push("mf[0]", 15, SegmentKind::MfPartition { mf_count: 5 });
        layout.push("consequents", 5, SegmentKind::Order0Consequents);
        let bad = core::sync::atomic::AtomicBool::new(false);
        let objective = |genes: &[f64]| {
            for t in genes[..15].chunks_exact(3) {
                if !(t[0] <= t[1] && t[1] <= t[2]) {
                    bad.store(true, core::sync::atomic::Ordering::Relaxed);
                }
            }
            genes[15]
        };
        let mut config = toy_config(11);
        config.generations = 30;
        evolve(&layout, &config, &objective, &SerialEvaluator).unwrap();
        assert!(!bad.load(core::sync::atomic::Ordering::Relaxed));
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let layout = scalar_layout();
        let objective = |_: &[f64]| 0.0;
        let mut config = toy_config(1);
        config.population_size = 1;
        assert!(matches!(
            evolve(&layout, &config, &objective, &SerialEvaluator),
            Err(GaError::PopulationTooSmall(1))
        ));
        let mut config = toy_config(1);
        config.elite_count = 50;
        assert!(evolve(&layout, &config, &objective, &SerialEvaluator).is_err());
        let mut config = toy_config(1);
        config.crossover_rate = 1.5;
        assert!(evolve(&layout, &config, &objective, &SerialEvaluator).is_err());
    }
}
