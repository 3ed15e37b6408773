//! Experiment pipeline: load -> split -> scale -> (cluster) -> build ->
//! evolve -> evaluate, plus the side-by-side comparison runner and the FCM
//! elbow analysis. Every run writes its artifacts (config echo, report,
//! fitness history, per-sample predictions, split exports, trained model)
//! under the configured output directory as UTF-8 CSV/JSON/TOML.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, Context};
use gfs_core::arch::{project_centers, Regressor};
use gfs_core::dataset::{Scaler, NUM_INPUTS};
use gfs_core::fcm::{elbow_curve, fcm_fit, ElbowCurve, FcmParams};
use gfs_core::ga::{evolve, GenerationStats};
use serde::Serialize;

use crate::config::{ClusterSpace, ExperimentConfig, VariantKind};
use crate::data_io::{load_airfoil, write_canonical_csv};
use crate::error::{data, usage, CliResult};
use crate::model_io::SavedModel;
use crate::parallel::make_evaluator;

pub fn rmse(errors: impl Iterator<Item = f64>) -> f64 {
    let mut squared = 0.0;
    let mut count = 0usize;
    for e in errors {
        squared += e * e;
        count += 1;
    }
    (squared / count as f64).sqrt()
}

pub fn mae(errors: impl Iterator<Item = f64>) -> f64 {
    let mut total = 0.0;
    let mut count = 0usize;
    for e in errors {
        total += e.abs();
        count += 1;
    }
    total / count as f64
}

pub fn population_std(values: &[f64]) -> f64 {
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    (values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / values.len() as f64).sqrt()
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub variant: String,
    pub parameter_count: usize,
    pub rule_count: usize,
    pub rmse_train_db: f64,
    pub rmse_test_db: f64,
    pub mae_test_db: f64,
    pub uncovered_train: usize,
    pub uncovered_test: usize,
    /// Spread of the dB test predictions; near zero means the model collapsed
    /// to a trend line.
    pub test_prediction_stddev_db: f64,
    /// Wall-clock seconds spent inside the GA only.
    pub wall_clock_seconds: f64,
    /// Wall-clock seconds spent fitting FCM centers (clustered variants).
    pub cluster_seconds: f64,
    pub final_fitness: f64,
    pub fitness_history: Vec<GenerationStats>,
    pub config: ExperimentConfig,
}

/// Run one experiment end to end and write its artifacts under
/// `config.output.dir`.
pub fn run_experiment(config: &ExperimentConfig, threads: Option<usize>) -> CliResult<ExperimentReport> {
    config.validate()?;
    let dataset = load_airfoil(&config.dataset.path)?;
    let (train, test) = dataset
        .split(config.dataset.train_fraction, config.dataset.split_seed)
        .map_err(|e| data(anyhow!("split failed: {e}")))?;
    let scaler = Scaler::fit(&train, config.dataset.log_frequency)
        .map_err(|e| data(anyhow!("scaling failed: {e}")))?;

    let train_rows: Vec<Vec<f64>> =
        train.samples().iter().map(|s| scaler.scale_sample(s).to_vec()).collect();
    let train_targets: Vec<f64> =
        train.samples().iter().map(|s| scaler.scale_target(s.noise)).collect();
    let fallback = train_targets.iter().sum::<f64>() / train_targets.len() as f64;

    let (regressor, cluster_seconds) = build_regressor(config, &train_rows, &train_targets, fallback)?;
    let ga_config = config.ga.resolve(regressor.layout().total_len());
    ga_config.validate().map_err(|e| usage(format!("ga section: {e}")))?;

    let evaluator = make_evaluator(threads)?;
    let objective = regressor.training_objective(&train_rows, &train_targets);
    let started = Instant::now();
    let outcome = evolve(regressor.layout(), &ga_config, &objective, evaluator.as_ref())
        .map_err(|e| usage(format!("ga section: {e}")))?;
    let wall_clock_seconds = started.elapsed().as_secs_f64();

    let best = outcome.best.genes;
    let train_predictions = regressor
        .evaluate(&best, &train_rows)
        .map_err(|e| data(anyhow!("final train evaluation failed: {e}")))?;
    let test_rows: Vec<Vec<f64>> =
        test.samples().iter().map(|s| scaler.scale_sample(s).to_vec()).collect();
    let test_predictions = regressor
        .evaluate(&best, &test_rows)
        .map_err(|e| data(anyhow!("final test evaluation failed: {e}")))?;

    let train_actual_db: Vec<f64> = train.samples().iter().map(|s| s.noise).collect();
    let test_actual_db: Vec<f64> = test.samples().iter().map(|s| s.noise).collect();
    let train_predicted_db: Vec<f64> =
        train_predictions.iter().map(|p| scaler.invert_target(p.value)).collect();
    let test_predicted_db: Vec<f64> =
        test_predictions.iter().map(|p| scaler.invert_target(p.value)).collect();

    let report = ExperimentReport {
        variant: config.label(),
        parameter_count: regressor.layout().total_len(),
        rule_count: regressor.architecture().rule_count(),
        rmse_train_db: rmse(
            train_predicted_db.iter().zip(&train_actual_db).map(|(p, a)| p - a),
        ),
        rmse_test_db: rmse(test_predicted_db.iter().zip(&test_actual_db).map(|(p, a)| p - a)),
        mae_test_db: mae(test_predicted_db.iter().zip(&test_actual_db).map(|(p, a)| p - a)),
        uncovered_train: train_predictions.iter().filter(|p| !p.covered).count(),
        uncovered_test: test_predictions.iter().filter(|p| !p.covered).count(),
        test_prediction_stddev_db: population_std(&test_predicted_db),
        wall_clock_seconds,
        cluster_seconds,
        final_fitness: outcome.best.fitness.unwrap_or(f64::NAN),
        fitness_history: outcome.history,
        config: config.clone(),
    };

    let out_dir = PathBuf::from(&config.output.dir);
    fs::create_dir_all(&out_dir)
        .with_context(|| format!("cannot create output directory {}", out_dir.display()))
        .map_err(data)?;
    fs::write(out_dir.join("config.toml"), config.to_toml())
        .context("cannot write config echo")
        .map_err(data)?;
    write_json(&out_dir.join("report.json"), &report)?;
    write_fitness_csv(&out_dir.join("fitness.csv"), &report.fitness_history)?;
    write_predictions_csv(
        &out_dir.join("predictions_train.csv"),
        &train_actual_db,
        &train_predicted_db,
    )?;
    write_predictions_csv(
        &out_dir.join("predictions_test.csv"),
        &test_actual_db,
        &test_predicted_db,
    )?;
    write_canonical_csv(&train, out_dir.join("train_split.csv"))?;
    write_canonical_csv(&test, out_dir.join("test_split.csv"))?;
    fs::write(out_dir.join("plots.gp"), GNUPLOT_SCRIPT)
        .context("cannot write plots.gp")
        .map_err(data)?;
    SavedModel::from_parts(config.variant.kind, &regressor, &scaler, best)
        .save(out_dir.join("model.json"))?;

    Ok(report)
}

/// Renders the run's CSVs with `gnuplot plots.gp`; no graphics dependency in
/// the harness itself.
const GNUPLOT_SCRIPT: &str = "\
set datafile separator ','
set key autotitle columnhead
set terminal pngcairo size 900,600

set output 'fitness.png'
set xlabel 'generation'
set ylabel 'fitness (negative RMSE, scaled)'
plot 'fitness.csv' using 1:2 with lines title 'best', \\
     'fitness.csv' using 1:3 with lines title 'mean', \\
     'fitness.csv' using 1:4 with lines title 'worst'

set output 'predictions_train.png'
set xlabel 'sample index'
set ylabel 'noise (dB)'
plot 'predictions_train.csv' using 1:2 with points pt 7 ps 0.4 title 'actual', \\
     'predictions_train.csv' using 1:3 with points pt 5 ps 0.4 title 'predicted'

set output 'predictions_test.png'
plot 'predictions_test.csv' using 1:2 with points pt 7 ps 0.4 title 'actual', \\
     'predictions_test.csv' using 1:3 with points pt 5 ps 0.4 title 'predicted'
";

fn build_regressor(
    config: &ExperimentConfig,
    train_rows: &[Vec<f64>],
    train_targets: &[f64],
    fallback: f64,
) -> CliResult<(Regressor, f64)> {
    let variant = &config.variant;
    let built = match variant.kind {
        VariantKind::Brute => {
            (Regressor::brute(NUM_INPUTS, variant.mfs_per_input, config.order()), 0.0)
        }
        VariantKind::Gft => {
            (Regressor::cascade(NUM_INPUTS, variant.mfs_per_input, config.order()), 0.0)
        }
        VariantKind::ClusteredGauss | VariantKind::ClusteredFcm => {
            let points: Vec<Vec<f64>> = match variant.cluster_space {
                ClusterSpace::Inputs => train_rows.to_vec(),
                ClusterSpace::InputsAndTarget => train_rows
                    .iter()
                    .zip(train_targets)
                    .map(|(row, &target)| {
                        let mut p = row.clone();
                        p.push(target);
                        p
                    })
                    .collect(),
            };
            let params = FcmParams {
                clusters: variant.clusters,
                fuzzifier: variant.fuzzifier,
                tolerance: variant.fcm_tolerance,
                max_iterations: variant.fcm_max_iterations,
                seed: variant.cluster_seed,
            };
            let started = Instant::now();
            let model = fcm_fit(&points, &params).map_err(|e| data(anyhow!("fcm: {e}")))?;
            let elapsed = started.elapsed().as_secs_f64();
            let centers = project_centers(&model.centers, NUM_INPUTS)
                .map_err(|e| data(anyhow!("fcm centers: {e}")))?;
            let regressor = match variant.kind {
                VariantKind::ClusteredGauss => Regressor::clustered_gauss(centers),
                _ => Regressor::clustered_fcm(centers, variant.fuzzifier),
            };
            (regressor, elapsed)
        }
    };
    let regressor = built.0.map_err(|e| data(anyhow!("cannot build regressor: {e}")))?;
    Ok((regressor.with_fallback(fallback), built.1))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let json = serde_json::to_string_pretty(value)
        .map_err(|e| crate::error::internal(anyhow!("serialization failed: {e}")))?;
    fs::write(path, json)
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(data)
}

fn write_fitness_csv(path: &Path, history: &[GenerationStats]) -> CliResult<()> {
    let mut out = String::from("generation,best,mean,worst\n");
    for (g, s) in history.iter().enumerate() {
        out.push_str(&format!("{},{},{},{}\n", g + 1, s.best, s.mean, s.worst));
    }
    fs::write(path, out)
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(data)
}

fn write_predictions_csv(path: &Path, actual_db: &[f64], predicted_db: &[f64]) -> CliResult<()> {
    let mut out = String::from("index,actual_dB,predicted_dB\n");
    for (i, (a, p)) in actual_db.iter().zip(predicted_db).enumerate() {
        out.push_str(&format!("{i},{a},{p}\n"));
    }
    fs::write(path, out)
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(data)
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonRow {
    pub variant: String,
    pub parameter_count: usize,
    pub rmse_train_db: f64,
    pub rmse_test_db: f64,
    pub mae_test_db: f64,
    pub uncovered_train: usize,
    pub uncovered_test: usize,
    pub wall_clock_seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub rows: Vec<ComparisonRow>,
}

impl Comparison {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "variant,parameter_count,rmse_train_dB,rmse_test_dB,mae_test_dB,uncovered_train,uncovered_test,wall_clock_seconds\n",
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.variant,
                r.parameter_count,
                r.rmse_train_db,
                r.rmse_test_db,
                r.mae_test_db,
                r.uncovered_train,
                r.uncovered_test,
                r.wall_clock_seconds
            ));
        }
        out
    }

    /// Aligned text rendering for terminals.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<20} {:>10} {:>12} {:>12} {:>12} {:>10} {:>10} {:>10}\n",
            "variant", "params", "rmse_tr_dB", "rmse_te_dB", "mae_te_dB", "uncov_tr", "uncov_te", "ga_secs"
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:<20} {:>10} {:>12.3} {:>12.3} {:>12.3} {:>10} {:>10} {:>10.2}\n",
                r.variant,
                r.parameter_count,
                r.rmse_train_db,
                r.rmse_test_db,
                r.mae_test_db,
                r.uncovered_train,
                r.uncovered_test,
                r.wall_clock_seconds
            ));
        }
        out
    }
}

/// Run several configurations sequentially over the same split and render the
/// side-by-side comparison. All configs must agree on the dataset, split
/// seed, fraction, and frequency transform.
pub fn compare(
    configs: &[ExperimentConfig],
    threads: Option<usize>,
    out_dir: &Path,
) -> CliResult<(Comparison, Vec<ExperimentReport>)> {
    if configs.len() < 2 {
        return Err(usage("compare needs at least 2 configurations"));
    }
    let first = &configs[0].dataset;
    for config in &configs[1..] {
        let d = &config.dataset;
        if d.path != first.path
            || d.split_seed != first.split_seed
            || d.train_fraction != first.train_fraction
            || d.log_frequency != first.log_frequency
        {
            return Err(usage(
                "compare requires identical dataset path, split seed, train fraction, and log-frequency flag across configurations",
            ));
        }
    }

    let mut reports = Vec::with_capacity(configs.len());
    for config in configs {
        eprintln!("running {} ...", config.label());
        reports.push(run_experiment(config, threads)?);
    }
    let rows = reports
        .iter()
        .map(|r| ComparisonRow {
            variant: r.variant.clone(),
            parameter_count: r.parameter_count,
            rmse_train_db: r.rmse_train_db,
            rmse_test_db: r.rmse_test_db,
            mae_test_db: r.mae_test_db,
            uncovered_train: r.uncovered_train,
            uncovered_test: r.uncovered_test,
            wall_clock_seconds: r.wall_clock_seconds,
        })
        .collect();
    let comparison = Comparison { rows };

    fs::create_dir_all(out_dir)
        .with_context(|| format!("cannot create {}", out_dir.display()))
        .map_err(data)?;
    fs::write(out_dir.join("comparison.csv"), comparison.to_csv())
        .context("cannot write comparison.csv")
        .map_err(data)?;
    Ok((comparison, reports))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClusterReport {
    pub curve_csv: String,
    pub knee: usize,
    /// The study's choice; kept as the default cluster count in configs.
    pub default_clusters: usize,
}

#[derive(Serialize)]
struct ClusterModelSummary<'a> {
    centers: &'a [Vec<f64>],
    fuzzifier: f64,
    objective: f64,
    iterations_used: usize,
}

pub struct ClusterArgs {
    pub data_path: String,
    pub c_min: usize,
    pub c_max: usize,
    pub fuzzifier: f64,
    pub cluster_space: ClusterSpace,
    pub seed: u64,
    pub log_frequency: bool,
}

/// Elbow analysis over a cluster-count range; writes `elbow.csv`, a summary,
/// and the fitted model at the knee.
pub fn cluster_report(args: &ClusterArgs, out_dir: &Path) -> CliResult<(ElbowCurve, usize)> {
    if args.c_min < 2 || args.c_min > args.c_max {
        return Err(usage(format!(
            "cluster range [{}, {}] is invalid (need 2 <= min <= max)",
            args.c_min, args.c_max
        )));
    }
    let dataset = load_airfoil(&args.data_path)?;
    let scaler = Scaler::fit(&dataset, args.log_frequency)
        .map_err(|e| data(anyhow!("scaling failed: {e}")))?;
    let points: Vec<Vec<f64>> = dataset
        .samples()
        .iter()
        .map(|s| {
            let mut p = scaler.scale_sample(s).to_vec();
            if args.cluster_space == ClusterSpace::InputsAndTarget {
                p.push(scaler.scale_target(s.noise));
            }
            p
        })
        .collect();

    let base = FcmParams {
        clusters: args.c_min,
        fuzzifier: args.fuzzifier,
        tolerance: 1e-6,
        max_iterations: 300,
        seed: args.seed,
    };
    let curve = elbow_curve(&points, args.c_min, args.c_max, &base).map_err(|e| data(anyhow!("fcm: {e}")))?;
    let knee = curve.knee().expect("curve is non-empty");

    fs::create_dir_all(out_dir)
        .with_context(|| format!("cannot create {}", out_dir.display()))
        .map_err(data)?;
    let mut csv = String::from("c,J\n");
    for p in &curve.points {
        csv.push_str(&format!("{},{}\n", p.clusters, p.objective));
    }
    fs::write(out_dir.join("elbow.csv"), csv)
        .context("cannot write elbow.csv")
        .map_err(data)?;

    // refit at the knee and persist the cluster model summary
    let knee_model = fcm_fit(
        &points,
        &FcmParams { clusters: knee, seed: gfs_core::rng::derive_seed(args.seed, knee as u64), ..base },
    )
    .map_err(|e| data(anyhow!("fcm: {e}")))?;
    write_json(
        &out_dir.join("cluster_model.json"),
        &ClusterModelSummary {
            centers: &knee_model.centers,
            fuzzifier: knee_model.fuzzifier,
            objective: knee_model.objective,
            iterations_used: knee_model.iterations_used,
        },
    )?;

    Ok((curve, knee))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::preset;
    use gfs_core::rng::Rng;

    /// A small but structured synthetic file in the UCI layout: noise is an
    /// affine function of two inputs plus mild nonlinearity, so even short GA
    /// runs climb well above the mean predictor.
    fn write_synthetic_dat(path: &Path, rows: usize) {
        let mut rng = Rng::seed_from(400);
        let mut text = String::new();
        for _ in 0..rows {
            let freq = rng.uniform(200.0, 20_000.0);
            let angle = rng.uniform(0.0, 22.2);
            let chord = rng.uniform(0.0254, 0.3048);
            let velocity = rng.uniform(31.7, 71.3);
            let thickness = rng.uniform(0.0004, 0.0584);
            let noise = (110.0
                + 18.0 * (1.0 - freq / 20_000.0)
                + 8.0 * (velocity - 31.7) / (71.3 - 31.7)
                + 3.0 * (angle / 22.2) * (chord / 0.3048))
                .clamp(103.38, 140.987);
            text.push_str(&format!("{freq}\t{angle}\t{chord}\t{velocity}\t{thickness}\t{noise}\n"));
        }
        fs::write(path, text).unwrap();
    }

    fn small_config(dir: &Path, kind_preset: &str) -> ExperimentConfig {
        let data_path = dir.join("synth.dat");
        write_synthetic_dat(&data_path, 160);
        let mut config = preset(kind_preset, data_path.to_str().unwrap(), dir.join("runs").to_str().unwrap())
            .unwrap();
        config.ga.population_size = 12;
        config.ga.generations = 8;
        config.variant.clusters = 4;
        config.output.dir = dir.join("runs").join(config.label()).to_string_lossy().into_owned();
        config
    }

    #[test]
    fn clustered_run_writes_all_artifacts() {
        let dir = tempfile::tempdir().unwrap();
        let config = small_config(dir.path(), "clustered-fcm-15");
        let report = run_experiment(&config, Some(1)).unwrap();
        assert_eq!(report.parameter_count, 4 * 6);
        assert_eq!(report.uncovered_train, 0);
        assert_eq!(report.uncovered_test, 0);
        assert_eq!(report.fitness_history.len(), 8);

        let out = Path::new(&config.output.dir);
        for file in [
            "config.toml",
            "report.json",
            "fitness.csv",
            "predictions_train.csv",
            "predictions_test.csv",
            "train_split.csv",
            "test_split.csv",
            "model.json",
        ] {
            assert!(out.join(file).exists(), "missing {file}");
        }
        let fitness = fs::read_to_string(out.join("fitness.csv")).unwrap();
        assert!(fitness.starts_with("generation,best,mean,worst\n"));
        assert_eq!(fitness.lines().count(), 9);
        let predictions = fs::read_to_string(out.join("predictions_test.csv")).unwrap();
        assert!(predictions.starts_with("index,actual_dB,predicted_dB\n"));
        assert_eq!(predictions.lines().count() - 1, 160 - 128);
    }

    #[test]
    fn db_rmse_equals_scaled_rmse_times_target_span() {
        let dir = tempfile::tempdir().unwrap();
        let data_path = dir.path().join("synth.dat");
        write_synthetic_dat(&data_path, 120);
        let dataset = load_airfoil(&data_path).unwrap();
        let (train, test) = dataset.split(0.8, 42).unwrap();
        let scaler = Scaler::fit(&train, false).unwrap();

        let regressor =
            Regressor::clustered_fcm(vec![vec![0.3; 5], vec![0.7; 5]], 2.0).unwrap().with_fallback(0.5);
        let mut rng = Rng::seed_from(9);
        let genes = regressor.layout().init_genes(&mut rng);

        let rows: Vec<Vec<f64>> = test.samples().iter().map(|s| scaler.scale_sample(s).to_vec()).collect();
        let predictions = regressor.evaluate(&genes, &rows).unwrap();
        let scaled_rmse = rmse(
            predictions
                .iter()
                .zip(test.samples())
                .map(|(p, s)| p.value - scaler.scale_target(s.noise)),
        );
        let db_rmse = rmse(
            predictions
                .iter()
                .zip(test.samples())
                .map(|(p, s)| scaler.invert_target(p.value) - s.noise),
        );
        let expected = scaled_rmse * scaler.target_span();
        assert!(
            (db_rmse - expected).abs() / expected.abs() < 1e-9,
            "dB {db_rmse} vs scaled*span {expected}"
        );
    }

    #[test]
    fn rerun_with_same_config_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = small_config(dir.path(), "gft-3mf-o0");
        run_experiment(&config, Some(1)).unwrap();
        let first = fs::read(Path::new(&config.output.dir).join("fitness.csv")).unwrap();
        let first_preds = fs::read(Path::new(&config.output.dir).join("predictions_test.csv")).unwrap();

        config.output.dir = dir.path().join("runs2").to_string_lossy().into_owned();
        run_experiment(&config, Some(2)).unwrap();
        let second = fs::read(Path::new(&config.output.dir).join("fitness.csv")).unwrap();
        let second_preds = fs::read(Path::new(&config.output.dir).join("predictions_test.csv")).unwrap();
        assert_eq!(first, second);
        assert_eq!(first_preds, second_preds);
    }

    #[test]
    fn compare_rejects_bad_inputs() {
        let dir = tempfile::tempdir().unwrap();
        let config = small_config(dir.path(), "clustered-fcm-15");
        let err = compare(std::slice::from_ref(&config), Some(1), dir.path()).unwrap_err();
        assert_eq!(err.exit_code(), 1);

        let mut other = config.clone();
        other.dataset.split_seed = 7;
        let err = compare(&[config, other], Some(1), dir.path()).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn compare_writes_csv_with_one_row_per_variant() {
        let dir = tempfile::tempdir().unwrap();
        let a = small_config(dir.path(), "clustered-fcm-15");
        let mut b = small_config(dir.path(), "gft-3mf-o0");
        b.output.dir = dir.path().join("runs").join("gft").to_string_lossy().into_owned();
        let out = dir.path().join("cmp");
        let (comparison, reports) = compare(&[a, b], Some(1), &out).unwrap();
        assert_eq!(comparison.rows.len(), 2);
        assert_eq!(reports.len(), 2);
        let csv = fs::read_to_string(out.join("comparison.csv")).unwrap();
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.starts_with("variant,parameter_count,"));
        assert!(comparison.to_table().contains("gft-3mf-o0"));
    }

    #[test]
    fn cluster_report_writes_elbow_and_summary() {
        let dir = tempfile::tempdir().unwrap();
        let data_path = dir.path().join("synth.dat");
        write_synthetic_dat(&data_path, 150);
        let args = ClusterArgs {
            data_path: data_path.to_string_lossy().into_owned(),
            c_min: 2,
            c_max: 5,
            fuzzifier: 2.0,
            cluster_space: ClusterSpace::InputsAndTarget,
            seed: 42,
            log_frequency: false,
        };
        let out = dir.path().join("cluster");
        let (curve, knee) = cluster_report(&args, &out).unwrap();
        assert_eq!(curve.points.len(), 4);
        assert!((2..=5).contains(&knee));
        let csv = fs::read_to_string(out.join("elbow.csv")).unwrap();
        assert!(csv.starts_with("c,J\n"));
        assert_eq!(csv.lines().count(), 5);
        assert!(out.join("cluster_model.json").exists());
    }
}
