use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gfs_cli::config::{preset, ClusterSpace, ExperimentConfig, PRESET_NAMES};
use gfs_cli::data_io::{load_airfoil, write_canonical_csv};
use gfs_cli::error::{usage, CliResult};
use gfs_cli::experiment::{cluster_report, compare, run_experiment, ClusterArgs};
use gfs_cli::model_io::{describe, predict_file, SavedModel};

#[derive(Parser)]
#[command(
    name = "gfs",
    about = "Genetic fuzzy regression experiments on the UCI airfoil self-noise dataset",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Fuzzy c-means elbow analysis over a range of cluster counts
    Cluster {
        /// Path to the airfoil .dat file
        #[arg(long)]
        data: String,
        /// Smallest cluster count to try
        #[arg(long, default_value_t = 2)]
        c_min: usize,
        /// Largest cluster count to try
        #[arg(long, default_value_t = 25)]
        c_max: usize,
        /// FCM fuzzifier (m > 1)
        #[arg(long, default_value_t = 2.0)]
        fuzzifier: f64,
        /// Cluster over inputs only instead of inputs plus target
        #[arg(long)]
        inputs_only: bool,
        /// Seed for the FCM initialisations
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Apply log10 to frequency before scaling
        #[arg(long)]
        log_frequency: bool,
        /// Output directory
        #[arg(long, default_value = "runs/cluster")]
        out: PathBuf,
        /// Also export the loaded dataset as canonical CSV to this path
        #[arg(long)]
        export_csv: Option<PathBuf>,
    },
    /// Train one variant, from a preset or a TOML config file
    Train {
        /// Experiment config file (TOML)
        #[arg(long, conflicts_with = "preset")]
        config: Option<PathBuf>,
        /// Preset name (see `compare --list`)
        #[arg(long)]
        preset: Option<String>,
        /// Dataset path (required with --preset)
        #[arg(long)]
        data: Option<String>,
        /// Override the output directory
        #[arg(long)]
        out: Option<String>,
        /// Override the GA seed
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads for fitness evaluation (default: all cores)
        #[arg(long)]
        threads: Option<usize>,
        /// Apply log10 to frequency before scaling
        #[arg(long)]
        log_frequency: bool,
    },
    /// Run a suite of presets over the same split and tabulate the results
    Compare {
        /// Comma-separated preset names (default: the full suite)
        #[arg(long)]
        presets: Option<String>,
        /// List the available presets and exit
        #[arg(long)]
        list: bool,
        /// Dataset path
        #[arg(long)]
        data: Option<String>,
        /// Output directory (per-preset runs go underneath)
        #[arg(long, default_value = "runs/compare")]
        out: String,
        /// Override the GA seed for every preset
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads for fitness evaluation
        #[arg(long)]
        threads: Option<usize>,
        /// Apply log10 to frequency before scaling
        #[arg(long)]
        log_frequency: bool,
    },
    /// Predict with a saved model over a CSV of inputs
    Predict {
        /// Saved model (model.json from a run)
        #[arg(long)]
        model: PathBuf,
        /// Input CSV in the canonical format (noise column optional)
        #[arg(long)]
        input: PathBuf,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the structure of a saved model
    Describe {
        /// Saved model (model.json from a run)
        #[arg(long)]
        model: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version arrive here as "errors"; they are successes
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(cli: Cli) -> CliResult<()> {
    match cli.command {
        Commands::Cluster {
            data,
            c_min,
            c_max,
            fuzzifier,
            inputs_only,
            seed,
            log_frequency,
            out,
            export_csv,
        } => {
            if let Some(csv_path) = export_csv {
                let dataset = load_airfoil(&data)?;
                write_canonical_csv(&dataset, &csv_path)?;
                println!("exported {} rows to {}", dataset.len(), csv_path.display());
            }
            let args = ClusterArgs {
                data_path: data,
                c_min,
                c_max,
                fuzzifier,
                cluster_space: if inputs_only {
                    ClusterSpace::Inputs
                } else {
                    ClusterSpace::InputsAndTarget
                },
                seed,
                log_frequency,
            };
            let (curve, knee) = cluster_report(&args, &out)?;
            println!("c,J");
            for p in &curve.points {
                println!("{},{}", p.clusters, p.objective);
            }
            println!("knee suggestion: c = {knee}");
            println!("default used by the clustered presets: c = 15");
            println!("wrote {}", out.join("elbow.csv").display());
            Ok(())
        }
        Commands::Train { config, preset: preset_name, data, out, seed, threads, log_frequency } => {
            let from_file = config.is_some();
            let mut experiment = match (config, preset_name) {
                (Some(path), None) => ExperimentConfig::load(path)?,
                (None, Some(name)) => {
                    let data = data.ok_or_else(|| usage("--preset requires --data <path>"))?;
                    let out_root = out.clone().unwrap_or_else(|| "runs".to_string());
                    preset(&name, &data, &out_root).ok_or_else(|| {
                        usage(format!(
                            "unknown preset '{name}'; available: {}",
                            PRESET_NAMES.join(", ")
                        ))
                    })?
                }
                (None, None) => return Err(usage("train needs either --config <path> or --preset <name>")),
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            };
            if let Some(seed) = seed {
                experiment.ga.seed = seed;
            }
            if from_file {
                if let Some(out) = out {
                    experiment.output.dir = out;
                }
            }
            if log_frequency {
                experiment.dataset.log_frequency = true;
            }
            let report = run_experiment(&experiment, threads)?;
            println!(
                "{}: {} parameters, train RMSE {:.3} dB, test RMSE {:.3} dB (MAE {:.3}), uncovered {}/{}, GA {:.2}s",
                report.variant,
                report.parameter_count,
                report.rmse_train_db,
                report.rmse_test_db,
                report.mae_test_db,
                report.uncovered_train,
                report.uncovered_test,
                report.wall_clock_seconds
            );
            println!("artifacts in {}", experiment.output.dir);
            Ok(())
        }
        Commands::Compare { presets, list, data, out, seed, threads, log_frequency } => {
            if list {
                for name in PRESET_NAMES {
                    println!("{name}");
                }
                return Ok(());
            }
            let data = data.ok_or_else(|| usage("compare requires --data <path>"))?;
            let names: Vec<String> = match presets {
                Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
                None => PRESET_NAMES.iter().map(|s| s.to_string()).collect(),
            };
            let mut configs = Vec::with_capacity(names.len());
            for name in &names {
                let mut config = preset(name, &data, &out).ok_or_else(|| {
                    usage(format!("unknown preset '{name}'; available: {}", PRESET_NAMES.join(", ")))
                })?;
                if let Some(seed) = seed {
                    config.ga.seed = seed;
                }
                if log_frequency {
                    config.dataset.log_frequency = true;
                }
                configs.push(config);
            }
            let (comparison, _) = compare(&configs, threads, std::path::Path::new(&out))?;
            print!("{}", comparison.to_table());
            println!("wrote {out}/comparison.csv");
            Ok(())
        }
        Commands::Predict { model, input, out } => {
            let rows = predict_file(&model, &input, &out)?;
            println!("wrote {rows} predictions to {}", out.display());
            Ok(())
        }
        Commands::Describe { model } => {
            let model = SavedModel::load(&model)?;
            print!("{}", describe(&model));
            Ok(())
        }
    }
}
