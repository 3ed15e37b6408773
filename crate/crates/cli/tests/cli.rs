//! End-to-end checks of the `gfs` binary: exit codes, artifacts, output
//! formats. Runs on a small synthetic dataset so the whole file stays fast.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn gfs(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gfs"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn write_synthetic_dat(path: &Path, rows: usize) {
    let mut text = String::new();
    let mut state = 12345u64;
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..rows {
        let freq = 200.0 + 19_800.0 * next();
        let angle = 22.2 * next();
        let chord = 0.0254 + 0.2794 * next();
        let velocity = 31.7 + 39.6 * next();
        let thickness = 0.0004 + 0.058 * next();
        let noise = (108.0 + 20.0 * (1.0 - freq / 20_000.0) + 6.0 * next()).clamp(103.38, 140.987);
        text.push_str(&format!("{freq}\t{angle}\t{chord}\t{velocity}\t{thickness}\t{noise}\n"));
    }
    fs::write(path, text).unwrap();
}

#[test]
fn no_arguments_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = gfs(&[], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = gfs(&["--help"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for subcommand in ["cluster", "train", "compare", "predict", "describe"] {
        assert!(text.contains(subcommand), "help missing {subcommand}");
    }
}

#[test]
fn train_without_source_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = gfs(&["train"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--config"));
}

#[test]
fn unknown_preset_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = gfs(&["train", "--preset", "nope", "--data", "x.dat"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("available"));
}

#[test]
fn missing_dataset_is_a_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = gfs(
        &["train", "--preset", "clustered-fcm-15", "--data", "not_here.dat"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_dataset_reports_its_line() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("bad.dat");
    let mut text = String::new();
    for _ in 0..6 {
        text.push_str("800\t0\t0.3048\t71.3\t0.0026\t126.2\n");
    }
    text.push_str("800\t0\t0.3048\t71.3\t126.2\n"); // five columns, line 7
    fs::write(&data, text).unwrap();
    let out = gfs(
        &["train", "--preset", "clustered-fcm-15", "--data", "bad.dat"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 7"));
}

#[test]
fn compare_list_prints_the_preset_suite() {
    let dir = tempfile::tempdir().unwrap();
    let out = gfs(&["compare", "--list"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 7);
    assert!(text.contains("brute-5mf-o1"));
    assert!(text.contains("clustered-fcm-15"));
}

#[test]
fn train_from_config_file_writes_artifacts_and_predicts() {
    let dir = tempfile::tempdir().unwrap();
    write_synthetic_dat(&dir.path().join("synth.dat"), 120);
    let config = r#"
[dataset]
path = "synth.dat"

[variant]
kind = "clustered-fcm"
clusters = 3

[ga]
population_size = 10
generations = 6

[output]
dir = "out/run1"
"#;
    fs::write(dir.path().join("exp.toml"), config).unwrap();

    let out = gfs(&["train", "--config", "exp.toml", "--threads", "1"], dir.path());
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let run_dir = dir.path().join("out/run1");
    for file in ["report.json", "fitness.csv", "model.json", "test_split.csv"] {
        assert!(run_dir.join(file).exists(), "missing {file}");
    }

    // predict over the exported test split: row count matches the split
    let out = gfs(
        &[
            "predict",
            "--model",
            "out/run1/model.json",
            "--input",
            "out/run1/test_split.csv",
            "--out",
            "preds.csv",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let preds = fs::read_to_string(dir.path().join("preds.csv")).unwrap();
    assert_eq!(preds.lines().count() - 1, 120 - 96); // floor(120 * 0.8) = 96 train rows
    assert!(preds.starts_with("index,actual_dB,predicted_dB\n"));

    // describe prints the structure
    let out = gfs(&["describe", "--model", "out/run1/model.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("clustered-fcm-3"));
    assert!(text.contains("parameters: 18"));
}

#[test]
fn cluster_subcommand_writes_elbow_and_export() {
    let dir = tempfile::tempdir().unwrap();
    write_synthetic_dat(&dir.path().join("synth.dat"), 90);
    let out = gfs(
        &[
            "cluster",
            "--data",
            "synth.dat",
            "--c-min",
            "2",
            "--c-max",
            "4",
            "--out",
            "cl",
            "--export-csv",
            "synth.csv",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("knee suggestion"));
    assert!(text.contains("c = 15"));
    let elbow = fs::read_to_string(dir.path().join("cl/elbow.csv")).unwrap();
    assert_eq!(elbow.lines().count(), 4); // header + 3 rows
    let export = fs::read_to_string(dir.path().join("synth.csv")).unwrap();
    assert!(export.starts_with("frequency,angle,chord,velocity,thickness,noise\n"));
    assert_eq!(export.lines().count(), 91);
}

#[test]
fn compare_needs_at_least_two_presets() {
    let dir = tempfile::tempdir().unwrap();
    write_synthetic_dat(&dir.path().join("synth.dat"), 80);
    let out = gfs(
        &["compare", "--presets", "clustered-fcm-15", "--data", "synth.dat", "--out", "cmp"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("at least 2"));
}

#[test]
fn invalid_cluster_range_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    write_synthetic_dat(&dir.path().join("synth.dat"), 80);
    let out = gfs(
        &["cluster", "--data", "synth.dat", "--c-min", "9", "--c-max", "3", "--out", "cl"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
}
