use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_postselect-cosmo"))
        .args(args)
        .arg("--out")
        .arg(dir)
        .output()
        .expect("binary runs")
}

fn column(csv: &str, name: &str) -> Vec<f64> {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let i = header
        .iter()
        .position(|h| *h == name)
        .expect("column exists");
    lines
        .map(|l| l.split(',').nth(i).unwrap().parse().unwrap())
        .collect()
}

#[test]
fn massless_spectrum_has_no_creation() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        dir.path(),
        &["spectrum", "--set", "model.m=0", "--set", "k.count=20"],
    );
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("spectrum.csv")).unwrap();
    let beta = column(&csv, "beta_sq");
    assert_eq!(beta.len(), 20);
    assert!(beta.iter().all(|&b| b == 0.0));
}

#[test]
fn miracle_reproduces_closed_forms() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["miracle"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("miracle.csv")).unwrap();
    for (name, want) in [
        ("w_N_re", -1.0),
        ("w_N_im", 0.0),
        ("T00_re", -2.0),
        ("T11_re", -2.0),
    ] {
        let got = column(&csv, name)[0];
        assert!((got - want).abs() <= 1e-12, "{name} = {got}");
    }
}

#[test]
fn orthogonal_post_selection_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        dir.path(),
        &[
            "miracle",
            "--set",
            "miracle.alpha=1",
            "--set",
            "miracle.beta=0",
            "--set",
            "miracle.gamma=0",
            "--set",
            "miracle.delta=1",
        ],
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_passes_on_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["verify", "--set", "k.count=12"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = std::fs::read_to_string(dir.path().join("verify.csv")).unwrap();
    assert!(column(&csv, "passed").iter().all(|&p| p == 1.0));
}

#[test]
fn zero_integrator_tolerance_is_numerical_failure() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["verify", "--set", "tol.ode=0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.conf");
    let cases: Vec<Vec<&str>> = vec![
        vec!["spectrum", "--set", "model.C=1"],
        vec!["spectrum", "--set", "model.B=1"],
        vec!["spectrum", "--set", "tol.ode=-1"],
        vec!["spectrum", "--config", missing.to_str().unwrap()],
        vec!["nonsense"],
    ];
    for args in cases {
        let out = run(dir.path(), &args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn config_file_is_layered_under_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    std::fs::write(&conf, "k.list = 0.5, 1.5\nmodel.m = 2\n").unwrap();
    let out = run(
        dir.path(),
        &[
            "spectrum",
            "--config",
            conf.to_str().unwrap(),
            "--set",
            "model.m=0",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("spectrum.csv")).unwrap();
    assert_eq!(column(&csv, "k"), [0.5, 1.5]);
    assert!(column(&csv, "beta_sq").iter().all(|&b| b == 0.0));
}

#[test]
fn output_is_deterministic() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let args = ["trajectory", "--set", "k.count=4", "--set", "eta.count=41"];
    assert_eq!(run(a.path(), &args).status.code(), Some(0));
    assert_eq!(run(b.path(), &args).status.code(), Some(0));
    let read = |d: &Path| std::fs::read(d.join("trajectory.csv")).unwrap();
    assert_eq!(read(a.path()), read(b.path()));
}

#[test]
fn svg_flag_writes_plot() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["overlap", "--svg", "--set", "k.count=30"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(dir.path().join("overlap.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<polyline"));
    let csv = std::fs::read_to_string(dir.path().join("overlap.csv")).unwrap();
    assert!(column(&csv, "W_cumulative_im").iter().all(|&w| w >= 0.0));
}
