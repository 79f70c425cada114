use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn gwp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwp"))
        .args(args)
        .env("RUST_LOG", "off")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn lists_presets() {
    let o = gwp(&["--list-presets"]);
    assert_eq!(code(&o), 0);
    let s = String::from_utf8(o.stdout).unwrap();
    assert_eq!(s.lines().count(), 17);
    assert!(s.lines().any(|l| l == "spectrum"));
}

#[test]
fn spectrum_preset_with_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let o = gwp(&["--preset", "spectrum", "--out", path(dir.path()), "--dump-matrix"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(
        stdout.contains("0.450203, 0.474126, 1.092617, 1.393338, 1.912856"),
        "{stdout}"
    );
    let matrix = fs::read_to_string(dir.path().join("matrix.csv")).unwrap();
    assert_eq!(matrix.lines().count(), 1 + 31 * 31);
    let spectrum = fs::read_to_string(dir.path().join("spectrum.csv")).unwrap();
    assert_eq!(spectrum.lines().count(), 1 + 31);
}

#[test]
fn overrides_apply() {
    let dir = tempfile::tempdir().unwrap();
    let o = gwp(&[
        "--preset",
        "fig5",
        "--out",
        path(dir.path()),
        "--methods",
        "tdva,classical",
        "--nmax",
        "20",
        "--t-end",
        "10",
    ]);
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("series_tdva.csv").exists());
    assert!(dir.path().join("series_classical.csv").exists());
    assert!(!dir.path().join("series_sm.csv").exists());
    let cfg = fs::read_to_string(dir.path().join("config.toml")).unwrap();
    assert!(cfg.contains("n_max = 20"));
}

#[test]
fn config_round_trip_through_print_config() {
    let dir = tempfile::tempdir().unwrap();
    let o = gwp(&["--preset", "fig10", "--print-config"]);
    assert_eq!(code(&o), 0);
    let file = dir.path().join("fig10.toml");
    fs::write(&file, o.stdout).unwrap();
    let out = dir.path().join("run");
    let o = gwp(&["--config", path(&file), "--out", path(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(out.join("snapshot_tdva_t25.csv").exists());
}

#[test]
fn config_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&gwp(&["--preset", "nope"])), 1);
    assert_eq!(
        code(&gwp(&["--preset", "fig1", "--methods", "sm,warp", "--print-config"])),
        1
    );
    assert_eq!(code(&gwp(&["--preset", "fig1", "--nmax", "10"])), 1);
    assert_eq!(code(&gwp(&["--config", "/nonexistent.toml"])), 1);
    assert_eq!(code(&gwp(&["--frobnicate"])), 1);
    assert_eq!(code(&gwp(&[])), 1);
    let bad = dir.path().join("bad.toml");
    fs::write(&bad, "name = \"x\"\n[potential]\na4 = 1.0\n").unwrap();
    assert_eq!(code(&gwp(&["--config", path(&bad)])), 1);
}

#[test]
fn numerical_failure_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let o = gwp(&["--preset", "fig5", "--print-config"]);
    let text = String::from_utf8(o.stdout)
        .unwrap()
        .replace("methods = [\"sm\", \"tdva\"]", "methods = [\"sm\", \"grid\"]")
        .replace("t_end = 1000.0", "t_end = 5.0")
        .replace("x_lo = -12.0", "x_lo = -4.0")
        .replace("x_hi = 12.0", "x_hi = 0.5");
    let file = dir.path().join("narrow.toml");
    fs::write(&file, text).unwrap();
    let out = dir.path().join("run");
    let o = gwp(&["--config", path(&file), "--out", path(&out)]);
    assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stdout));
    assert!(out.join("series_sm.csv").exists());
    let summary = fs::read_to_string(out.join("summary.json")).unwrap();
    assert!(summary.contains("\"complete\": false"));
}

#[test]
fn compare_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let o = gwp(&["--preset", "fig5", "--out", path(dir.path()), "--t-end", "100"]);
    assert_eq!(code(&o), 0);
    let sm = dir.path().join("series_sm.csv");
    let tdva = dir.path().join("series_tdva.csv");

    let o = gwp(&[
        "--compare",
        path(&sm),
        path(&sm),
        "--fields",
        "x,dx2,corr2",
        "--tol",
        "0",
    ]);
    assert_eq!(code(&o), 0);
    let o = gwp(&["--compare", path(&sm), path(&tdva), "--fields", "x", "--tol", "0.5"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8(o.stdout).unwrap().contains("FAIL"));

    let other = dir.path().join("other");
    gwp(&["--preset", "fig4", "--out", path(&other), "--methods", "sm"]);
    let o = gwp(&["--compare", path(&sm), path(&other.join("series_sm.csv")), "--tol", "1"]);
    assert_eq!(code(&o), 1, "mismatched grids are rejected");
}
