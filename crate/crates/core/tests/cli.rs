use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weaklens"))
}

fn scenario(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("scenarios")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn column(rows: &[Vec<String>], name: &str) -> Vec<f64> {
    let idx = rows[0].iter().position(|h| h == name).unwrap();
    rows[1..].iter().map(|r| r[idx].parse().unwrap()).collect()
}

#[test]
fn weakvalue_lens_report() {
    let out = run(&["weakvalue", scenario("lens_single.json").to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((json["weak_value"]["re"].as_f64().unwrap() - 1.5).abs() < 1e-12);
    assert!(json["weak_value"]["im"].as_f64().unwrap().abs() < 1e-12);
    assert!((json["pole_proximity"].as_f64().unwrap() - 0.316228).abs() < 1e-6);
    assert_eq!(json["spectral_bound"].as_f64(), Some(0.5));
    assert_eq!(json["copies"].as_u64(), Some(1));
    assert!(json.get("weak_ratio").is_none());
}

#[test]
fn weakvalue_with_ratio_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "weakvalue",
        scenario("weak_ratio.json").to_str().unwrap(),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!((json["weak_ratio"]["re"].as_f64().unwrap() - 1.5).abs() < 1e-12);
    // Grid midpoint θ = 0.3 makes a genuine triangle.
    assert_eq!(json["bargmann"]["phase_defined"], true);
    assert!(json["bargmann"]["phase"].as_f64().unwrap() < 0.0);
}

#[test]
fn identity_observable_gives_unit_weak_value() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("id.json");
    std::fs::write(
        &path,
        r#"{"pre_state": {"kind": "lens"}, "post_state": {"kind": "lens", "a_param": 3},
            "observable": {"kind": "dense", "re": [[1, 0], [0, 1]]}}"#,
    )
    .unwrap();
    let out = run(&["weakvalue", path.to_str().unwrap()]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((json["weak_value"]["re"].as_f64().unwrap() - 1.0).abs() < 1e-14);
}

#[test]
fn superosc_lens_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.csv");
    let spectrum = dir.path().join("spectrum.csv");
    let out = run(&[
        "superosc",
        scenario("lens_twenty.json").to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
        "--spectrum",
        spectrum.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((json["omega"].as_f64().unwrap() - 30.0).abs() < 1e-12);
    assert_eq!(json["bandlimit"].as_f64(), Some(10.0));

    let text = std::fs::read_to_string(&trace).unwrap();
    assert!(text
        .starts_with("theta,f_re,f_im,f_abs,f_phase_unwrapped,g_re,g_im,local_freq,phase_valid\n"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 401);
    let abs = column(&rows, "f_abs");
    let theta = column(&rows, "theta");
    let (k0, _) = theta
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
        .unwrap();
    assert!((abs[k0] - 1.0).abs() < 1e-3);

    let text = std::fs::read_to_string(&spectrum).unwrap();
    assert!(text.starts_with("frequency,coeff_re,coeff_im,energy,in_band\n"));
    let rows = csv_rows(&text);
    let energy = column(&rows, "energy");
    let in_band = column(&rows, "in_band");
    let total: f64 = energy.iter().sum();
    let outside: f64 = energy
        .iter()
        .zip(&in_band)
        .filter(|(_, b)| **b == 0.0)
        .map(|(e, _)| e)
        .sum();
    assert!(outside / total <= 1e-10);
}

#[test]
fn superosc_trace_to_stdout() {
    let out = run(&["superosc", scenario("eigenstate.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows.len(), 22);
    let idx = rows[0].iter().position(|h| h == "local_freq").unwrap();
    assert_eq!(rows[1][idx], "");
    assert_eq!(rows[21][idx], "");
    for r in &rows[2..21] {
        assert!((r[idx].parse::<f64>().unwrap() - 0.5).abs() < 1e-9);
    }
    let report: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(report["omega"].as_f64(), Some(0.5));
}

#[test]
fn bloch_grid_and_scaling() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("base.csv");
    let scaled = dir.path().join("scaled.csv");
    for (name, path) in [("bloch_z.json", &base), ("bloch_z_scaled.json", &scaled)] {
        let out = run(&[
            "bloch",
            scenario(name).to_str().unwrap(),
            "--ntheta",
            "5",
            "--nphi",
            "5",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&base).unwrap();
    assert!(
        text.starts_with("theta,phi,g,dg_dtheta,dg_dphi,ind_tt,ind_tp,ind_pp,fs_tt,fs_tp,fs_pp\n")
    );
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 26);
    let g = column(&rows, "g");
    assert!(g.iter().cloned().fold(f64::MIN, f64::max) > 0.999);
    assert!(g.iter().cloned().fold(f64::MAX, f64::min) < -0.999);
    let (tt, tp, pp) = (
        column(&rows, "ind_tt"),
        column(&rows, "ind_tp"),
        column(&rows, "ind_pp"),
    );
    for k in 0..tt.len() {
        assert!((tt[k] * pp[k] - tp[k] * tp[k]).abs() <= 1e-12);
    }

    let srows = csv_rows(&std::fs::read_to_string(&scaled).unwrap());
    for name in ["ind_tt", "ind_tp", "ind_pp"] {
        for (s, b) in column(&srows, name).iter().zip(column(&rows, name)) {
            assert!((s - 4.0 * b).abs() <= 1e-12);
        }
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for i in 0..2 {
        let trace = dir.path().join(format!("trace{i}.csv"));
        let spectrum = dir.path().join(format!("spectrum{i}.csv"));
        let out = run(&[
            "superosc",
            scenario("lens_twenty.json").to_str().unwrap(),
            "--trace",
            trace.to_str().unwrap(),
            "--spectrum",
            spectrum.to_str().unwrap(),
        ]);
        let wv = run(&["weakvalue", scenario("lens_single.json").to_str().unwrap()]);
        outputs.push((
            out.stdout,
            std::fs::read(&trace).unwrap(),
            std::fs::read(&spectrum).unwrap(),
            wv.stdout,
        ));
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn exit_codes() {
    // 1: usage and schema errors.
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        run(&["weakvalue", "/no/such/file.json"]).status.code(),
        Some(1)
    );
    let dense_bloch = run(&[
        "bloch",
        scenario("incommensurate.json").to_str().unwrap(),
        "--ntheta",
        "3",
        "--nphi",
        "3",
    ]);
    assert_eq!(dense_bloch.status.code(), Some(1));
    let bad_res = run(&[
        "bloch",
        scenario("bloch_z.json").to_str().unwrap(),
        "--ntheta",
        "1",
        "--nphi",
        "3",
    ]);
    assert_eq!(bad_res.status.code(), Some(1));
    let no_grid = run(&["superosc", scenario("lens_single.json").to_str().unwrap()]);
    assert_eq!(no_grid.status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    std::fs::write(
        &missing,
        r#"{"pre_state": {"kind": "lens"}, "post_state": {"kind": "lens", "a_param": 3}}"#,
    )
    .unwrap();
    let out = run(&["weakvalue", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("observable"));

    // 2: pole.
    let out = run(&["weakvalue", scenario("orthogonal.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("orthogonal"));

    // 3: spectrum refusal.
    let out = run(&[
        "superosc",
        scenario("incommensurate.json").to_str().unwrap(),
        "--trace",
        dir.path().join("t.csv").to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    // 0: help.
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
