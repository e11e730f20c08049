//! End-to-end tests of the `tritangle` binary: exit codes, report
//! contents, sweep artifacts and JSON round trips.

use std::f64::consts::PI;
use std::path::Path;
use std::process::{Command, Output};

use tritangle::cli::CSV_HEADER;
use tritangle::entanglement::EntanglementProfile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tritangle"))
}

fn write_spec(dir: &Path, name: &str, body: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn last_line(output: &Output) -> String {
    let text = String::from_utf8_lossy(&output.stdout);
    text.lines().last().unwrap_or_default().to_string()
}

#[test]
fn classify_ghz_emits_valid_profile() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "ghz.json", r#"{"family":"ghz"}"#);
    let output = bin().arg("classify").arg(&spec).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("class: GhzClass"));
    assert!(text.contains("ranks: a=2 b=2 c=2"));

    // The trailing JSON line re-parses and re-validates.
    let profile: EntanglementProfile = serde_json::from_str(&last_line(&output)).unwrap();
    profile.validate().unwrap();
    assert!((profile.tau - 1.0).abs() < 1e-9);
}

#[test]
fn classify_w_reports_vanishing_tangle() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "w.json", r#"{"family":"w"}"#);
    let output = bin().arg("classify").arg(&spec).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let profile: EntanglementProfile = serde_json::from_str(&last_line(&output)).unwrap();
    assert_eq!(profile.slocc_class.to_string(), "WClass");
    assert!(profile.tau < 1e-8);
}

#[test]
fn classify_rejects_malformed_json_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "bad.json", "{not json");
    let output = bin().arg("classify").arg(&spec).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("state spec"));
}

#[test]
fn classify_rejects_unknown_family_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "nope.json", r#"{"family":"nope"}"#);
    let output = bin().arg("classify").arg(&spec).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("unknown family"));
}

#[test]
fn classify_missing_file_exits_2() {
    let output = bin().args(["classify", "/no/such/spec.json"]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn overflowing_amplitudes_exit_3() {
    // Finite inputs whose squared norm overflows to infinity are a
    // numeric-consistency failure, not a schema problem.
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "overflow.json",
        r#"{"amplitudes":[[1e308,0],[1e308,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]}"#,
    );
    let output = bin().arg("classify").arg(&spec).output().unwrap();
    assert_eq!(output.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&output.stderr).contains("numeric consistency"));
}

#[test]
fn renormalization_warns_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "loose.json",
        r#"{"amplitudes":[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[1,0]]}"#,
    );
    let output = bin().arg("classify").arg(&spec).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&output.stderr).contains("renormalized"));
}

#[test]
fn classify_symmetric_emits_both_tangle_values() {
    // The profile must carry the one-vs-rest value 4(p^2+r^2)(q^2+s^2)
    // alongside the residual tangle, which differ for symmetric states
    // with sizable pairwise entanglement.
    let (p, q, r, s) = (0.7, 0.5, 0.4, (1.0f64 - 0.9).sqrt());
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "sym.json",
        &format!(r#"{{"family":"symmetric","params":{{"p":{p},"q":{q},"r":{r},"s":{s}}}}}"#),
    );
    let output = bin().arg("classify").arg(&spec).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let profile: EntanglementProfile = serde_json::from_str(&last_line(&output)).unwrap();
    let printed = 4.0 * (p * p + r * r) * (q * q + s * s);
    assert!((profile.c2_a_bc - printed).abs() < 1e-9);
    assert!((profile.tau - profile.tau_ckw).abs() < 1e-8);
    assert!(profile.tau < profile.c2_a_bc, "pairwise terms should separate the two values");
}

#[test]
fn tangle_reports_both_routes() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "chi.json",
        r#"{"family":"chi_plus","params":{"epsilon":0.5235987755982988,"k":"x"}}"#,
    );
    let output = bin().arg("tangle").arg(&spec).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&last_line(&output)).unwrap();
    assert!((json["tau"].as_f64().unwrap() - 0.75).abs() < 1e-9);
    assert!((json["tau_ckw_a"].as_f64().unwrap() - 0.75).abs() < 1e-8);
    assert!((json["tau_ckw_b"].as_f64().unwrap() - 0.75).abs() < 1e-8);
}

#[test]
fn cdc_chi_with_matched_rule_is_perfect() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "chi.json",
        r#"{"family":"chi_plus","params":{"epsilon":0.5236,"k":"x"}}"#,
    );
    let output = bin()
        .arg("cdc")
        .arg(&spec)
        .args(["--controller", "a", "--theta", "0", "--rule", "1=x"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&last_line(&output)).unwrap();
    assert_eq!(json["perfect_cdc"], serde_json::Value::Bool(true));
    assert!((json["average_capacity_bits"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    // With the matched correction, both branches sit on phi+.
    for branch in json["branches"].as_array().unwrap() {
        assert_eq!(branch["best_bell"], "phi+");
    }
}

#[test]
fn cdc_w_average_capacity() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "w.json", r#"{"family":"w"}"#);
    let output = bin().arg("cdc").arg(&spec).args(["--theta", "0"]).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&last_line(&output)).unwrap();
    assert!((json["average_capacity_bits"].as_f64().unwrap() - 5.0 / 3.0).abs() < 1e-6);
    assert!((json["min_capacity_bits"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(json["perfect_cdc"], serde_json::Value::Bool(false));
}

#[test]
fn cdc_optimize_basis_on_ms() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "ms.json",
        r#"{"family":"ms","params":{"alpha":1.0471975511965976}}"#,
    );
    let output = bin().arg("cdc").arg(&spec).arg("--optimize-basis").output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&last_line(&output)).unwrap();
    let score = json["basis_optimization"]["min_branch_concurrence"].as_f64().unwrap();
    let expect = (PI / 3.0).sin();
    assert!((score - expect).abs() < 1e-3, "score {score} vs sin(pi/3) {expect}");
}

#[test]
fn cdc_rejects_bad_flags_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "ghz.json", r#"{"family":"ghz"}"#);
    for args in [
        vec!["--controller", "q"],
        vec!["--theta", "nonsense"],
        vec!["--theta", "pi"], // outside [0, pi/2]
        vec!["--rule", "3=x"],
        vec!["--optimize-basis", "--grid", "2"],
    ] {
        let output = bin().arg("cdc").arg(&spec).args(&args).output().unwrap();
        assert_eq!(output.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn unknown_subcommand_exits_2() {
    let output = bin().arg("frobnicate").output().unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn sweep_ms_csv_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ms.csv");
    let status = bin()
        .args(["sweep", "--family", "ms", "--param", "alpha", "--from", "0", "--to", "pi"])
        .args(["--steps", "33", "--output"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), CSV_HEADER);
    let mut rows = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 12);
        let alpha: f64 = fields[0].parse().unwrap();
        let tau: f64 = fields[1].parse().unwrap();
        assert!((tau - alpha.sin().powi(2)).abs() < 1e-9, "alpha {alpha}: tau {tau}");
        rows += 1;
    }
    assert_eq!(rows, 33);
}

#[test]
fn sweep_chi_csv_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("chi.csv");
    let status = bin()
        .args(["sweep", "--family", "chi_plus", "--param", "epsilon"])
        .args(["--from", "0", "--to", "pi/2", "--steps", "26"])
        .args(["--fix", "k=y", "--output"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    for line in text.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let eps: f64 = fields[0].parse().unwrap();
        let tau: f64 = fields[1].parse().unwrap();
        assert!((tau - (2.0 * eps).sin().powi(2)).abs() < 1e-9);
        // Every interior point is perfect CDC under theta = 0; the
        // capacity columns reflect the identity-rule run.
        let perfect: bool = fields[11].parse().unwrap();
        assert!(perfect, "eps {eps} not perfect");
    }
}

#[test]
fn sweep_type1_csv_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t1.csv");
    let status = bin()
        .args(["sweep", "--family", "type1", "--param", "l"])
        .args(["--from", "0.1", "--to", "4", "--steps", "40", "--output"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    for line in text.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let l: f64 = fields[0].parse().unwrap();
        let tau: f64 = fields[1].parse().unwrap();
        assert!((tau - 4.0 * l * l / (1.0 + l * l).powi(2)).abs() < 1e-9);
    }
}

#[test]
fn sweep_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rows.json");
    let status = bin()
        .args(["sweep", "--family", "type1", "--param", "l"])
        .args(["--from", "0.5", "--to", "2", "--steps", "5", "--format", "json", "--output"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let rows: Vec<tritangle::cli::ReportRow> = serde_json::from_str(&text).unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.windows(2).all(|w| w[0].param < w[1].param));
}

#[test]
fn sweep_rejects_unwritable_output_with_exit_2() {
    let output = bin()
        .args(["sweep", "--family", "ms", "--param", "alpha", "--from", "0", "--to", "1"])
        .args(["--steps", "3", "--output", "/no/such/dir/out.csv"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn sweep_rejects_bad_specs_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    for args in [
        vec!["--family", "ms", "--param", "beta", "--from", "0", "--to", "1", "--steps", "3"],
        vec!["--family", "ms", "--param", "alpha", "--from", "1", "--to", "0", "--steps", "3"],
        vec!["--family", "ms", "--param", "alpha", "--from", "0", "--to", "1", "--steps", "1"],
        vec!["--family", "chi_plus", "--param", "epsilon", "--from", "0", "--to", "1", "--steps", "3"],
        vec![
            "--family", "ms", "--param", "alpha", "--from", "0", "--to", "1", "--steps", "3",
            "--format", "xml",
        ],
    ] {
        let output = bin().arg("sweep").args(&args).arg("--output").arg(&out).output().unwrap();
        assert_eq!(output.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn states_list_names_every_family() {
    let output = bin().args(["states", "list"]).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8_lossy(&output.stdout);
    for name in [
        "chi_plus", "chi_minus", "xi_plus", "xi_minus", "ghz", "w", "ghz_class", "w_class", "ms",
        "symmetric", "type1", "type2",
    ] {
        assert!(text.contains(name), "missing family {name}");
    }
}

#[test]
fn stdin_specs_work() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = bin()
        .args(["classify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(br#"{"family":"type1","params":{"l":2.0}}"#)
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let profile: EntanglementProfile = serde_json::from_str(&last_line(&output)).unwrap();
    assert!((profile.tau - 0.64).abs() < 1e-9);
}
