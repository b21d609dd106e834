use std::process::{Command, Output};

fn abeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abeta"))
        .args(args)
        .env("ABETA_THREADS", "2")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn radius_json() {
    let o = abeta(&["radius", "--beta", "0", "--m", "1", "--p", "1", "--tol", "1e-10"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let root = v["root"].as_f64().unwrap();
    assert!((root - 0.2852).abs() < 1e-4);
    let bracket = v["bracket"].as_array().unwrap();
    assert!(bracket[0].as_f64().unwrap() <= root && root <= bracket[1].as_f64().unwrap());
    assert!(v["residual"].as_f64().unwrap().abs() < 1e-9);
}

#[test]
fn json_numbers_reparse_exactly() {
    let o = abeta(&["rogosinski", "--beta", "0.3", "--n", "3", "--m", "2", "--poly", "0.5,0.25"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let root = v["root"].as_f64().unwrap();
    assert!(text.contains(&format!("{root:.16e}")));
    assert_eq!(v["N"], 3);
    assert_eq!(v["variant"], "rogosinski");
}

#[test]
fn log_bounds_row() {
    let o = abeta(&["log-bounds", "--beta", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = r.headers().unwrap().clone();
    let row = r.records().next().unwrap().unwrap();
    let get = |name: &str| -> f64 {
        let i = headers.iter().position(|h| h == name).unwrap();
        row[i].parse().unwrap()
    };
    approx::assert_abs_diff_eq!(get("gamma_lower"), -1.0 / 5f64.sqrt(), epsilon = 1e-15);
    approx::assert_abs_diff_eq!(get("gamma_upper"), 1.0 / 3.0, epsilon = 1e-15);
}

#[test]
fn fs_bound_grid() {
    let o = abeta(&["fs-bound", "--beta-grid", "0:1.01:0.5", "--mu-grid", "-1,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    approx::assert_abs_diff_eq!(rows[0]["bound"].as_f64().unwrap(), 5.0 / 3.0, epsilon = 1e-15);
    approx::assert_abs_diff_eq!(rows[1]["bound"].as_f64().unwrap(), 2.0 / 3.0, epsilon = 1e-15);
}

#[test]
fn diagnostics_name_the_flag() {
    let cases: [(&[&str], &str); 6] = [
        (&["radius", "--beta", "1"], "--beta"),
        (&["radius", "--beta", "1.5"], "--beta"),
        (&["radius", "--beta", "0", "--frobnicate"], "--frobnicate"),
        (&["sweep", "--beta-grid", "0:1:x"], "--beta-grid"),
        (&["sweep", "--beta-grid", "0.5,1"], "--beta"),
        (&["radius", "--beta", "0", "--poly", "1,-2"], "--poly"),
    ];
    for (args, flag) in cases {
        let o = abeta(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        let err = stderr(&o);
        assert_eq!(err.trim_end().lines().count(), 1, "{err}");
        assert!(err.contains(flag), "{args:?}: {err}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn bad_thread_count_is_rejected() {
    let o = Command::new(env!("CARGO_BIN_EXE_abeta"))
        .args(["log-bounds", "--beta", "0"])
        .env("ABETA_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("ABETA_THREADS"));
}

#[test]
fn help_exits_zero() {
    assert_eq!(abeta(&["--help"]).status.code(), Some(0));
    assert_eq!(abeta(&["sweep", "--help"]).status.code(), Some(0));
}

#[test]
fn verification_failure_exits_two() {
    // with zero slack, rounding-level excesses count as failures
    let o = abeta(&["verify", "--beta", "0.5", "--samples", "100", "--atoms", "4", "--seed", "42", "--slack", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], false);
    let ok = abeta(&["verify", "--beta", "0.5", "--samples", "100", "--atoms", "4", "--seed", "42"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn verify_accepts_beta_one() {
    let o = abeta(&["verify", "--beta", "1", "--samples", "20", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.starts_with("beta,inequality,checks,violations,max_violation,witness"));
    assert!(!text.contains(",bohr,"));
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let o = abeta(&["sweep", "--beta-grid", "0:0.3:0.1", "--variant", "bohr", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "beta,m,p,N,variant,root,residual,iterations");
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[2].split(',').next().unwrap().parse::<f64>().unwrap(), 0.1);
}
