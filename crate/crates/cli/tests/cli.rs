use std::path::Path;
use std::process::{Command, Output};

fn hh3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hh3")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Header and numeric rows; empty fields become NaN.
fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(|f| if f.is_empty() { f64::NAN } else { f.parse().unwrap() }).collect())
        .collect();
    (header, rows)
}

fn column(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

fn assert_one_line_error(o: &Output, code: i32) {
    assert_eq!(o.status.code(), Some(code), "stderr: {}", stderr(o));
    let err = stderr(o);
    assert_eq!(err.lines().count(), 1, "{err:?}");
    assert!(!err.trim().is_empty());
}

#[test]
fn horizontal_samples_match_closed_form() {
    let o = hh3(&["generate", "--family", "spacelike-horizontal", "--branch", "+", "--range", "0:1:0.1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let (header, rows) = parse_csv(&stdout(&o));
    assert_eq!(header.join(","), "s,x,y,z,T1,T2,T3");
    assert_eq!(rows.len(), 11);
    assert_eq!(&rows[0][..4], &[0.0, 0.0, 0.5, 0.0]);
    for r in &rows {
        let s = r[0];
        assert!(r[6].abs() <= 1e-12);
        assert!((r[1] - 0.5 * (2.0 * s).sinh()).abs() <= 1e-14);
        assert!((r[2] - 0.5 * (2.0 * s).cosh()).abs() <= 1e-14);
        assert!((r[3] + s).abs() <= 1e-14);
    }
}

#[test]
fn degenerate_family_is_rejected() {
    let o = hh3(&["generate", "--family", "timelike", "--nu0", "0"]);
    assert_one_line_error(&o, 2);
    assert!(o.stdout.is_empty());
}

#[test]
fn bad_arguments_exit_2() {
    let cases: &[&[&str]] = &[
        &["generate", "--family", "spacelike", "--alpha0", "0", "--range", "1:0:0.1"],
        &["generate", "--family", "spacelike", "--alpha0", "0", "--range", "0:1:0"],
        &["generate", "--family", "spacelike"],
        &["generate", "--family", "spacelike", "--alpha0", "0", "--nu0", "1"],
        &["generate", "--family", "no-such-family"],
        &["generate", "--family", "b3zero-spacelike", "--profile", "1,2,3"],
        &["frenet", "--input", "/no/such/file.csv"],
        &["frenet"],
        &["verify", "--claim", "no-such-claim"],
        &["verify", "--format", "csv"],
        &["frenet", "--family", "spacelike", "--alpha0", "0", "--tol", "-1"],
        &["unknown-command"],
    ];
    for args in cases {
        let o = hh3(args);
        assert_one_line_error(&o, 2);
    }
}

#[test]
fn horizontal_frenet_table() {
    let o = hh3(&["frenet", "--family", "spacelike-horizontal", "--range", "-1:1:0.1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let (header, rows) = parse_csv(&text);
    assert_eq!(header.join(","), "s,k1,k2,eps1,eps2,eps3,N3,B3,res_direct,res_frenet,degenerate");
    assert_eq!(rows.len(), 21);
    for r in &rows {
        assert!((r[1] - 2.0).abs() <= 1e-12);
        assert!((r[2] + 1.0).abs() <= 1e-12);
        assert_eq!(r[3] * r[4] * r[5], 1.0);
        assert!(r[6].abs() <= 1e-12);
        assert!(r[8] <= 1e-9 && r[9] <= 1e-9);
        assert_eq!(r[10], 0.0);
    }
    // 17 significant digits
    let field = text.lines().nth(1).unwrap().split(',').nth(1).unwrap();
    assert_eq!(field, "2.0000000000000000e0");
}

#[test]
fn printed_horizontal_slope_leaves_a_residual() {
    let o = hh3(&["residual", "--family", "spacelike-horizontal", "--as-printed", "--range", "-1:1:0.1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let (header, rows) = parse_csv(&stdout(&o));
    let res = column(&header, "res_direct");
    for r in &rows {
        assert!(r[res] >= 3.0 - 1e-9);
        if r[0] == 0.0 {
            assert!((r[res] - 3.0).abs() <= 1e-9);
        }
    }
}

#[test]
fn geodesic_input_is_degenerate_everywhere() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("geodesic.csv");
    let mut csv = String::from("s,x,y,z\n");
    for i in 0..=40 {
        let s = -1.0 + 0.05 * i as f64;
        csv.push_str(&format!("{s},0,0,{}\n", 2.0 * s));
    }
    std::fs::write(&path, csv).unwrap();
    let o = hh3(&["frenet", "--input", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let (header, rows) = parse_csv(&stdout(&o));
    assert_eq!(rows.len(), 41);
    let deg = column(&header, "degenerate");
    assert!(rows.iter().all(|r| r[deg] == 1.0 && r[1].is_nan()));

    let o = hh3(&["frenet", "--family", "geodesic", "--axis", "3"]);
    let (_, rows) = parse_csv(&stdout(&o));
    assert!(rows.iter().all(|r| r[deg] == 1.0));
}

#[test]
fn sampled_round_trip_recovers_curvatures() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("helix.csv");
    let p = path.to_str().unwrap();
    let o = hh3(&[
        "generate",
        "--family",
        "spacelike",
        "--alpha0",
        "0.5",
        "--branch",
        "-",
        "--b",
        "0.2",
        "--c1",
        "0.1",
        "--range",
        "-1:1:0.01",
        "--output",
        p,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let o = hh3(&["frenet", "--input", p, "--range", "-0.5:0.5:0.1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let (_, rows) = parse_csv(&stdout(&o));
    let (ch, sh) = (0.5f64.cosh(), 0.5f64.sinh());
    let a = sh - (5.0 * sh * sh + 4.0).sqrt();
    let (k1, k2) = ((ch * (a - 2.0 * sh)).abs(), sh * (a - 2.0 * sh) - 1.0);
    for r in &rows {
        assert!((r[1] - k1).abs() <= 1e-6, "{} vs {k1}", r[1]);
        assert!((r[2] - k2).abs() <= 1e-6, "{} vs {k2}", r[2]);
        assert!(r[8] <= 1e-5);
    }
}

#[test]
fn b3zero_positions_reproduce_k2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b3zero.csv");
    let p = path.to_str().unwrap();
    let o = hh3(&[
        "generate",
        "--family",
        "b3zero-timelike",
        "--profile",
        "0.3,0.8,0.2,1.5,0.1",
        "--range",
        "-1:1:0.01",
        "--output",
        p,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = hh3(&["residual", "--input", p, "--range", "-0.5:0.5:0.1"]);
    let (_, rows) = parse_csv(&stdout(&o));
    for r in &rows {
        assert!((r[2] + 1.0).abs() <= 1e-5, "k2 = {}", r[2]);
        assert_eq!((r[3], r[5]), (-r[4], -1.0));
        assert!(r[7].abs() <= 1e-5);
        assert!(r[8] > 0.1);
    }
}

#[test]
fn tables_are_reproducible() {
    let args = ["frenet", "--family", "timelike", "--nu0", "-1", "--branch", "-", "--b", "0.3", "--range", "-2:2:0.05"];
    assert_eq!(hh3(&args).stdout, hh3(&args).stdout);
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    for path in [&first, &second] {
        let o = hh3(&["verify", "--output", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    let text = std::fs::read_to_string(&first).unwrap();
    assert_eq!(text, std::fs::read_to_string(&second).unwrap());
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["seed"], 1);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 13);
    for c in checks {
        for key in ["claim_id", "anchor", "status", "max_residual", "details"] {
            assert!(c.get(key).is_some(), "{key}");
        }
    }
    let status = |id: &str| checks.iter().find(|c| c["claim_id"] == id).unwrap()["status"].clone();
    assert_eq!(status("horizontal-as-printed"), "Refuted-as-printed");
    assert_eq!(status("horizontal-spacelike"), "Confirmed");
    // no temporary files left behind
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn verify_single_claim() {
    let o = hh3(&["verify", "--claim", "cross-properties", "--seed", "7"]);
    assert!(o.status.success());
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["seed"], 7);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["claim_id"], "cross-properties");
    assert_eq!(checks[0]["status"], "Confirmed");
}

#[test]
fn tampered_connection_exits_1() {
    let o = hh3(&["verify", "--tamper-connection"]);
    assert_one_line_error(&o, 1);
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["checks"].as_array().unwrap().len(), 13);
}

#[test]
fn unwritable_output_exits_3() {
    let target = Path::new("/nonexistent-dir/report.json");
    let o = hh3(&["verify", "--claim", "curvature-table", "--output", target.to_str().unwrap()]);
    assert_one_line_error(&o, 3);
    let o = hh3(&["generate", "--family", "spacelike-horizontal", "--output", "/nonexistent-dir/x.csv"]);
    assert_one_line_error(&o, 3);
}

#[test]
fn help_exits_0() {
    let o = hh3(&["--help"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("generate"));
}
