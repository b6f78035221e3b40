use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use uqgl2::representations::GaugeChoice;
use uqgl2::rings::{c, root_of_unity, CONSTRUCTION_TOL};
use uqgl2::rmatrix::build_r_series;
use uqgl2::HighestWeightRep;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uqgl2")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// `(name, residual bits, passed)` per report.
fn report_summary(v: &Value) -> Vec<(String, u64, bool)> {
    v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["name"].as_str().unwrap().to_string(),
                r["residual"].as_f64().unwrap().to_bits(),
                r["passed"].as_bool().unwrap(),
            )
        })
        .collect()
}

#[test]
fn build_writes_the_library_matrix() {
    let out = run(&["build", "--m", "2", "--q", "root", "1/4", "--color", "2,0:1,0", "--color", "3,0:1,0", "--format", "json"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["branch", "colors", "dim", "entries", "gauge", "m", "q"]);
    assert_eq!(v["m"], 2);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["branch"], "root_of_unity");
    assert_eq!(v["colors"].as_array().unwrap().len(), 2);
    assert_eq!(v["gauge"]["mode"], "unit_a");

    let q = root_of_unity(1, 4);
    let rep1 = HighestWeightRep::new(2, q, c(2.0, 0.0), c(1.0, 0.0), &GaugeChoice::UnitA, CONSTRUCTION_TOL).unwrap();
    let rep2 = HighestWeightRep::new(2, q, c(3.0, 0.0), c(1.0, 0.0), &GaugeChoice::UnitA, CONSTRUCTION_TOL).unwrap();
    let expected = build_r_series(&rep1, &rep2, CONSTRUCTION_TOL).unwrap().matrix;
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), expected.nnz());
    let mut previous = (0, 0);
    for (e, (r, col, z)) in entries.iter().zip(expected.entries()) {
        let pos = (e["r"].as_u64().unwrap() as usize, e["c"].as_u64().unwrap() as usize);
        assert!(pos > previous, "entries sorted");
        previous = pos;
        assert_eq!(pos, (r, col));
        assert_eq!(e["re"].as_f64().unwrap().to_bits(), z.re.to_bits());
        assert_eq!(e["im"].as_f64().unwrap().to_bits(), z.im.to_bits());
        assert!(z.norm() > 0.0);
    }
    // the type-b pattern: one off-diagonal entry at (3, 2)
    assert!(entries.iter().any(|e| e["r"] == 3 && e["c"] == 2));
}

#[test]
fn neither_branch_is_invalid_input() {
    let out = run(&["build", "--m", "2", "--q", "2,0", "--color", "1.3,0:1,0"]);
    assert_eq!(code(&out), 2);
    assert_eq!(stderr_json(&out)["error"], "NeitherBranch");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["build", "--q", "root", "1/4"],
        &["build", "--m", "2", "--q", "root", "x/4"],
        &["build", "--m", "2", "--q", "root", "1/4", "--color", "1,0", "--color", "1,0", "--color", "1,0"],
        &["build", "--m", "2", "--q", "1,0"],
        &["build", "--m", "3", "--q", "2,0", "--mode", "exact"],
        &["build", "--m", "3", "--q", "root", "1/6", "--mode", "exact", "--format", "csv"],
        &["build", "--m", "5", "--q", "root", "1/10", "--mode", "exact"],
        &["build", "--m", "2", "--q", "root", "1/4", "--a", "1,0"],
        &["build", "--m", "2", "--q", "root", "1/6", "--branch", "root_of_unity"],
    ] {
        let out = run(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(stderr_json(&out)["error"].is_string(), "{args:?}");
    }
    assert_eq!(stderr_json(&run(&["build", "--m", "2", "--q", "1,0"]))["error"], "QSquaredOne");
}

#[test]
fn exact_build_has_polynomial_entries() {
    let out = run(&["build", "--m", "3", "--q", "root", "1/6", "--mode", "exact"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["vars"], serde_json::json!(["sigma1", "g1"]));
    assert_eq!(v["dim"], 9);
    let entries = v["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    for e in entries {
        assert!(e.get("re").is_none());
        for t in e["poly"].as_array().unwrap() {
            assert_eq!(t["exp"].as_array().unwrap().len(), 2);
        }
    }
}

fn round_trip(build_args: &[&str]) {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("r.json");
    let mut args = vec!["build"];
    args.extend_from_slice(build_args);
    args.extend_from_slice(&["--output", path_str(&file)]);
    let out = run(&args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));

    let from_file = run(&["verify", "--input", path_str(&file)]);
    assert_eq!(code(&from_file), 0, "{}", String::from_utf8_lossy(&from_file.stdout));
    let mut args = vec!["verify"];
    args.extend_from_slice(build_args);
    let in_memory = run(&args);
    assert_eq!(code(&in_memory), 0);
    let a = report_summary(&stdout_json(&from_file));
    let b = report_summary(&stdout_json(&in_memory));
    assert!(!a.is_empty());
    assert_eq!(a, b, "{build_args:?}");
}

#[test]
fn export_import_verify_is_bit_identical() {
    round_trip(&["--m", "2", "--q", "root", "1/4", "--color", "1.2,0.3:0.8,0.4"]);
    round_trip(&["--m", "3", "--q", "root", "1/6", "--color", "0.9,0.5:1.2,-0.7", "--color", "1.3,-0.2:0.5,0.5", "--gauge", "balanced"]);
    round_trip(&["--m", "4", "--q", "2,0.5", "--gauge", "explicit", "--a", "1.5,0", "--a", "0.5,0.25", "--a", "-2,1"]);
    round_trip(&["--m", "3", "--q", "root", "1/3", "--color", "0.8,0.1:1.1,0", "--gauge", "explicit", "--b", "2,0", "--b", "0.5,0.5"]);
    round_trip(&[
        "--m", "3", "--q", "root", "1/6", "--color", "0.8,0.1:1.1,0", "--color", "1.4,-0.6:0.9,0.3", "--gauge", "explicit", "--a", "0.3,1",
        "--a", "2,0",
    ]);
    round_trip(&["--m", "3", "--q", "root", "1/6", "--mode", "exact", "--color", "1,0", "--color", "1,0"]);
}

#[test]
fn explicit_b_with_a_wrong_product_is_rejected() {
    // a_1 b_1 must equal the product, which is not 1 here
    let out = run(&["build", "--m", "2", "--q", "root", "1/4", "--color", "1.2,0.3", "--gauge", "explicit", "--a", "1,0", "--b", "1,0"]);
    assert_eq!(code(&out), 2);
    assert_eq!(stderr_json(&out)["error"], "GaugeInconsistent");
}

#[test]
fn corrupted_entry_fails_with_ybe_residual() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("r.json");
    let out = run(&["build", "--m", "2", "--q", "root", "1/4", "--color", "1.2,0.3:0.8,0.4", "--output", path_str(&file)]);
    assert_eq!(code(&out), 0);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let entry = &mut v["entries"][1]["re"];
    *entry = serde_json::json!(entry.as_f64().unwrap() + 0.25);
    std::fs::write(&file, serde_json::to_string(&v).unwrap()).unwrap();

    let out = run(&["verify", "--input", path_str(&file)]);
    assert_eq!(code(&out), 1);
    let report = stdout_json(&out);
    assert_eq!(report["passed"], false);
    let ybe = report["reports"].as_array().unwrap().iter().find(|r| r["name"] == "ybe").unwrap();
    assert_eq!(ybe["passed"], false);
    assert!(ybe["residual"].as_f64().unwrap() > 1e-3);
    assert!(stderr_json(&out)["failed"].as_array().unwrap().iter().any(|n| n == "ybe"));
}

#[test]
fn malformed_files_are_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("r.json");
    std::fs::write(&file, "{\"m\": 2").unwrap();
    assert_eq!(code(&run(&["verify", "--input", path_str(&file)])), 2);
    std::fs::write(
        &file,
        r#"{"m":2,"dim":9,"q":{"re":0,"im":1},"branch":"generic","colors":[],"gauge":{"mode":"unit_a","a":[],"b":[]},"entries":[]}"#,
    )
    .unwrap();
    assert_eq!(code(&run(&["verify", "--input", path_str(&file)])), 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&run(&["verify", "--input", path_str(&missing)])), 2);
}

#[test]
fn three_colors_include_the_colored_ybe() {
    let out = run(&[
        "verify", "--m", "3", "--q", "root", "1/6", "--color", "0.9,0.5:1.2,-0.7", "--color", "1.3,-0.2:0.5,0.5", "--color",
        "0.7,0.1:1,0",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let names: Vec<String> = report_summary(&stdout_json(&out)).into_iter().map(|r| r.0).collect();
    assert_eq!(names, ["colored_ybe", "intertwiner", "hopf_axioms", "variant_intertwiners"]);

    let out = run(&["verify", "--m", "2", "--q", "root", "1/4", "--mode", "exact", "--color", "1,0", "--color", "1,0", "--color", "1,0"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["reports"][0]["name"], "colored_ybe_exact");
    assert_eq!(v["reports"][0]["exact"], true);
}

#[test]
fn single_color_verify_runs_every_check() {
    let out = run(&["verify", "--m", "4", "--q", "root", "1/8", "--color", "1.1,0.2:0.9,-0.3", "--gauge", "balanced"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let names: Vec<String> = report_summary(&stdout_json(&out)).into_iter().map(|r| r.0).collect();
    assert_eq!(names, ["ybe", "intertwiner", "hopf_axioms", "variants", "variant_intertwiners"]);
}

fn sweep_rows(args: &[&str]) -> (i32, Vec<Value>) {
    let mut full = vec!["sweep"];
    full.extend_from_slice(args);
    let out = run(&full);
    let rows = stdout_json(&out).as_array().unwrap().clone();
    (code(&out), rows)
}

#[test]
fn sweep_over_roots_and_gammas() {
    let args = [
        "--m", "2", "--q", "root", "1/4", "--q", "root", "3/4", "--sigma", "1.1,0.2", "--g", "1,0", "--g", "2,0", "--g", "0.5,0.5", "--g",
        "3,0", "--g", "0.7,-0.2", "--random-gauges", "2",
    ];
    let (status, rows) = sweep_rows(&args);
    assert_eq!(status, 0);
    assert_eq!(rows.len(), 10);
    for (k, row) in rows.iter().enumerate() {
        assert_eq!(row["index"], k);
        assert_eq!(row["passed"], true);
        assert!(row["max_residual"].as_f64().unwrap() <= 1e-9);
        assert_eq!(row["branch"], "root_of_unity");
    }
    // lexicographic: the first five rows share q = i
    assert!(rows[..5].iter().all(|r| r["q_im"].as_f64().unwrap() > 0.0));
    assert_eq!(rows[1]["g_re"], 2.0);
    let (_, again) = sweep_rows(&args);
    assert_eq!(again, rows);
}

#[test]
fn sweep_seed_controls_random_gauges() {
    let base = ["--m", "3", "--q", "root", "1/6", "--sigma", "0.9,0.3", "--random-gauges", "3"];
    let with_seed = |seed: &str| {
        let mut args = base.to_vec();
        args.extend_from_slice(&["--seed", seed]);
        sweep_rows(&args).1[0]["random_gauges"].as_f64().unwrap()
    };
    assert_eq!(with_seed("0"), sweep_rows(&base).1[0]["random_gauges"].as_f64().unwrap());
    assert_eq!(with_seed("5").to_bits(), with_seed("5").to_bits());
    assert_ne!(with_seed("5").to_bits(), with_seed("6").to_bits());
}

#[test]
fn sweep_records_point_errors() {
    let (status, rows) = sweep_rows(&["--m", "2", "--q=-1,0", "--q", "root", "1/4", "--q", "2,0"]);
    assert_eq!(status, 0);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["error"], "QSquaredOne");
    assert!(rows[0]["passed"].is_null());
    assert!(rows[1..].iter().all(|r| r["passed"] == true && r["error"].is_null()));
}

#[test]
fn empty_sweep() {
    let (status, rows) = sweep_rows(&["--m", "2"]);
    assert_eq!(status, 0);
    assert!(rows.is_empty());
    let out = run(&["sweep", "--m", "2", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);
}

#[test]
fn csv_build() {
    let out = run(&["build", "--m", "2", "--q", "root", "1/4", "--color", "1.2,0.3:0.8,0.4", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,c,re,im"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.len() == 4));
    assert_eq!(&rows[0][..2], ["1", "1"]);
}

#[test]
fn closed_forms_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 2] = [
        // generic branch through the default color s = q
        &["--m", "2", "--q", "2,0.3"],
        &["--m", "3", "--q", "root", "1/6", "--color", "1.2,0.1:0.9,0"],
    ];
    for (k, case) in cases.iter().enumerate() {
        let file = dir.path().join(format!("closed{k}.json"));
        let mut args = vec!["build", "--method", "closed", "--output", path_str(&file)];
        args.extend_from_slice(case);
        let out = run(&args);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let out = run(&["verify", "--input", path_str(&file)]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    }
    let out = run(&["build", "--method", "closed", "--m", "4", "--q", "root", "1/8"]);
    assert_eq!(code(&out), 2);
}
