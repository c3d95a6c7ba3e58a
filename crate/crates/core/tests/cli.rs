use std::path::PathBuf;
use std::process::{Command, Output};

use frame_completion::{eig_hermitian, frame_operator, VectorSequence, C64};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn framecomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_framecomp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn floats(v: &serde_json::Value) -> Vec<f64> {
    v.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn solve_given_frame() {
    let out = framecomp(&["solve", &data("f0_two_norms.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out);
    let nu = floats(&doc["nu_star"]);
    for (x, y) in nu.iter().zip([9.0, 5.0, 4.5, 4.0, 4.0]) {
        assert!((x - y).abs() < 2e-2);
    }
    assert_eq!(doc["candidate_count"], 2);
    assert!(doc["majorization_minimizer"].is_array());
    let norms = floats(&doc["completion"]["squared_norms"]);
    assert!((norms[0] - 3.5).abs() < 1e-10 && (norms[1] - 2.0).abs() < 1e-10);
    assert_eq!(doc["structure"]["consistent"], true);
    let summary = String::from_utf8_lossy(&out.stderr);
    assert!(summary.contains("candidates=2"), "{summary}");
}

#[test]
fn solve_is_byte_identical() {
    let a = framecomp(&["solve", &data("seven_norms.json")]);
    let b = framecomp(&["solve", &data("seven_norms.json")]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
    let nu = floats(&json(&a)["nu_star"]);
    assert!((nu[0] - 7.505).abs() < 5e-4 && (nu[5] - 83.0 / 12.0).abs() < 5e-4);
}

#[test]
fn flags_override_file() {
    let out = framecomp(&[
        "solve",
        &data("eight_eigenvalues.json"),
        "--mode",
        "full",
        "--potential",
        "mse",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["mode"], "full");
    assert_eq!(doc["potential"], "mse");
    assert_eq!(doc["counts"]["strict_provenances"], 322);
}

#[test]
fn emit_candidates_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cands.csv");
    let out = framecomp(&[
        "solve",
        &data("four_norms.json"),
        "--emit-candidates",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("index,r,strict,mu_1"));
    assert_eq!(lines.count(), 7);
}

#[test]
fn caps_exceeded_exits_three() {
    // nothing fits under the cap: no document, only the diagnostic
    let out = framecomp(&["solve", &data("seven_norms.json"), "--caps", "1000"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("consecutive"));
    // some work items fit: the best partial candidate is reported
    let out = framecomp(&["solve", &data("seven_norms.json"), "--caps", "20000"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out);
    assert!(doc["partial"]["pairs_explored"].as_u64().unwrap() <= 20000);
    assert!(String::from_utf8_lossy(&out.stderr).contains("consecutive"));
}

#[test]
fn precondition_and_schema_failures() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    };
    let rank = write("rank.json", r#"{"lambda": [1, 0, 0], "norms": [1]}"#);
    assert_eq!(framecomp(&["solve", &rank]).status.code(), Some(2));
    let empty = write("empty.json", r#"{"lambda": [1, 1], "norms": []}"#);
    assert_eq!(framecomp(&["solve", &empty]).status.code(), Some(1));
    let both = write("both.json", r#"{"lambda": [1], "synthesis": [[1]], "norms": [1]}"#);
    assert_eq!(framecomp(&["solve", &both]).status.code(), Some(1));
    let increasing = write("inc.json", r#"{"lambda": [1, 2], "norms": [1]}"#);
    assert_eq!(framecomp(&["solve", &increasing]).status.code(), Some(1));
    assert_eq!(framecomp(&["solve", "/nonexistent.json"]).status.code(), Some(1));
}

#[test]
fn rows_orientation_matches_columns() {
    let dir = tempfile::tempdir().unwrap();
    let cols = dir.path().join("cols.json");
    let rows = dir.path().join("rows.json");
    // the same two vectors (1, 0) and (1, i) in C^2
    std::fs::write(&cols, r#"{"synthesis": [[1, 1], [0, [0, 1]]], "norms": [1, 1]}"#).unwrap();
    std::fs::write(
        &rows,
        r#"{"synthesis": [[1, 0], [1, [0, 1]]], "orientation": "rows", "norms": [1, 1]}"#,
    )
    .unwrap();
    let a = json(&framecomp(&["solve", cols.to_str().unwrap()]));
    let b = json(&framecomp(&["solve", rows.to_str().unwrap(), "--orientation", "rows"]));
    assert_eq!(a["lambda"], b["lambda"]);
    assert_eq!(a["nu_star"], b["nu_star"]);
}

#[test]
fn feasible_reports_failing_prefix() {
    let out = framecomp(&["feasible", &data("remark_feasibility.json")]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["feasible"], false);
    assert_eq!(floats(&doc["mu_nonzero"]), vec![2.25, 3.25]);
    assert_eq!(doc["failing_prefix"], 1);
}

#[test]
fn design_round_trip() {
    let out = framecomp(&["design", "--spectrum", "3,2,1.5", "--norms", "2,1.5,1.5,1,0.5"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert_eq!(header.split(',').count(), 10);
    let rows: Vec<Vec<C64>> = lines
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            v.chunks(2).map(|c| C64::new(c[0], c[1])).collect()
        })
        .collect();
    let g = VectorSequence::from_synthesis_columns(&rows).unwrap();
    let spec = eig_hermitian(&frame_operator(&g)).unwrap().values;
    for (x, y) in spec.iter().zip([3.0, 2.0, 1.5]) {
        assert!((x - y).abs() < 1e-8);
    }
    for (x, y) in g.squared_norms().iter().zip([2.0, 1.5, 1.5, 1.0, 0.5]) {
        assert!((x - y).abs() < 1e-10);
    }
    let infeasible = framecomp(&["design", "--spectrum", "1,1", "--norms", "2"]);
    assert_eq!(infeasible.status.code(), Some(2));
}

#[test]
fn match_check_documents() {
    let out = framecomp(&["match-check", &data("commuting_pair.json")]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["is_equality"], true);
    assert_eq!(doc["pairing"]["mu"].as_array().unwrap().len(), 3);
    let doc = json(&framecomp(&["match-check", &data("complex_pair.json")]));
    assert_eq!(doc["is_equality"], false);
    assert_eq!(doc["lindskii_holds"], true);
    assert!(doc["pairing"].is_null());
}

#[test]
fn oracle_compare_table() {
    let args = [
        "oracle-compare",
        &data("four_norms.json"),
        "--budget",
        "20000",
        "--seed",
        "3",
    ];
    let out = framecomp(&args);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, framecomp(&args).stdout);
    let doc = json(&out);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["oracle_not_better"] == true));
}
