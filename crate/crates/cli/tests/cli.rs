use std::path::PathBuf;
use std::process::{Command, Output};

fn bigrass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bigrass"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn bn_all_routes_print_the_same_polynomial() {
    let o = bigrass(&["bn", "--n", "3", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches("1 - 2*q + 2*q^3 - q^4").count(), 4, "{out}");
    assert!(out.trim_end().ends_with("verdict: OK"));
}

#[test]
fn bn_single_route_prints_only_the_polynomial() {
    let o = bigrass(&["bn", "--n", "2", "--method", "recursion"]);
    assert_eq!(stdout(&o), "1 - q\n");
}

#[test]
fn beta_of_3412() {
    let o = bigrass(&["beta", "--perm", "3412"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "l=4 beta=8");
}

#[test]
fn reading_for_s4() {
    let o = bigrass(&["reading", "--n", "4"]);
    assert_eq!(
        stdout(&o).trim(),
        "1 + 3*q + q^2 + 4*q^3 + 2*q^4 + 2*q^5 + 2*q^6 + 4*q^7 + q^8 + 3*q^9 + q^10"
    );
}

#[test]
fn expand_weighted_three() {
    let o = bigrass(&["expand", "--n", "3", "--weighted"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("transitive (6)"), "{out}");
    assert!(
        out.contains("cyclic (2): q^2*l*x1*x2*x3 + q^2*l^2*x1*x2*x3"),
        "{out}"
    );
}

#[test]
fn bdet_from_matrix_file() {
    let path = temp_file("ones3.txt", "n=3\n1; 1; 1\n1; 1; 1\n1; 1; 1\n");
    let o = bigrass(&["bdet", "--matrix", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.matches("1 - 2*q + 2*q^3 - q^4").count(), 3, "{out}");
}

#[test]
fn malformed_matrix_file_is_a_usage_error() {
    let path = temp_file("bad.txt", "n=2\n1; 1\n1\n");
    let o = bigrass(&["bdet", "--matrix", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
}

#[test]
fn condensation_suite_passes() {
    let o = bigrass(&[
        "verify",
        "--suite",
        "condensation",
        "--n",
        "4",
        "--trials",
        "100",
        "--seed",
        "42",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn every_suite_passes_up_to_five() {
    let o = bigrass(&["verify", "--suite", "all", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    for suite in [
        "beta",
        "routes",
        "bdet",
        "condensation",
        "reading",
        "tournaments",
        "vandermonde",
        "bruhat",
        "lambda",
        "balance",
    ] {
        assert!(
            out.contains(&format!("PASS [{suite}]")),
            "no {suite} checks in\n{out}"
        );
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "bdet", "--trials", "5", "--seed", "7"];
    assert_eq!(bigrass(&args).stdout, bigrass(&args).stdout);
}

#[test]
fn bounds_are_enforced_and_overridable() {
    let o = bigrass(&["bn", "--n", "10", "--method", "sum"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds the bound 9"));

    let o = bigrass(&["bn", "--n", "13", "--method", "det", "--max-n", "13"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"));

    let o = bigrass(&["bench", "--method", "bdet-def", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(bigrass(&["bn"]).status.code(), Some(2));
    assert_eq!(
        bigrass(&["bn", "--n", "3", "--method", "magic"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(bigrass(&["beta", "--perm", "3413"]).status.code(), Some(2));
}

#[test]
fn json_envelope() {
    let o = bigrass(&["--json", "bn", "--n", "4", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "bn");
    assert_eq!(v["inputs"]["n"], 4);
    assert_eq!(v["ok"], true);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 4);
    for r in results {
        assert_eq!(r["degree"], "10");
    }
}

#[test]
fn bench_reports_degree() {
    let o = bigrass(&["bench", "--method", "permanent", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("degree 56 (expected 56)"), "{out}");
    assert!(out.contains("route check at n=6: agree"));
}
