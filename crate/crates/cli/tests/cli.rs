use std::fs;
use std::process::{Command, Output};

fn crossings(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crossings")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn upper_reports_match() {
    let o = crossings(&["upper", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("crossings=1 Z=1 closed_form=1 match=true"));
    let o = crossings(&["upper", "--n", "12"]);
    assert_eq!(stdout(&o).lines().next(), Some("crossings=150 Z=150 closed_form=150 match=true"));
}

#[test]
fn upper_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k7.svg");
    let o = crossings(&["upper", "--n", "7", "--svg", path.to_str().unwrap(), "--layout", "inside-outside"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml") || svg.starts_with("<svg"));
    assert!(svg.contains("version=\"1.1\""));
    assert_eq!(svg.matches("<path").count(), 21);
}

#[test]
fn gn_counts() {
    let o = crossings(&["gn", "--n", "8"]);
    assert_eq!(stdout(&o).trim(), "vertices=28 edges=70 isolated=8");
}

#[test]
fn maxcut_exact_and_heuristic() {
    let o = crossings(&["maxcut", "--n", "5", "--mode", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("maxcut=4 lower_bound=1 certificate=true"));

    let args = ["maxcut", "--n", "9", "--mode", "heuristic", "--seed", "5", "--restarts", "32", "--iters", "1000"];
    let first = crossings(&args);
    assert_eq!(stdout(&first).lines().next(), Some("maxcut=90 lower_bound=36 certificate=false"));
    assert_eq!(first.stdout, crossings(&args).stdout);
}

#[test]
fn infeasible_exact_exits_three() {
    let o = crossings(&["maxcut", "--n", "10", "--mode", "exact"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("--mode heuristic"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(crossings(&["upper", "--n", "5", "--bogus"]).status.code(), Some(2));
    assert_eq!(crossings(&["maxcut", "--n", "5"]).status.code(), Some(2));
    assert_eq!(crossings(&["upper", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn bound_labels_leading_order() {
    let o = crossings(&["bound", "--n", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("asymptotic_leading=145.008"), "{text}");
    assert!(text.contains("leading-order"));
    assert!(text.contains("lower_bound=not_computed"));

    let text = stdout(&crossings(&["bound", "--n", "6"]));
    assert!(text.starts_with("lower_bound=3 certified=true"), "{text}");
}

#[test]
fn verify_suites() {
    for args in [
        &["verify", "counting", "--n-max", "40"][..],
        &["verify", "level", "--k-max", "40"][..],
        &["verify", "fourier", "--trials", "200", "--grid", "64"][..],
    ] {
        let o = crossings(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn verification_failure_exits_one() {
    // an 8-point quadrature grid is far too coarse for the 5% agreement check
    let o = crossings(&["verify", "fourier", "--trials", "50", "--grid", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("first failing check: closed-form lhs matches quadrature"));
}

#[test]
fn json_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o =
        crossings(&["report", "--n-min", "4", "--n-max", "10", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    let keys = ["n", "z", "gn_edges", "maxcut", "method", "lower_bound", "asymptotic_leading"];
    for row in rows {
        let obj = row.as_object().unwrap();
        assert_eq!(obj.len(), keys.len());
        for key in keys {
            assert!(obj.contains_key(key), "{key}");
        }
        let edges = row["gn_edges"].as_u64().unwrap();
        assert_eq!(row["lower_bound"].as_u64().unwrap(), edges - row["maxcut"].as_u64().unwrap());
    }
    assert_eq!(rows[1]["maxcut"], 4);
    assert_eq!(rows[1]["method"], "exact");
    assert_eq!(rows[6]["method"], "heuristic");
}

#[test]
fn csv_report_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let o =
            crossings(&["report", "--n-min", "5", "--n-max", "12", "--format", "csv", "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,z,gn_edges,maxcut,method,lower_bound,asymptotic_leading"));
    assert_eq!(lines.next(), Some("5,1,5,4,exact,1,9.062974597304514"));
    assert_eq!(lines.count(), 7);
}
