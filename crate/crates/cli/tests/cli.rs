use std::process::{Command, Output};

use ftlb_core::coeff::parse_scalar;
use serde_json::Value;

fn ftlb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ftlb")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn unknot_value() {
    let o = ftlb(&["invariant", "--kind", "vb", "--n", "1", "--braid", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn json_values_reparse() {
    let o = ftlb(&["invariant", "--kind", "xb", "--d", "2", "--S", "0,1", "--n", "2", "--braid", "s1 t1^1 r1^-1", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["invariant"], "xb");
    let value = v["value"].as_str().unwrap();
    let again = parse_scalar(value).unwrap();
    assert_eq!(again.to_string(), value);

    let o = ftlb(&["solve", "--d", "2", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 24);
    for s in sols {
        assert_eq!(s["certified"], true);
        for key in ["x", "y"] {
            for t in s[key].as_array().unwrap() {
                parse_scalar(t.as_str().unwrap()).unwrap();
            }
        }
        parse_scalar(s["z"].as_str().unwrap()).unwrap();
    }
}

#[test]
fn trace_with_bound_parameters() {
    let o = ftlb(&["trace", "--n", "2", "--braid", "s1"]);
    assert_eq!(stdout(&o).trim(), "z");
    let o = ftlb(&["trace", "--n", "2", "--braid", "s1 r1", "--z", "-1/u", "--y", "v"]);
    let got = parse_scalar(stdout(&o).trim()).unwrap();
    assert!(got.equals(&parse_scalar("-v/u").unwrap()), "{}", got);
}

#[test]
fn classical_quotient_suite() {
    let o = ftlb(&["verify", "--suite", "classical-quotient", "--d", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let passes = text.lines().filter(|l| l.starts_with("PASS") && l.contains("annihilates")).count();
    assert_eq!(passes, 4, "{}", text);
}

#[test]
fn frequency_suite_reports_value_sets() {
    let o = ftlb(&["verify", "--suite", "frequency-roots", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 8, "{}", text);
    assert!(text.contains("d=2 k=1 in Sup_1: each of {-2*u*z, 2*u*z} solves the system"), "{}", text);
}

#[test]
fn reports_are_reproducible() {
    let args = ["verify", "--suite", "markov", "--seed", "9", "--samples", "6"];
    let a = ftlb(&args);
    let b = ftlb(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = ftlb(&["verify", "--suite", "markov", "--seed", "10", "--samples", "6"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn usage_errors_exit_2_without_report() {
    for args in [
        vec!["verify", "--suite", "unknown"],
        vec!["invariant", "--kind", "vb", "--n", "1", "--braid", "s1"],
        vec!["invariant", "--kind", "pb", "--n", "2", "--braid", "s1 x"],
        vec!["invariant", "--kind", "vb", "--d", "2", "--n", "1"],
        vec!["frobnicate"],
        vec!["verify", "--suite", "frequency-roots", "--d", "5"],
    ] {
        let o = ftlb(&args);
        assert_eq!(o.status.code(), Some(2), "{:?}", args);
        assert!(o.stdout.is_empty(), "{:?}", args);
        assert!(!o.stderr.is_empty(), "{:?}", args);
    }
}

#[test]
fn config_file_mirrors_flags() {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("ftlb-config-test.toml");
    std::fs::write(&path, "kind = \"rhob\"\nd = 2\nS = \"0\"\nn = 1\nbraid = \"r1\"\noutput = \"json\"\n").unwrap();
    let p = path.to_str().unwrap();
    let o = ftlb(&["invariant", "--config", p]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["invariant"], "rhob");
    let o = ftlb(&["invariant", "--config", p, "--output", "text", "--braid", ""]);
    assert_eq!(stdout(&o).trim(), "1");

    std::fs::write(&path, "colour = 3\n").unwrap();
    let o = ftlb(&["invariant", "--config", p]);
    assert_eq!(o.status.code(), Some(2));
}
