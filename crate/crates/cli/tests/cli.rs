use std::process::{Command, Output};

use kgamma::gamma::alpha_skew;
use kgamma::shapes::{Partition, SkewShape};
use serde_json::Value;

fn kgamma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kgamma")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = kgamma(args);
    assert_eq!(out.status.code(), Some(0), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn lines(args: &[&str]) -> Vec<String> {
    stdout(args).lines().map(str::to_string).collect()
}

fn json(args: &[&str]) -> Value {
    let mut with = args.to_vec();
    with.push("--json");
    serde_json::from_str(&stdout(&with)).unwrap()
}

fn parts(v: &Value) -> String {
    let xs: Vec<String> = v.as_array().unwrap().iter().map(|x| x.to_string()).collect();
    if xs.is_empty() {
        "0".into()
    } else {
        xs.join(",")
    }
}

#[test]
fn product_of_two_boxes() {
    assert_eq!(lines(&["mult", "1", "1"]), ["2 1", "1,1 1", "2,1 -1"]);
}

#[test]
fn coproduct_of_a_box() {
    assert_eq!(lines(&["coprod", "1"]), ["0 1 1", "1 0 1", "1 1 -1"]);
}

#[test]
fn skew_expansion_matches_coefficients() {
    let shape: SkewShape = "4,3,2/1".parse().unwrap();
    let rows = lines(&["skew", "4,3,2/1"]);
    assert!(!rows.is_empty());
    for row in rows {
        let (mu, c) = row.split_once(' ').unwrap();
        let mu: Partition = mu.parse().unwrap();
        assert_eq!(c.parse::<i64>().unwrap(), alpha_skew(&shape, &mu).unwrap(), "{}", row);
    }
}

#[test]
fn triple_intersection_example() {
    assert_eq!(lines(&["tripleint", "4", "9", "3,2,1", "3,2,1", "4,2,1"]), ["-1"]);
}

#[test]
fn usage_errors_exit_2() {
    for args in [&["mult", "1,3"][..], &["mult", "1"], &["skew", "4,x"], &["stable", "1,1"], &["verify", "nope"], &[]] {
        assert_eq!(kgamma(args).status.code(), Some(2), "{:?}", args);
    }
}

#[test]
fn domain_errors_exit_1() {
    for args in [&["grmult", "2", "4", "3", "0"][..], &["sslash", "1", "2"], &["poly", "2/1", "--double"], &["tripleint", "2", "2", "0", "0", "0"]] {
        let out = kgamma(args);
        assert_eq!(out.status.code(), Some(1), "{:?}", args);
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn verify_suites_pass() {
    for args in [&["verify", "insertion", "--max-weight", "3", "--max-entry", "3"][..], &["verify", "gamma", "--max-weight", "3"]] {
        let text = stdout(args);
        assert!(text.starts_with("failed: 0\n"), "{}", text);
        assert!(text.lines().skip(1).all(|l| l.starts_with("PASS")), "{}", text);
    }
}

#[test]
fn verify_all_passes() {
    let text = stdout(&["verify", "all"]);
    assert!(text.starts_with("failed: 0\n"));
    assert!(text.lines().any(|l| l.starts_with("REPORT conjectures/")));
    assert!(!text.contains("\nFAIL"));
}

#[test]
fn output_is_deterministic() {
    for args in [&["mult", "2,1", "2"][..], &["coprod", "2,2"], &["verify", "grassmann"], &["stable", "2,4,1,3", "--deg", "6"]] {
        assert_eq!(kgamma(args).stdout, kgamma(args).stdout, "{:?}", args);
        let mut with = args.to_vec();
        with.push("--json");
        assert_eq!(kgamma(&with).stdout, kgamma(&with).stdout, "{:?}", args);
    }
}

#[test]
fn json_and_text_agree() {
    for args in [&["mult", "2,1", "1,1"][..], &["skew", "3,2/1"], &["antipode", "1", "--deg", "4"], &["grmult", "2", "5", "2", "1,1"], &["pieri", "2,1", "2"]] {
        let doc = json(args);
        let from_json: Vec<String> = doc["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| format!("{} {}", parts(&r["partition"]), r["coeff"]))
            .collect();
        assert_eq!(from_json, lines(args), "{:?}", args);
    }
    let doc = json(&["coprod", "2,1"]);
    let from_json: Vec<String> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| format!("{} {} {}", parts(&r["left"]), parts(&r["right"]), r["coeff"]))
        .collect();
    assert_eq!(from_json, lines(&["coprod", "2,1"]));
    assert_eq!(json(&["tripleint", "4", "9", "3,2,1", "3,2,1", "4,2,1"])["value"], -1);
}

#[test]
fn rows_are_ordered_by_weight_then_descending_parts() {
    let rows = lines(&["mult", "2", "1,1"]);
    let keys: Vec<Partition> = rows.iter().map(|r| r.split(' ').next().unwrap().parse().unwrap()).collect();
    for w in keys.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        assert!(a.weight() < b.weight() || (a.weight() == b.weight() && a.parts() > b.parts()), "{:?}", rows);
    }
}

#[test]
fn polynomials_and_stable_expansions() {
    assert_eq!(lines(&["poly", "1", "--vars", "2"]), ["x1 + x2 - x1 x2"]);
    assert_eq!(lines(&["stable", "2,1", "--vars", "2", "--deg", "4"]), ["polynomial: x1 + x2 - x1 x2", "1 1"]);
    assert_eq!(lines(&["poly", "1", "--double", "--vars", "1", "--yvars", "1"]), ["x1 + y1 - x1 y1"]);
}

#[test]
fn duality_check() {
    let text = lines(&["dualcheck", "2", "5"]);
    assert_eq!(text[0], "pairs: 100");
    assert_eq!(text[1], "ok: true");
    assert_eq!(text.len(), 2 + 10);
}

#[test]
fn insertion_trace() {
    let text = lines(&["insert", "{1} / {2}", "{1}{2}"]);
    assert_eq!(text[0], "product: {1}{1}{2} / {2}");
    assert_eq!(text[1], "shape: 3,1");
    assert_eq!(text[2], "marks: none");
    assert_eq!(kgamma(&["insert", "{1}{2}", "{1}"]).status.code(), Some(1));
}
