use std::time::Instant;

use kgamma::verify::{run_suite, Bounds, Status, SUITES};

fn check(suite: &str) {
    let start = Instant::now();
    let results = run_suite(suite, &Bounds::default()).unwrap();
    for r in &results {
        eprintln!("{}/{}: {:?} ({} cases)", r.suite, r.name, r.status, r.cases);
    }
    eprintln!("{} took {:?}", suite, start.elapsed());
    assert!(!results.is_empty());
    let failed: Vec<_> = results.iter().filter(|r| r.failed()).collect();
    assert!(failed.is_empty(), "{:?}", failed);
}

#[test]
fn shapes_suite() {
    check("shapes");
}

#[test]
fn tableaux_suite() {
    check("tableaux");
}

#[test]
fn insertion_suite() {
    check("insertion");
}

#[test]
fn gamma_suite() {
    check("gamma");
}

#[test]
fn oracle_suite() {
    check("oracle");
}

#[test]
fn grassmann_suite() {
    check("grassmann");
}

#[test]
fn conjectures_suite() {
    let results = run_suite("conjectures", &Bounds::default()).unwrap();
    for r in &results {
        eprintln!("{}: {:?}", r.name, r.status);
    }
    assert!(results.iter().any(|r| matches!(r.status, Status::Report(_))));
    assert!(!results.iter().any(|r| r.failed()));
}

#[test]
fn unknown_suite_is_rejected() {
    assert!(run_suite("nope", &Bounds::default()).is_err());
    assert!(SUITES.contains(&"all"));
}

#[test]
fn small_bounds_finish() {
    let bounds = Bounds { max_weight: Some(2), max_entry: Some(2) };
    let results = run_suite("gamma", &bounds).unwrap();
    assert!(results.iter().all(|r| !r.failed()), "{:?}", results);
}
