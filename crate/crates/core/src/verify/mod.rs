//! Batch invariant checks, grouped into named suites.
//!
//! Every check enumerates its cases from small to large and stops at the
//! first failure, so a reported counterexample is minimal in that order.

mod algebra;
mod combinatorics;
mod geometry;
mod polynomials;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub const SUITES: &[&str] = &["shapes", "tableaux", "insertion", "gamma", "oracle", "grassmann", "conjectures", "all"];

/// Size overrides; `None` keeps each check's default scale.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub max_weight: Option<usize>,
    pub max_entry: Option<u32>,
}

impl Bounds {
    pub(crate) fn weight(&self, default: usize) -> usize {
        self.max_weight.unwrap_or(default)
    }

    pub(crate) fn entry(&self, default: u32) -> u32 {
        self.max_entry.unwrap_or(default)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    /// Informational outcome of a scan over an open question.
    Report(String),
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub cases: usize,
    pub status: Status,
}

impl CheckResult {
    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }
}

/// What a check returns: the number of cases examined and, on failure, a
/// description of the first counterexample.
pub(crate) enum Verdict {
    Pass(usize),
    Fail(usize, String),
    Report(usize, String),
}

pub(crate) type CheckFn = fn(&Bounds) -> Result<Verdict>;

/// Shorthand for returning a failure with a formatted counterexample.
macro_rules! fail_if {
    ($cases:expr, $cond:expr, $($arg:tt)+) => {
        if $cond {
            return Ok($crate::verify::Verdict::Fail($cases, format!($($arg)+)));
        }
    };
}
pub(crate) use fail_if;

fn checks(suite: &str) -> Vec<(&'static str, &'static str, CheckFn)> {
    let tag = |s: &'static str, list: Vec<(&'static str, CheckFn)>| list.into_iter().map(move |(n, f)| (s, n, f));
    match suite {
        "shapes" => tag("shapes", combinatorics::shapes()).collect(),
        "tableaux" => tag("tableaux", combinatorics::tableaux()).collect(),
        "insertion" => tag("insertion", combinatorics::insertion()).collect(),
        "gamma" => tag("gamma", algebra::gamma()).collect(),
        "oracle" => tag("oracle", polynomials::oracle()).collect(),
        "grassmann" => tag("grassmann", geometry::grassmann()).collect(),
        "conjectures" => tag("conjectures", geometry::conjectures()).collect(),
        _ => Vec::new(),
    }
}

/// Runs every check of a suite (`all` runs every suite). Results come back
/// in a fixed order regardless of scheduling.
pub fn run_suite(suite: &str, bounds: &Bounds) -> Result<Vec<CheckResult>> {
    let names: Vec<&str> = match suite {
        "all" => SUITES.iter().copied().filter(|s| *s != "all").collect(),
        s if SUITES.contains(&s) => vec![s],
        s => return Err(Error::Domain(format!("unknown suite {}", s))),
    };
    let list: Vec<_> = names.into_iter().flat_map(checks).collect();
    Ok(list
        .into_par_iter()
        .map(|(suite, name, f)| {
            let (cases, status) = match f(bounds) {
                Ok(Verdict::Pass(n)) => (n, Status::Pass),
                Ok(Verdict::Fail(n, why)) => (n, Status::Fail(why)),
                Ok(Verdict::Report(n, text)) => (n, Status::Report(text)),
                Err(e) => (0, Status::Fail(format!("error: {}", e))),
            };
            CheckResult { suite, name, cases, status }
        })
        .collect())
}
