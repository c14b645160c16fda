use crate::error::{Error, Result};
use crate::shapes::{partitions_in_box, star, Partition, SkewShape};
use crate::tableaux::{count, stacked_intervals, Constraints, Content, Interval};

fn signed(n: u64, exponent: i64) -> Result<i64> {
    let n = i64::try_from(n).map_err(|_| Error::Overflow)?;
    Ok(if exponent.rem_euclid(2) == 0 { n } else { -n })
}

/// Signed count of tableaux of `shape` whose column word has the given
/// content and is lattice on each interval.
fn lattice_count(shape: &SkewShape, content: Content, intervals: Vec<Interval>) -> Result<i64> {
    let entries = content.total() as i64;
    if (content.total()) < shape.size() {
        return Ok(0);
    }
    let max_entry = content.len() as u32;
    let n = count(shape, max_entry, &Constraints::none().with_content(content).with_lattice(intervals))?;
    signed(n, entries - shape.size() as i64)
}

/// The structure constant `c^ν_{λμ}` of `G_λ · G_μ = Σ c^ν_{λμ} G_ν`.
pub fn c_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    if nu.weight() < lambda.weight() + mu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return Ok(0);
    }
    lattice_count(&star(lambda, mu), Content::new(nu.parts().to_vec()), vec![Interval::unbounded()])
}

/// The coproduct constant `d^ν_{λμ}` of `ΔG_ν = Σ d^ν_{λμ} G_λ ⊗ G_μ`.
pub fn d_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    if lambda.weight() + mu.weight() < nu.weight() {
        return Ok(0);
    }
    lattice_count(
        &SkewShape::straight(nu.clone()),
        Content::concat(&[lambda, mu]),
        stacked_intervals(&[lambda.len(), mu.len()]),
    )
}

/// The coefficient `α_{s,μ}` of `G_μ` in the expansion of the skew function `G_s`.
pub fn alpha_skew(s: &SkewShape, mu: &Partition) -> Result<i64> {
    lattice_count(s, Content::new(mu.parts().to_vec()), vec![Interval::unbounded()])
}

/// The coefficient of `G_{μ(1)} ⊗ ⋯ ⊗ G_{μ(n)}` in the iterated coproduct of `G_s`.
pub fn multi_coeff(s: &SkewShape, mus: &[Partition]) -> Result<i64> {
    let refs: Vec<&Partition> = mus.iter().collect();
    let lengths: Vec<usize> = mus.iter().map(|m| m.len()).collect();
    lattice_count(s, Content::concat(&refs), stacked_intervals(&lengths))
}

/// Every `μ` with `α_{s,μ} ≠ 0` fits in an `|s| × c(s)` box: letter 1
/// appears at most once per column, and the last occurrences of
/// `ℓ(μ), …, 1` in a lattice word lie in distinct boxes.
pub(crate) fn skew_candidates(s: &SkewShape) -> Vec<Partition> {
    partitions_in_box(s.size(), s.column_count())
        .into_iter()
        .filter(|p| p.weight() >= s.size())
        .collect()
}
