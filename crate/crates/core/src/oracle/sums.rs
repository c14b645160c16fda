use std::ops::ControlFlow;

use super::poly::{TruncatedPolynomial, MAX_VARS};
use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::{visit_tableaux, Constraints};

/// `Σ_T (−1)^{|T|−|s|} x^T` over set-valued tableaux of shape `s` with
/// entries `≤ p` and `|T| ≤ cap`.
pub fn svt_polynomial(s: &SkewShape, p: usize, cap: usize) -> Result<TruncatedPolynomial> {
    if p == 0 || p > MAX_VARS {
        return Err(Error::Domain(format!("variable count {} outside 1..={}", p, MAX_VARS)));
    }
    let mut out = TruncatedPolynomial::zero(p, 0, cap);
    let size = s.size();
    let mut failure = None;
    let constraints = Constraints::none().with_max_entries(cap);
    visit_tableaux(s, p as u32, &constraints, |leaf| {
        let mut e = [0u8; MAX_VARS];
        for (i, c) in leaf.counts(p as u32).enumerate() {
            e[i] = c as u8;
        }
        let sign = if (leaf.entries() - size) % 2 == 0 { 1 } else { -1 };
        match out.add_term(e, sign) {
            Ok(()) => ControlFlow::Continue(()),
            Err(err) => {
                failure = Some(err);
                ControlFlow::Break(())
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Single-valued fillings of a skew shape, visited row by row.
///
/// Rows weakly increase (strictly if `row_strict`), columns strictly
/// increase, and row `r` (0-based) uses entries in `range(r)`.
pub(crate) fn visit_fillings(
    s: &SkewShape,
    row_strict: bool,
    range: impl Fn(usize) -> (u32, u32),
    mut visit: impl FnMut(&[Vec<u32>]) -> ControlFlow<()>,
) {
    let rows: Vec<std::ops::Range<usize>> = (0..s.height()).map(|r| s.row_range(r)).collect();
    let mut fill: Vec<Vec<u32>> = rows.iter().map(|r| vec![0; r.len()]).collect();
    let cells: Vec<(usize, usize)> = rows.iter().enumerate().flat_map(|(r, rg)| rg.clone().map(move |c| (r, c))).collect();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        rows: &[std::ops::Range<usize>],
        fill: &mut Vec<Vec<u32>>,
        row_strict: bool,
        range: &dyn Fn(usize) -> (u32, u32),
        visit: &mut dyn FnMut(&[Vec<u32>]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if k == cells.len() {
            return visit(fill);
        }
        let (r, c) = cells[k];
        let (mut lo, hi) = range(r);
        if c > rows[r].start {
            let left = fill[r][c - 1 - rows[r].start];
            lo = lo.max(if row_strict { left + 1 } else { left });
        }
        if r > 0 && rows[r - 1].contains(&c) {
            lo = lo.max(fill[r - 1][c - rows[r - 1].start] + 1);
        }
        for v in lo..=hi {
            fill[r][c - rows[r].start] = v;
            rec(k + 1, cells, rows, fill, row_strict, range, visit)?;
        }
        ControlFlow::Continue(())
    }

    let _ = rec(0, &cells, &rows, &mut fill, row_strict, &range, &mut visit);
}

/// `s_λ(x_1..x_p) = Σ_T x^T` over semistandard tableaux with entries `≤ p`.
pub fn schur_polynomial(lambda: &Partition, p: usize) -> Result<TruncatedPolynomial> {
    if p > MAX_VARS {
        return Err(Error::Domain(format!("at most {} variables", MAX_VARS)));
    }
    let mut out = TruncatedPolynomial::zero(p, 0, TruncatedPolynomial::EXACT);
    if lambda.len() > p {
        return Ok(out);
    }
    let mut terms = Vec::new();
    visit_fillings(&SkewShape::straight(lambda.clone()), false, |_| (1, p as u32), |fill| {
        let mut e = [0u8; MAX_VARS];
        for &v in fill.iter().flatten() {
            e[v as usize - 1] += 1;
        }
        terms.push(e);
        ControlFlow::Continue(())
    });
    for e in terms {
        out.add_term(e, 1)?;
    }
    Ok(out)
}

/// The classical Littlewood-Richardson number: semistandard tableaux of shape
/// `ν/λ` and content `μ` whose row reading word (right to left, top to
/// bottom) is a lattice word.
pub fn classical_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lambda) || nu.weight() != lambda.weight() + mu.weight() {
        return 0;
    }
    let s = SkewShape::new(nu.clone(), lambda.clone()).unwrap();
    let k = mu.len() as u32;
    let mut n = 0;
    visit_fillings(&s, false, |_| (1, k.max(1)), |fill| {
        let mut counts = vec![0usize; k as usize + 2];
        for row in fill {
            for &v in row.iter().rev() {
                counts[v as usize] += 1;
                if v > 1 && counts[v as usize] > counts[v as usize - 1] {
                    return ControlFlow::Continue(());
                }
            }
        }
        if (1..=k as usize).all(|i| counts[i] == mu.part(i - 1)) {
            n += 1;
        }
        ControlFlow::Continue(())
    });
    n
}

/// `g_{λμ}`: fillings of `μ/λ` strictly increasing along rows and columns
/// with the entries of row `i` (1-based) in `[1, i−1]`.
pub fn g_lambda_mu(lambda: &Partition, mu: &Partition) -> Result<u64> {
    let s = SkewShape::new(mu.clone(), lambda.clone())?;
    if s.is_empty() {
        return Ok(1);
    }
    let mut n = 0;
    visit_fillings(&s, true, |r| (1, r as u32), |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    Ok(n)
}
