use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_integer::binomial;
use once_cell::sync::Lazy;
use rayon::prelude::*;

use super::coeffs::{alpha_skew, c_coeff, d_coeff, skew_candidates};
use super::element::{GammaElement, TensorElement, TruncatedGammaSeries};
use crate::error::{self, Error, Result};
use crate::shapes::{partitions_of, rook_strip_removals, subpartitions, superpartitions, vertical_strip_additions};
use crate::shapes::{Partition, SkewShape};

type ProductKey = (Partition, Partition, Option<usize>);

static PRODUCTS: Lazy<Mutex<HashMap<ProductKey, Arc<GammaElement>>>> = Lazy::new(Default::default);
static COPRODUCTS: Lazy<Mutex<HashMap<Partition, Arc<TensorElement>>>> = Lazy::new(Default::default);
static ANTIPODES: Lazy<Mutex<HashMap<(Partition, usize), Arc<GammaElement>>>> = Lazy::new(Default::default);

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn collect_terms(terms: Vec<Result<(Partition, i64)>>) -> Result<GammaElement> {
    GammaElement::from_terms(terms.into_iter().collect::<Result<Vec<_>>>()?)
}

/// The union of the supports of the top-weight part of `G_λ · G_μ`.
fn envelope(lambda: &Partition, mu: &Partition) -> Result<Partition> {
    let n = lambda.weight() + mu.weight();
    let base = lambda.union(mu);
    let mut env = base.clone();
    for nu in partitions_of(n) {
        if nu.contains(&base) && c_coeff(lambda, mu, &nu)? != 0 {
            env = env.union(&nu);
        }
    }
    Ok(env)
}

/// `G_λ · G_μ`, restricted to weights `≤ cap` when a cap is given.
///
/// Every `ν` in the support lies inside the union of the partitions of
/// weight `|λ|+|μ|` occurring in the product, so only those are counted.
pub fn basis_product(lambda: &Partition, mu: &Partition, cap: Option<usize>) -> Result<Arc<GammaElement>> {
    if let Some(hit) = lookup_product(lambda, mu, cap) {
        return Ok(hit);
    }
    let n = lambda.weight() + mu.weight();
    let result = if lambda.is_empty() || mu.is_empty() {
        GammaElement::basis(lambda.union(mu))
    } else {
        let env = envelope(lambda, mu)?;
        let top = cap.unwrap_or(usize::MAX).min(env.weight());
        let candidates: Vec<Partition> = superpartitions(&lambda.union(mu), top)
            .into_iter()
            .filter(|nu| nu.weight() >= n && env.contains(nu))
            .collect();
        collect_terms(
            candidates
                .into_par_iter()
                .map(|nu| c_coeff(lambda, mu, &nu).map(|c| (nu, c)))
                .collect(),
        )?
    };
    let result = Arc::new(match cap {
        Some(d) => result.truncate(d),
        None => result,
    });
    PRODUCTS.lock().unwrap().insert((lambda.clone(), mu.clone(), cap), result.clone());
    Ok(result)
}

fn lookup_product(lambda: &Partition, mu: &Partition, cap: Option<usize>) -> Option<Arc<GammaElement>> {
    let memo = PRODUCTS.lock().unwrap();
    if let Some(hit) = memo.get(&(lambda.clone(), mu.clone(), cap)) {
        return Some(hit.clone());
    }
    let full = memo.get(&(lambda.clone(), mu.clone(), None))?;
    Some(Arc::new(full.truncate(cap?)))
}

/// The product of two elements.
pub fn multiply(a: &GammaElement, b: &GammaElement) -> Result<GammaElement> {
    product_impl(a, b, None)
}

/// The product of two elements modulo terms of weight greater than `cap`.
pub fn multiply_truncated(a: &GammaElement, b: &GammaElement, cap: usize) -> Result<GammaElement> {
    product_impl(a, b, Some(cap))
}

fn product_impl(a: &GammaElement, b: &GammaElement, cap: Option<usize>) -> Result<GammaElement> {
    let mut out = GammaElement::zero();
    for (l, x) in a.terms() {
        for (m, y) in b.terms() {
            if cap.is_some_and(|d| l.weight() + m.weight() > d) {
                continue;
            }
            let xy = error::mul(x, y)?;
            for (nu, c) in basis_product(l, m, cap)?.terms() {
                out.add_term(nu.clone(), error::mul(xy, c)?)?;
            }
        }
    }
    Ok(out)
}

/// `ΔG_ν`. Both tensor factors of every term are contained in `ν`.
pub fn basis_coproduct(nu: &Partition) -> Result<Arc<TensorElement>> {
    if let Some(hit) = COPRODUCTS.lock().unwrap().get(nu) {
        return Ok(hit.clone());
    }
    let subs = subpartitions(nu);
    let pairs: Vec<(Partition, Partition)> = subs
        .iter()
        .flat_map(|l| subs.iter().map(move |m| (l.clone(), m.clone())))
        .filter(|(l, m)| l.weight() + m.weight() >= nu.weight())
        .collect();
    let terms = pairs
        .into_par_iter()
        .map(|(l, m)| d_coeff(&l, &m, nu).map(|d| ((l, m), d)))
        .collect::<Result<Vec<_>>>()?;
    let result = Arc::new(TensorElement::from_terms(terms)?);
    COPRODUCTS.lock().unwrap().insert(nu.clone(), result.clone());
    Ok(result)
}

/// The coproduct of an element.
pub fn coproduct(a: &GammaElement) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for (nu, x) in a.terms() {
        for (l, m, d) in basis_coproduct(nu)?.terms() {
            out.add_term((l.clone(), m.clone()), error::mul(x, d)?)?;
        }
    }
    Ok(out)
}

/// The product in `Γ ⊗ Γ`.
pub fn tensor_multiply(a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for (l1, m1, x) in a.terms() {
        for (l2, m2, y) in b.terms() {
            let left = basis_product(l1, l2, None)?;
            let right = basis_product(m1, m2, None)?;
            let pair = std::iter::once(((*left).clone(), (*right).clone(), error::mul(x, y)?));
            out = out.add(&TensorElement::from_pairs(pair)?)?;
        }
    }
    Ok(out)
}

/// The expansion `G_s = Σ α_{s,μ} G_μ` of a skew function.
pub fn skew_expansion(s: &SkewShape) -> Result<GammaElement> {
    if s.is_empty() {
        return Ok(GammaElement::one());
    }
    collect_terms(
        skew_candidates(s)
            .into_par_iter()
            .map(|mu| alpha_skew(s, &mu).map(|a| (mu, a)))
            .collect(),
    )
}

/// `G_{ν∥λ} = Σ (−1)^{|λ/σ|} G_{ν/σ}` over `σ ⊆ λ` with `λ/σ` a rook strip.
pub fn sslash_element(nu: &Partition, lambda: &Partition) -> Result<GammaElement> {
    if !nu.contains(lambda) {
        return Err(Error::InvalidSkewShape(format!("{} is not contained in {}", lambda, nu)));
    }
    let mut out = GammaElement::zero();
    for sigma in rook_strip_removals(lambda) {
        let e = skew_expansion(&SkewShape::new(nu.clone(), sigma.clone())?)?;
        out = out.add(&e.scale(sign(lambda.weight() - sigma.weight()))?)?;
    }
    Ok(out)
}

fn binom(n: usize, k: usize) -> Result<i64> {
    if k > n {
        return Ok(0);
    }
    i64::try_from(binomial(n as u128, k as u128)).map_err(|_| Error::Overflow)
}

/// `G_{(1^ℓ)} · G_λ` by the vertical-strip Pieri rule.
pub fn pieri_product(lambda: &Partition, l: usize) -> Result<GammaElement> {
    if l == 0 {
        return Ok(GammaElement::basis(lambda.clone()));
    }
    let mut out = GammaElement::zero();
    for nu in vertical_strip_additions(lambda, l + lambda.first()) {
        let strip = SkewShape::new(nu.clone(), lambda.clone())?;
        let k = strip.size();
        if k < l {
            continue;
        }
        let b = binom(strip.column_count() - 1, k - l)?;
        out.add_term(nu, sign(k - l) * b)?;
    }
    Ok(out)
}

/// `d^λ_{μ,(k)}`: nonzero only when `λ/μ` is a horizontal strip, in which
/// case it is a signed binomial in the number of rows of `μ/λ̄`, where `λ̄`
/// is `λ` without its first row.
pub fn pieri_coproduct(lambda: &Partition, mu: &Partition, k: usize) -> Result<i64> {
    if !lambda.contains(mu) {
        return Ok(0);
    }
    let strip = SkewShape::new(lambda.clone(), mu.clone())?;
    if !strip.strip_kind().horizontal || k < strip.size() {
        return Ok(0);
    }
    let e = k - strip.size();
    let rows = SkewShape::new(mu.clone(), lambda.drop_rows(1))?.row_count();
    Ok(sign(e) * binom(rows, e)?)
}

/// The linear map `G_λ ↦ G_{(λ_{p+1}, λ_{p+2}, …)}`.
pub fn phi_p(a: &GammaElement, p: usize) -> Result<GammaElement> {
    a.map_basis(|l| l.drop_rows(p))
}

/// The involution `G_λ ↦ G_{λ'}`.
pub fn conjugate_element(a: &GammaElement) -> Result<GammaElement> {
    a.map_basis(|l| l.conjugate())
}

/// Multiplication by `t⁻¹`, using `t⁻¹ G_λ = Σ_{σ ⊇ λ} G_σ`, modulo weight `> cap`.
pub fn t_inverse_mult(a: &GammaElement, cap: usize) -> Result<TruncatedGammaSeries> {
    let mut out = GammaElement::zero();
    for (l, x) in a.terms() {
        for sigma in superpartitions(l, cap) {
            out.add_term(sigma, x)?;
        }
    }
    Ok(TruncatedGammaSeries::new(&out, cap))
}

/// The antipode, from `Σ_{λ⊆ν} S(G_λ) G_{ν∥λ} = 0` for `ν ≠ ∅` and
/// `G_{ν∥ν} = t^m` with `m` the number of corners of `ν`.
pub fn antipode(a: &GammaElement, cap: usize) -> Result<TruncatedGammaSeries> {
    let mut out = GammaElement::zero();
    for (nu, x) in a.terms() {
        out = out.add(&basis_antipode(nu, cap)?.scale(x)?)?;
    }
    Ok(TruncatedGammaSeries::new(&out, cap))
}

fn basis_antipode(nu: &Partition, cap: usize) -> Result<Arc<GammaElement>> {
    if nu.weight() > cap {
        return Ok(Arc::new(GammaElement::zero()));
    }
    if nu.is_empty() {
        return Ok(Arc::new(GammaElement::one()));
    }
    let key = (nu.clone(), cap);
    if let Some(hit) = ANTIPODES.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let mut rest = GammaElement::zero();
    for lambda in subpartitions(nu) {
        if &lambda == nu {
            continue;
        }
        let s = basis_antipode(&lambda, cap)?;
        let g = sslash_element(nu, &lambda)?.truncate(cap);
        rest = rest.add(&multiply_truncated(&s, &g, cap)?)?;
    }
    let mut result = rest.scale(-1)?;
    for _ in 0..nu.inner_corners() {
        result = t_inverse_mult(&result, cap)?.element;
    }
    let result = Arc::new(result);
    ANTIPODES.lock().unwrap().insert(key, result.clone());
    Ok(result)
}
