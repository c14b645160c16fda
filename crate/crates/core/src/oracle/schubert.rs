use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use super::hecke::demazure_product;
use super::poly::{TruncatedPolynomial, MAX_VARS};
use super::sums::{g_lambda_mu, svt_polynomial, visit_fillings};
use crate::error::{Error, Result};
use crate::gamma::{basis_coproduct, GammaElement, TruncatedGammaSeries};
use crate::shapes::{partitions_up_to, superpartitions, Partition, Permutation, SkewShape};

const EXACT: usize = TruncatedPolynomial::EXACT;

/// Coefficients over the Schur basis `s_λ`.
pub type SchurExpansion = BTreeMap<Partition, i64>;

static DIVIDED: Lazy<Mutex<HashMap<(Permutation, usize, bool), Arc<TruncatedPolynomial>>>> =
    Lazy::new(Default::default);
static SVT: Lazy<Mutex<HashMap<(Partition, usize, usize), Arc<TruncatedPolynomial>>>> = Lazy::new(Default::default);
static STABLE: Lazy<Mutex<HashMap<(Permutation, usize, usize), Arc<TruncatedPolynomial>>>> =
    Lazy::new(Default::default);
static TRANSITIONS: Lazy<Mutex<HashMap<usize, Arc<SchurGTransition>>>> = Lazy::new(Default::default);

/// `𝔊_w(x)` in `S_n`, in the variables `x_1..x_n` (`x_n` never occurs): start from
/// `𝔊_{w_0} = Π_{i+j≤n} x_i` and apply isobaric divided differences.
pub fn divided_difference_grothendieck(w: &Permutation, n: usize) -> Result<TruncatedPolynomial> {
    Ok((*divided(w, n, false)?).clone())
}

/// The double version, starting from `Π_{i+j≤n} (x_i + y_j − x_i y_j)`.
pub fn divided_difference_double(w: &Permutation, n: usize) -> Result<TruncatedPolynomial> {
    Ok((*divided(w, n, true)?).clone())
}

fn divided(w: &Permutation, n: usize, double: bool) -> Result<Arc<TruncatedPolynomial>> {
    let n = n.max(2);
    if w.rank() > n {
        return Err(Error::InvalidPermutation(format!("{} is not in S_{}", w, n)));
    }
    // π_{n−1} passes through x_n, so the bank keeps it
    let nx = n;
    let ny = if double { n - 1 } else { 0 };
    if nx + ny > MAX_VARS {
        return Err(Error::Domain(format!("S_{} needs too many variables", n)));
    }
    let key = (w.clone(), n, double);
    if let Some(hit) = DIVIDED.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let result = if *w == Permutation::longest(n) {
        let mut g = TruncatedPolynomial::one(nx, ny, EXACT);
        for i in 1..n {
            for j in 1..=n - i {
                let x = TruncatedPolynomial::x(i, nx, ny, EXACT);
                let f = if double {
                    let y = TruncatedPolynomial::y(j, nx, ny, EXACT);
                    x.add(&y)?.sub(&x.mul(&y)?)?
                } else {
                    x
                };
                g = g.mul(&f)?;
            }
        }
        g
    } else {
        let i = (1..n).find(|&i| w.is_ascent(i)).unwrap();
        let f = divided(&w.mul_simple(i), n, double)?;
        isobaric(&f, i)?
    };
    let result = Arc::new(result);
    DIVIDED.lock().unwrap().insert(key, result.clone());
    Ok(result)
}

/// `π_i f = ((1 − x_{i+1}) f − (1 − x_i) s_i f) / (x_i − x_{i+1})`.
fn isobaric(f: &TruncatedPolynomial, i: usize) -> Result<TruncatedPolynomial> {
    let (nx, ny, cap) = (f.nx(), f.ny(), f.cap());
    let one = TruncatedPolynomial::one(nx, ny, cap);
    let a = one.sub(&TruncatedPolynomial::x(i + 1, nx, ny, cap))?;
    let b = one.sub(&TruncatedPolynomial::x(i, nx, ny, cap))?;
    let num = a.mul(f)?.sub(&b.mul(&f.swap_x(i))?)?;
    num.divide_by_difference(i)
}

/// `G_w(x_1..x_p)` modulo degree `> cap`, as the limit of `𝔊_{1^m × w}`
/// with `x_j = 0` for `j > p`.
///
/// In the Hecke-algebra formula for `𝔊_v`, variable `x_i` may only carry
/// generators `u_j` with `j ≥ i`; all generators of `1^m × w` have index
/// `> m`, so that restriction is void for `x_1..x_p` once `m ≥ p − 1`.
/// The limit is taken from there and confirmed at the next `m`.
pub fn stable_limit(w: &Permutation, p: usize, cap: usize) -> Result<TruncatedPolynomial> {
    if p == 0 {
        return Err(Error::Domain("at least one variable is needed".into()));
    }
    let key = (w.clone(), p, cap);
    if let Some(hit) = STABLE.lock().unwrap().get(&key) {
        return Ok((**hit).clone());
    }
    let start = p.saturating_sub(1);
    let mut prev: Option<TruncatedPolynomial> = None;
    for m in start..=start + 3 {
        let v = w.shift(m);
        let g = divided(&v, v.rank().max(2), false)?.restrict_x(p).with_cap(cap);
        if prev.as_ref() == Some(&g) {
            STABLE.lock().unwrap().insert(key, Arc::new(g.clone()));
            return Ok(g);
        }
        prev = Some(g);
    }
    Err(Error::NoStabilization(start + 3))
}

/// Cached [`svt_polynomial`] of a straight shape.
pub(crate) fn svt_straight(lambda: &Partition, p: usize, cap: usize) -> Result<Arc<TruncatedPolynomial>> {
    let key = (lambda.clone(), p, cap);
    if let Some(hit) = SVT.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let poly = Arc::new(svt_polynomial(&SkewShape::straight(lambda.clone()), p, cap)?);
    SVT.lock().unwrap().insert(key, poly.clone());
    Ok(poly)
}

/// Coefficients of a symmetric polynomial over the basis `G_λ(x_1..x_p)`.
/// Only `λ` with `|λ| ≤ max_weight` and `ℓ(λ) ≤ max_length` are determined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableExpansion {
    pub coefficients: GammaElement,
    pub max_weight: usize,
    pub max_length: usize,
}

/// Expands `f(x_1..x_p)` over `{G_λ}` by peeling off the lowest-degree
/// Schur component, whose lex-leading monomial `x^λ` names the next term.
pub fn expand_in_stable_basis(f: &TruncatedPolynomial, p: usize, cap: usize) -> Result<StableExpansion> {
    if f.ny() != 0 || f.nx() != p {
        return Err(Error::Domain(format!("expected a polynomial in x1..x{} only", p)));
    }
    if !f.is_symmetric_in_x() {
        return Err(Error::NotSymmetric);
    }
    let mut rest = f.with_cap(cap);
    let mut out = GammaElement::zero();
    while let Some(d) = rest.min_degree() {
        let comp = rest.component(d);
        let (lead, c) = comp.terms().map(|(e, c)| (*e, c)).max_by(|a, b| a.0.cmp(&b.0)).unwrap();
        let parts: Vec<usize> = lead[..p].iter().map(|&a| a as usize).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let lambda = Partition::new(parts)?;
        rest = rest.sub(&svt_straight(&lambda, p, cap)?.scale(c)?)?;
        out.add_term(lambda, c)?;
    }
    Ok(StableExpansion { coefficients: out, max_weight: cap, max_length: p })
}

/// The unitriangular change of basis between `{G_λ}` and `{s_λ}` up to weight `cap`.
#[derive(Clone, Debug)]
pub struct SchurGTransition {
    pub cap: usize,
    /// `G_λ = Σ_μ (−1)^{|μ/λ|} g_{λμ} s_μ`.
    pub g_to_s: BTreeMap<Partition, SchurExpansion>,
    /// `s_λ` over the `G` basis.
    pub s_to_g: BTreeMap<Partition, GammaElement>,
}

/// Builds (and caches) the transition data for weights `≤ cap`.
pub fn schur_g_transition(cap: usize) -> Result<Arc<SchurGTransition>> {
    if let Some(hit) = TRANSITIONS.lock().unwrap().get(&cap) {
        return Ok(hit.clone());
    }
    let parts = partitions_up_to(cap);
    let mut g_to_s = BTreeMap::new();
    for lambda in &parts {
        let mut row = SchurExpansion::new();
        for mu in superpartitions(lambda, cap) {
            let g = g_lambda_mu(lambda, &mu)? as i64;
            if g != 0 {
                let sign = if (mu.weight() - lambda.weight()) % 2 == 0 { 1 } else { -1 };
                row.insert(mu, sign * g);
            }
        }
        g_to_s.insert(lambda.clone(), row);
    }
    // s_λ = G_λ − Σ_{μ ⊋ λ} M_{λμ} s_μ, heaviest first
    let mut s_to_g: BTreeMap<Partition, GammaElement> = BTreeMap::new();
    for lambda in parts.iter().rev() {
        let mut e = GammaElement::basis(lambda.clone());
        for (mu, &m) in &g_to_s[lambda] {
            if mu != lambda {
                e = e.sub(&s_to_g[mu].scale(m)?)?;
            }
        }
        s_to_g.insert(lambda.clone(), e);
    }
    let t = Arc::new(SchurGTransition { cap, g_to_s, s_to_g });
    TRANSITIONS.lock().unwrap().insert(cap, t.clone());
    Ok(t)
}

/// `g_{wλ}`: semistandard tableaux of shape `λ'` with entries in `[1, n−1]`
/// whose column word has Demazure product `w`.
pub fn g_w_lambda(w: &Permutation, lambda: &Partition, n: usize) -> u64 {
    let shape = SkewShape::straight(lambda.conjugate());
    let mut count = 0;
    let top = n.saturating_sub(1) as u32;
    if top == 0 {
        return u64::from(lambda.is_empty() && w.is_identity());
    }
    visit_fillings(&shape, false, |_| (1, top), |rows| {
        let mut word = Vec::new();
        for c in 0..rows.first().map_or(0, |r| r.len()) {
            for r in (0..rows.len()).rev() {
                if c < rows[r].len() {
                    word.push(rows[r][c]);
                }
            }
        }
        if demazure_product(&word) == *w {
            count += 1;
        }
        std::ops::ControlFlow::Continue(())
    });
    count
}

/// `G_w(x) = Σ_λ α_{wλ} G_λ`, computed from `G_w = Σ (−1)^{|λ|−ℓ(w)} g_{wλ} s_λ`
/// and the Schur-to-`G` transition, exact for weights `≤ cap`.
pub fn alpha_w(w: &Permutation, cap: usize) -> Result<TruncatedGammaSeries> {
    let n = w.rank().max(2);
    let t = schur_g_transition(cap)?;
    let len = w.length();
    let mut out = GammaElement::zero();
    for lambda in partitions_up_to(cap) {
        if lambda.weight() < len || lambda.first() > n - 1 {
            continue;
        }
        let g = g_w_lambda(w, &lambda, n) as i64;
        if g == 0 {
            continue;
        }
        let sign = if (lambda.weight() - len) % 2 == 0 { 1 } else { -1 };
        out = out.add(&t.s_to_g[&lambda].scale(sign * g)?)?;
    }
    if let Some(bad) = out.support().find(|l| l.len() >= n) {
        return Err(Error::Residual(format!("α for {} has a term G[{}] of length ≥ {}", w, bad, n)));
    }
    Ok(TruncatedGammaSeries::new(&out, cap))
}

/// `G_ν(x_1..x_p; y_1..y_q) = Σ d^ν_{λμ} G_λ(x) G_{μ'}(y)`.
pub fn double_g(nu: &Partition, p: usize, q: usize, cap: usize) -> Result<TruncatedPolynomial> {
    if p == 0 {
        return Err(Error::Domain("at least one x variable is needed".into()));
    }
    if q == 0 {
        return Ok((*svt_straight(nu, p, cap)?).clone());
    }
    let mut out = TruncatedPolynomial::zero(p, q, cap);
    for (lambda, mu, d) in basis_coproduct(nu)?.terms() {
        if lambda.len() > p || mu.first() > q {
            continue;
        }
        let gx = svt_straight(lambda, p, cap)?.widen(p, q);
        let gy = svt_straight(&mu.conjugate(), q, cap)?.x_to_y().widen(p, q);
        out = out.add(&gx.mul(&gy)?.scale(d)?)?;
    }
    Ok(out)
}

/// Expansion of `f(x)` over `{𝔊_w : w ∈ S_n}`, by repeatedly removing the
/// lowest-degree, lex-smallest monomial `x^k`, which is `x^{code(w)}`.
pub fn grothendieck_basis_expand(f: &TruncatedPolynomial, n: usize) -> Result<BTreeMap<Permutation, i64>> {
    let n = n.max(2);
    if f.ny() != 0 {
        return Err(Error::Domain("expected a polynomial in x only".into()));
    }
    for (e, _) in f.terms() {
        if (0..f.nx()).any(|j| e[j] as usize > n.saturating_sub(j + 1)) {
            return Err(Error::Domain(format!("{} has a monomial outside the staircase of S_{}", f, n)));
        }
    }
    let mut rest = f.with_cap(EXACT).restrict_x(n);
    let mut out = BTreeMap::new();
    let mut steps = 0usize;
    while let Some(d) = rest.min_degree() {
        steps += 1;
        if steps > 100_000 {
            return Err(Error::Internal("expansion does not terminate".into()));
        }
        let comp = rest.component(d);
        let (lead, c) = comp.terms().map(|(e, c)| (*e, c)).min_by(|a, b| a.0.cmp(&b.0)).unwrap();
        let code: Vec<usize> = lead[..n].iter().map(|&a| a as usize).collect();
        let w = Permutation::from_code(&code)
            .map_err(|_| Error::Residual(format!("{} is outside the span of S_{}", f, n)))?;
        rest = rest.sub(&divided(&w, n, false)?.scale(c)?)?;
        *out.entry(w).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}
