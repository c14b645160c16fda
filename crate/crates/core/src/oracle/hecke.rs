use std::collections::HashMap;

use super::poly::TruncatedPolynomial;
use crate::error::{Error, Result};
use crate::shapes::Permutation;

/// An element `Σ f_w u_w` of the degenerate Hecke algebra with polynomial
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    terms: HashMap<Permutation, TruncatedPolynomial>,
}

impl HeckeElement {
    pub fn one(poly_one: TruncatedPolynomial) -> Self {
        let mut terms = HashMap::new();
        terms.insert(Permutation::identity(), poly_one);
        Self { terms }
    }

    pub fn coeff(&self, w: &Permutation) -> Option<&TruncatedPolynomial> {
        self.terms.get(w)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &TruncatedPolynomial)> {
        self.terms.iter()
    }

    /// Right multiplication by `1 + f u_i`, using `u_w u_i = u_{w s_i}` when
    /// `ℓ(w s_i) > ℓ(w)` and `u_w u_i = −u_w` otherwise. Terms whose
    /// permutation fails `keep` are dropped.
    pub fn mul_factor(&self, i: usize, f: &TruncatedPolynomial, keep: impl Fn(&Permutation) -> bool) -> Result<Self> {
        let mut terms: HashMap<Permutation, TruncatedPolynomial> = HashMap::new();
        let mut push = |w: Permutation, p: TruncatedPolynomial| -> Result<()> {
            if p.is_zero() {
                return Ok(());
            }
            match terms.remove(&w) {
                Some(q) => {
                    let s = q.add(&p)?;
                    if !s.is_zero() {
                        terms.insert(w, s);
                    }
                }
                None => {
                    terms.insert(w, p);
                }
            }
            Ok(())
        };
        for (w, p) in &self.terms {
            push(w.clone(), p.clone())?;
            let fp = p.mul(f)?;
            if w.is_ascent(i) {
                let v = w.mul_simple(i);
                if keep(&v) {
                    push(v, fp)?;
                }
            } else {
                push(w.clone(), fp.scale(-1)?)?;
            }
        }
        Ok(Self { terms })
    }
}

/// Which product of generating factors to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeckeSide {
    /// `A(x) = (1 + x u_n) ⋯ (1 + x u_1)`.
    X,
    /// `B(x) = (1 + x u_1) ⋯ (1 + x u_n)`.
    Y,
}

/// The coefficient of `u_w` in `A(x_p) ⋯ A(x_1)` (or the same with `B`), with
/// `n = max(rank(w) − 1, 1)` generators. The x side gives `G_w(x_1..x_p)`;
/// the y side gives `G_w(0; x_1..x_p)`, returned in the y bank.
pub fn hecke_grothendieck(w: &Permutation, p: usize, side: HeckeSide, cap: usize) -> Result<TruncatedPolynomial> {
    if p == 0 {
        return Err(Error::Domain("at least one variable is needed".into()));
    }
    let n = w.rank().saturating_sub(1).max(1);
    let mut acc = HeckeElement::one(TruncatedPolynomial::one(p, 0, cap));
    // the Demazure product only grows, so anything not below w is dead
    let keep = |v: &Permutation| v.bruhat_le(w);
    for var in (1..=p).rev() {
        let x = TruncatedPolynomial::x(var, p, 0, cap);
        let gens: Vec<usize> = match side {
            HeckeSide::X => (1..=n).rev().collect(),
            HeckeSide::Y => (1..=n).collect(),
        };
        for i in gens {
            acc = acc.mul_factor(i, &x, keep)?;
        }
    }
    let out = acc.coeff(w).cloned().unwrap_or_else(|| TruncatedPolynomial::zero(p, 0, cap));
    Ok(match side {
        HeckeSide::X => out,
        HeckeSide::Y => out.x_to_y(),
    })
}

/// The Demazure product of a word: multiply `u_{i_1} ⋯ u_{i_k}` and drop the sign.
pub fn demazure_product(word: &[u32]) -> Permutation {
    let mut w = Permutation::identity();
    for &i in word {
        let i = i as usize;
        if w.is_ascent(i) {
            w = w.mul_simple(i);
        }
    }
    w
}
