use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{self, Result};
use crate::shapes::Partition;

/// A finite integer combination of the basis elements `G_λ`.
///
/// Zero coefficients are never stored; iteration follows the canonical
/// partition order (weight ascending, then parts descending).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct GammaElement {
    coeffs: BTreeMap<Partition, i64>,
}

impl GammaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(lambda: Partition) -> Self {
        Self::monomial(lambda, 1)
    }

    pub fn monomial(lambda: Partition, c: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(lambda, c);
        }
        Self { coeffs }
    }

    /// `t = 1 − G_1`.
    pub fn t() -> Self {
        Self::from_terms([(Partition::empty(), 1), (crate::part![1], -1)]).unwrap()
    }

    /// Sums the given terms, merging repeated partitions.
    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, i64)>) -> Result<Self> {
        let mut e = Self::zero();
        for (p, c) in terms {
            e.add_term(p, c)?;
        }
        Ok(e)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.coeffs.iter().map(|(p, &c)| (p, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    /// Largest weight in the support (0 for the zero element).
    pub fn max_weight(&self) -> usize {
        self.coeffs.keys().map(|p| p.weight()).max().unwrap_or(0)
    }

    /// Smallest weight in the support, if any.
    pub fn min_weight(&self) -> Option<usize> {
        self.coeffs.keys().next().map(|p| p.weight())
    }

    pub fn add_term(&mut self, lambda: Partition, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        accumulate(&mut self.coeffs, lambda, c)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero();
        for (p, c) in self.terms() {
            out.add_term(p.clone(), error::mul(c, k)?)?;
        }
        Ok(out)
    }

    /// Image of a linear map on basis elements.
    pub fn map_basis(&self, mut f: impl FnMut(&Partition) -> Partition) -> Result<Self> {
        Self::from_terms(self.terms().map(|(p, c)| (f(p), c)))
    }

    /// Drops terms of weight greater than `cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        Self {
            coeffs: self.coeffs.iter().filter(|(p, _)| p.weight() <= cap).map(|(p, &c)| (p.clone(), c)).collect(),
        }
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, c: i64) -> Result<()> {
    match map.entry(key) {
        Entry::Occupied(mut o) => {
            let v = error::add(*o.get(), c)?;
            if v == 0 {
                o.remove();
            } else {
                *o.get_mut() = v;
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
    Ok(())
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, i64)>,
) -> fmt::Result {
    let mut first = true;
    for (name, c) in terms {
        let sign = if c < 0 { "-" } else { "+" };
        if first {
            if c < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", sign)?;
        }
        first = false;
        let a = c.unsigned_abs();
        match (a, name.is_empty()) {
            (_, true) => write!(f, "{}", a)?,
            (1, false) => write!(f, "{}", name)?,
            _ => write!(f, "{}*{}", a, name)?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for GammaElement {
    /// For example `G[2] + G[1,1] - G[2,1]`; the unit prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms().map(|(p, c)| {
            let name = if p.is_empty() { String::new() } else { format!("G[{}]", p) };
            (name, c)
        });
        write_terms(f, terms)
    }
}

impl fmt::Debug for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite integer combination of `G_λ ⊗ G_μ`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TensorElement {
    coeffs: BTreeMap<(Partition, Partition), i64>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut t = Self::zero();
        t.coeffs.insert((Partition::empty(), Partition::empty()), 1);
        t
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((Partition, Partition), i64)>) -> Result<Self> {
        let mut e = Self::zero();
        for (k, c) in terms {
            e.add_term(k, c)?;
        }
        Ok(e)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.coeffs.get(&(lambda.clone(), mu.clone())).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Partition, i64)> {
        self.coeffs.iter().map(|((a, b), &c)| (a, b, c))
    }

    pub fn add_term(&mut self, key: (Partition, Partition), c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        accumulate(&mut self.coeffs, key, c)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (a, b, c) in other.terms() {
            out.add_term((a.clone(), b.clone()), c)?;
        }
        Ok(out)
    }

    /// `Σ c · a_λ ⊗ b_μ` for a bilinear pair of element maps.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (GammaElement, GammaElement, i64)>) -> Result<Self> {
        let mut out = Self::zero();
        for (a, b, k) in pairs {
            for (p, x) in a.terms() {
                for (q, y) in b.terms() {
                    out.add_term((p.clone(), q.clone()), error::mul(error::mul(x, y)?, k)?)?;
                }
            }
        }
        Ok(out)
    }

    /// The flip `a ⊗ b ↦ b ⊗ a`.
    pub fn swap(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|((a, b), &c)| ((b.clone(), a.clone()), c)).collect() }
    }
}

impl fmt::Display for TensorElement {
    /// For example `G[1] ⊗ 1 + 1 ⊗ G[1] - G[1] ⊗ G[1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = |p: &Partition| if p.is_empty() { "1".to_string() } else { format!("G[{}]", p) };
        write_terms(f, self.terms().map(|(a, b, c)| (format!("{} ⊗ {}", g(a), g(b)), c)))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A representative of a power-series element modulo all terms of weight
/// greater than `degree_cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedGammaSeries {
    pub element: GammaElement,
    pub degree_cap: usize,
}

impl TruncatedGammaSeries {
    pub fn new(element: &GammaElement, degree_cap: usize) -> Self {
        Self { element: element.truncate(degree_cap), degree_cap }
    }

    pub fn coeff(&self, lambda: &Partition) -> Option<i64> {
        (lambda.weight() <= self.degree_cap).then(|| self.element.coeff(lambda))
    }
}

impl fmt::Display for TruncatedGammaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(weight > {})", self.element, self.degree_cap)
    }
}
