use std::collections::HashMap;
use std::fmt;

use crate::error::{self, Error, Result};

/// Total number of variables (both banks) a polynomial may use.
pub const MAX_VARS: usize = 16;

/// Exponents of `x_1..x_nx` followed by `y_1..y_ny`.
pub type Exponents = [u8; MAX_VARS];

/// Sparse integer polynomial in two banks of variables, with every term of
/// total degree above `cap` discarded.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    nx: usize,
    ny: usize,
    cap: usize,
    terms: HashMap<Exponents, i64>,
}

fn degree(e: &Exponents) -> usize {
    e.iter().map(|&a| a as usize).sum()
}

impl TruncatedPolynomial {
    /// Cap meaning "no truncation".
    pub const EXACT: usize = usize::MAX;

    pub fn zero(nx: usize, ny: usize, cap: usize) -> Self {
        assert!(nx + ny <= MAX_VARS, "at most {} variables are supported", MAX_VARS);
        Self { nx, ny, cap, terms: HashMap::new() }
    }

    pub fn constant(nx: usize, ny: usize, cap: usize, c: i64) -> Self {
        let mut p = Self::zero(nx, ny, cap);
        p.add_term([0; MAX_VARS], c).unwrap();
        p
    }

    pub fn one(nx: usize, ny: usize, cap: usize) -> Self {
        Self::constant(nx, ny, cap, 1)
    }

    /// The variable `x_i` (1-based).
    pub fn x(i: usize, nx: usize, ny: usize, cap: usize) -> Self {
        assert!((1..=nx).contains(&i));
        let mut e = [0; MAX_VARS];
        e[i - 1] = 1;
        let mut p = Self::zero(nx, ny, cap);
        p.add_term(e, 1).unwrap();
        p
    }

    /// The variable `y_j` (1-based).
    pub fn y(j: usize, nx: usize, ny: usize, cap: usize) -> Self {
        assert!((1..=ny).contains(&j));
        let mut e = [0; MAX_VARS];
        e[nx + j - 1] = 1;
        let mut p = Self::zero(nx, ny, cap);
        p.add_term(e, 1).unwrap();
        p
    }

    /// Builds a polynomial from `(x exponents, y exponents, coefficient)` triples.
    pub fn from_terms<'a>(
        nx: usize,
        ny: usize,
        cap: usize,
        terms: impl IntoIterator<Item = (&'a [u8], &'a [u8], i64)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nx, ny, cap);
        for (xs, ys, c) in terms {
            if xs.len() > nx || ys.len() > ny {
                return Err(Error::Domain("exponent vector longer than the variable bank".into()));
            }
            let mut e = [0; MAX_VARS];
            e[..xs.len()].copy_from_slice(xs);
            e[nx..nx + ys.len()].copy_from_slice(ys);
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exponents) -> i64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    /// Terms in graded-lex order: degree ascending, then exponents descending.
    pub fn sorted_terms(&self) -> Vec<(Exponents, i64)> {
        let mut v: Vec<(Exponents, i64)> = self.terms.iter().map(|(e, &c)| (*e, c)).collect();
        v.sort_by(|a, b| degree(&a.0).cmp(&degree(&b.0)).then(b.0.cmp(&a.0)));
        v
    }

    /// Lowest total degree of a term.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(degree).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(degree).max()
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> Self {
        self.filter(|e| degree(e) == d)
    }

    fn filter(&self, keep: impl Fn(&Exponents) -> bool) -> Self {
        Self {
            nx: self.nx,
            ny: self.ny,
            cap: self.cap,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, &c)| (*e, c)).collect(),
        }
    }

    pub fn add_term(&mut self, e: Exponents, c: i64) -> Result<()> {
        if c == 0 || degree(&e) > self.cap {
            return Ok(());
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot = error::add(*slot, c)?;
        if *slot == 0 {
            self.terms.remove(&e);
        }
        Ok(())
    }

    fn check_banks(&self, other: &Self) -> Result<()> {
        if (self.nx, self.ny) != (other.nx, other.ny) {
            return Err(Error::Domain(format!(
                "variable banks differ: ({}, {}) vs ({}, {})",
                self.nx, self.ny, other.nx, other.ny
            )));
        }
        Ok(())
    }

    /// Sum; the result keeps the smaller cap.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_banks(other)?;
        let mut out = self.with_cap(self.cap.min(other.cap));
        for (e, c) in other.terms() {
            out.add_term(*e, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero(self.nx, self.ny, self.cap);
        for (e, c) in self.terms() {
            out.add_term(*e, error::mul(c, k)?)?;
        }
        Ok(out)
    }

    /// Product; the result keeps the smaller cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_banks(other)?;
        let cap = self.cap.min(other.cap);
        let mut out = Self::zero(self.nx, self.ny, cap);
        let n = self.nx + self.ny;
        for (a, x) in self.terms() {
            let da = degree(a);
            for (b, y) in other.terms() {
                if da + degree(b) > cap {
                    continue;
                }
                let mut e = *a;
                for i in 0..n {
                    e[i] = e[i].checked_add(b[i]).ok_or(Error::Overflow)?;
                }
                out.add_term(e, error::mul(x, y)?)?;
            }
        }
        Ok(out)
    }

    /// Same polynomial with a different cap (terms above it are dropped).
    pub fn with_cap(&self, cap: usize) -> Self {
        let mut p = self.filter(|e| degree(e) <= cap);
        p.cap = cap;
        p
    }

    /// Reinterprets the polynomial in larger banks (`nx`, `ny` at least the current ones).
    pub fn widen(&self, nx: usize, ny: usize) -> Self {
        assert!(nx >= self.nx && ny >= self.ny && nx + ny <= MAX_VARS);
        let mut out = Self::zero(nx, ny, self.cap);
        for (e, c) in self.terms() {
            let mut f = [0; MAX_VARS];
            f[..self.nx].copy_from_slice(&e[..self.nx]);
            f[nx..nx + self.ny].copy_from_slice(&e[self.nx..self.nx + self.ny]);
            out.terms.insert(f, c);
        }
        out
    }

    /// Renames `x_i` to `x_{i+offset}` inside an x bank of size `nx`.
    pub fn embed_x(&self, offset: usize, nx: usize) -> Self {
        assert!(nx >= self.nx + offset && nx + self.ny <= MAX_VARS);
        let mut out = Self::zero(nx, self.ny, self.cap);
        for (e, c) in self.terms() {
            let mut f = [0; MAX_VARS];
            f[offset..offset + self.nx].copy_from_slice(&e[..self.nx]);
            f[nx..nx + self.ny].copy_from_slice(&e[self.nx..self.nx + self.ny]);
            out.terms.insert(f, c);
        }
        out
    }

    /// Moves the x bank into the y bank (the x bank becomes empty).
    pub fn x_to_y(&self) -> Self {
        Self { nx: 0, ny: self.nx + self.ny, cap: self.cap, terms: self.terms.clone() }
    }

    /// Sets `x_j = 0` for `j > p` and keeps only `x_1..x_p` in the x bank.
    pub fn restrict_x(&self, p: usize) -> Self {
        if p >= self.nx {
            return self.widen(p, self.ny);
        }
        let mut out = Self::zero(p, self.ny, self.cap);
        for (e, c) in self.terms() {
            if e[p..self.nx].iter().any(|&a| a > 0) {
                continue;
            }
            let mut f = [0; MAX_VARS];
            f[..p].copy_from_slice(&e[..p]);
            f[p..p + self.ny].copy_from_slice(&e[self.nx..self.nx + self.ny]);
            out.terms.insert(f, c);
        }
        out
    }

    /// Substitutes the integer `value` for `x_i` and renumbers `x_{i+1}, …` down by one.
    pub fn specialize_x(&self, i: usize, value: i64) -> Result<Self> {
        assert!((1..=self.nx).contains(&i));
        let mut out = Self::zero(self.nx - 1, self.ny, self.cap);
        let n = self.nx + self.ny;
        for (e, c) in self.terms() {
            let mut k = c;
            for _ in 0..e[i - 1] {
                k = error::mul(k, value)?;
            }
            let mut f = [0; MAX_VARS];
            f[..i - 1].copy_from_slice(&e[..i - 1]);
            f[i - 1..n - 1].copy_from_slice(&e[i..n]);
            out.add_term(f, k)?;
        }
        Ok(out)
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap_x(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.nx);
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| {
                let mut f = *e;
                f.swap(i - 1, i);
                (f, c)
            })
            .collect();
        Self { nx: self.nx, ny: self.ny, cap: self.cap, terms }
    }

    /// Exact quotient by `x_i − x_{i+1}`; the polynomial must be
    /// antisymmetric in those two variables. The quotient is reliable up to
    /// degree `cap − 1`, so its cap is lowered by one.
    pub fn divide_by_difference(&self, i: usize) -> Result<Self> {
        let (a, b) = (i - 1, i);
        let cap = self.cap.saturating_sub(1);
        let mut out = Self::zero(self.nx, self.ny, if self.cap == Self::EXACT { self.cap } else { cap });
        for (e, c) in self.terms() {
            let (p, q) = (e[a], e[b]);
            let mut mirror = *e;
            mirror.swap(a, b);
            if self.coeff(&mirror) != -c {
                return Err(Error::Residual(format!("numerator not antisymmetric in x{} and x{}", i, i + 1)));
            }
            if p <= q {
                continue;
            }
            // (a^p b^q − a^q b^p) / (a − b) = Σ_k a^{q+k} b^{p−1−k}
            for k in 0..(p - q) {
                let mut f = *e;
                f[a] = q + k;
                f[b] = p - 1 - k;
                out.add_term(f, c)?;
            }
        }
        Ok(out)
    }

    /// Whether the polynomial is symmetric in `x_1..x_nx`.
    pub fn is_symmetric_in_x(&self) -> bool {
        (1..self.nx).all(|i| self.swap_x(i) == *self)
    }
}

impl fmt::Display for TruncatedPolynomial {
    /// Terms like `x1 + x2 - x1 x2`, or `-3 x1^2 y1`, in graded-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in terms.iter().enumerate() {
            let mut vars = Vec::new();
            for (i, &a) in e[..self.nx + self.ny].iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let name = if i < self.nx { format!("x{}", i + 1) } else { format!("y{}", i - self.nx + 1) };
                vars.push(if a == 1 { name } else { format!("{}^{}", name, a) });
            }
            let a = c.unsigned_abs();
            let body = match (a, vars.is_empty()) {
                (_, true) => a.to_string(),
                (1, false) => vars.join(" "),
                _ => format!("{} {}", a, vars.join(" ")),
            };
            match (k, *c < 0) {
                (0, true) => write!(f, "-{}", body)?,
                (0, false) => write!(f, "{}", body)?,
                (_, true) => write!(f, " - {}", body)?,
                (_, false) => write!(f, " + {}", body)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
