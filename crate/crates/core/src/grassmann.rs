//! K-theory of the Grassmannian `Gr(d, n)` as the quotient of Γ by the span
//! of the `G_λ` with `λ` outside the rectangle `R = (n−d)^d`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gamma::{basis_product, GammaElement};
use crate::shapes::{partitions_in_box, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannContext {
    d: usize,
    n: usize,
    rect: Partition,
}

impl GrassmannContext {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if d == 0 || d >= n {
            return Err(Error::Domain(format!("Gr({}, {}) needs 0 < d < n", d, n)));
        }
        Ok(Self { d, n, rect: Partition::rectangle(d, n - d) })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The rectangle `(n−d)^d`.
    pub fn rectangle(&self) -> &Partition {
        &self.rect
    }

    pub fn fits(&self, lambda: &Partition) -> bool {
        self.rect.contains(lambda)
    }

    /// All partitions inside the rectangle, in canonical order.
    pub fn schubert_indices(&self) -> Vec<Partition> {
        partitions_in_box(self.d, self.n - self.d)
    }

    /// `λ̃`: the complement of `λ` in the rectangle, rotated.
    pub fn dual(&self, lambda: &Partition) -> Result<Partition> {
        lambda.rotate180_in_rect(self.d, self.n - self.d)
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if self.fits(lambda) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{} does not fit in {}", lambda, self.rect)))
        }
    }
}

impl fmt::Display for GrassmannContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.d, self.n)
    }
}

/// A class `Σ a_λ [O_λ]` in the K-theory ring of a Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    ctx: GrassmannContext,
    element: GammaElement,
}

impl KClass {
    pub fn zero(ctx: &GrassmannContext) -> Self {
        Self { ctx: ctx.clone(), element: GammaElement::zero() }
    }

    /// The structure sheaf class `[O_λ]`.
    pub fn schubert(ctx: &GrassmannContext, lambda: &Partition) -> Result<Self> {
        ctx.check(lambda)?;
        Ok(Self { ctx: ctx.clone(), element: GammaElement::basis(lambda.clone()) })
    }

    /// The ideal sheaf class `[I_λ] = t · [O_λ]` with `t = 1 − G_1`.
    pub fn ideal_sheaf(ctx: &GrassmannContext, lambda: &Partition) -> Result<Self> {
        let o = Self::schubert(ctx, lambda)?;
        k_multiply(&reduce(&GammaElement::t(), ctx), &o)
    }

    pub fn context(&self) -> &GrassmannContext {
        &self.ctx
    }

    /// The representative in Γ, supported inside the rectangle.
    pub fn element(&self) -> &GammaElement {
        &self.element
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.element.coeff(lambda)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.element.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_context(self, other)?;
        Ok(Self { ctx: self.ctx.clone(), element: self.element.add(&other.element)? })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_context(self, other)?;
        Ok(Self { ctx: self.ctx.clone(), element: self.element.sub(&other.element)? })
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            let (sign, mag) = if c < 0 { ("-", c.unsigned_abs()) } else { ("+", c as u64) };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {} ", sign)?,
            }
            if mag != 1 {
                write!(f, "{}*", mag)?;
            }
            write!(f, "O[{}]", p)?;
        }
        Ok(())
    }
}

fn same_context(a: &KClass, b: &KClass) -> Result<()> {
    if a.ctx != b.ctx {
        return Err(Error::Domain(format!("classes live on {} and {}", a.ctx, b.ctx)));
    }
    Ok(())
}

/// The image of `a` in the quotient: terms outside the rectangle are dropped.
pub fn reduce(a: &GammaElement, ctx: &GrassmannContext) -> KClass {
    let element = GammaElement::from_terms(a.terms().filter(|(p, _)| ctx.fits(p)).map(|(p, c)| (p.clone(), c)))
        .expect("a subset of valid terms cannot overflow");
    KClass { ctx: ctx.clone(), element }
}

pub fn k_multiply(a: &KClass, b: &KClass) -> Result<KClass> {
    same_context(a, b)?;
    let cap = a.ctx.rect.weight();
    let mut out = GammaElement::zero();
    for (l, x) in a.terms() {
        for (m, y) in b.terms() {
            let prod = basis_product(l, m, Some(cap))?;
            out = out.add(&prod.scale(crate::error::mul(x, y)?)?)?;
        }
    }
    Ok(reduce(&out, &a.ctx))
}

/// Pushforward to a point: every `[O_λ]` maps to 1.
pub fn pushforward(a: &KClass) -> Result<i64> {
    a.terms().try_fold(0i64, |s, (_, c)| crate::error::add(s, c))
}

/// Coefficient of `G_R` in `G_λ G_μ`: 1 exactly when `λ` and `μ` are
/// complementary in the rectangle.
pub fn rectangle_coeff(lambda: &Partition, mu: &Partition, ctx: &GrassmannContext) -> Result<i64> {
    ctx.check(lambda)?;
    ctx.check(mu)?;
    Ok(i64::from(ctx.dual(lambda)? == *mu))
}

/// `ρ_*(t · [O_λ] · [O_μ])`. Since `ρ_*(t [O_σ])` is 1 for `σ = R` and 0
/// otherwise this is the rectangle coefficient.
pub fn dual_pairing(lambda: &Partition, mu: &Partition, ctx: &GrassmannContext) -> Result<i64> {
    rectangle_coeff(lambda, mu, ctx)
}

/// `ρ_*(t · [O_λ] · [O_μ])` evaluated by multiplying out in the quotient.
pub fn dual_pairing_direct(lambda: &Partition, mu: &Partition, ctx: &GrassmannContext) -> Result<i64> {
    let il = KClass::ideal_sheaf(ctx, lambda)?;
    pushforward(&k_multiply(&il, &KClass::schubert(ctx, mu)?)?)
}

/// `ρ_*([O_λ][O_μ][O_ν]) = Σ_{σ ⊆ ν̃} c^σ_{λμ}`.
pub fn triple_intersection(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &GrassmannContext,
) -> Result<i64> {
    ctx.check(lambda)?;
    ctx.check(mu)?;
    let dual = ctx.dual(nu)?;
    let prod = basis_product(lambda, mu, Some(dual.weight()))?;
    let total = prod.terms().filter(|(s, _)| dual.contains(s)).try_fold(0i64, |s, (_, c)| crate::error::add(s, c));
    total
}

/// The same number as `Σ_{λ ⊆ σ ⊆ R} c^{ν̃}_{σμ}`.
pub fn triple_intersection_dual_form(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &GrassmannContext,
) -> Result<i64> {
    ctx.check(lambda)?;
    ctx.check(mu)?;
    let dual = ctx.dual(nu)?;
    let mut total = 0i64;
    for sigma in ctx.schubert_indices() {
        if sigma.contains(lambda) && sigma.weight() + mu.weight() <= dual.weight() {
            total = crate::error::add(total, crate::gamma::c_coeff(&sigma, mu, &dual)?)?;
        }
    }
    Ok(total)
}
