use std::collections::{BTreeMap, BTreeSet};

use super::{fail_if, Bounds, CheckFn, Verdict};
use crate::error::Result;
use crate::gamma::*;
use crate::oracle::classical_lr;
use crate::shapes::*;

pub(super) fn gamma() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("products commute", commutativity),
        ("products associate", associativity),
        ("conjugation symmetry of c", conjugation_symmetry),
        ("sign laws for c, d and α", sign_laws),
        ("coassociativity and counit", coassociativity),
        ("coproduct is multiplicative", compatibility),
        ("coproduct through G_{ν∥λ}", sslash_coproduct),
        ("G_{ν∥ν} is a power of t", sslash_diagonal),
        ("d as a product coefficient", rectangle_bridge),
        ("c as a sum of coproduct coefficients", inverse_bridge),
        ("coproduct row sums vanish", row_sums),
        ("nonzero coefficients come in paths", paths),
        ("products lie inside classical supports", containment),
        ("multiplicity-free products", multiplicity_free),
        ("classical specialization", classical),
        ("Pieri rules", pieri),
        ("rectangle coproducts", rectangle_coproduct),
        ("products of two rectangles", two_rectangles),
        ("t times a rectangle", t_rectangle),
        ("φ_p is multiplicative", phi_homomorphism),
        ("multi-coproduct coefficients specialize", multi_coefficients),
        ("t⁻¹ inverts t", t_inverse),
        ("antipode", antipode_identity),
    ]
}

fn g(p: &Partition) -> GammaElement {
    GammaElement::basis(p.clone())
}

fn sign(e: isize) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn commutativity(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(3));
    let mut n = 0;
    for l in &ps {
        for m in &ps {
            n += 1;
            fail_if!(n, multiply(&g(l), &g(m))? != multiply(&g(m), &g(l))?, "λ = {}, μ = {}", l, m);
        }
    }
    Ok(Verdict::Pass(n))
}

fn associativity(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(2));
    let mut n = 0;
    for a in &ps {
        for bb in &ps {
            let ab = multiply(&g(a), &g(bb))?;
            for c in &ps {
                n += 1;
                let left = multiply(&ab, &g(c))?;
                let right = multiply(&g(a), &multiply(&g(bb), &g(c))?)?;
                fail_if!(n, left != right, "{} {} {}", a, bb, c);
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn conjugation_symmetry(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(3));
    let mut n = 0;
    for l in &ps {
        for m in &ps {
            n += 1;
            let prod = multiply(&g(l), &g(m))?;
            let conj = multiply(&g(&l.conjugate()), &g(&m.conjugate()))?;
            fail_if!(n, conjugate_element(&prod)? != conj, "λ = {}, μ = {}", l, m);
        }
    }
    Ok(Verdict::Pass(n))
}

fn sign_laws(b: &Bounds) -> Result<Verdict> {
    let w = b.weight(3);
    let mut n = 0;
    for l in partitions_up_to(w) {
        for m in partitions_up_to(w) {
            let base = (l.weight() + m.weight()) as isize;
            for (nu, c) in multiply(&g(&l), &g(&m))?.terms() {
                n += 1;
                fail_if!(n, sign(nu.weight() as isize - base) * c < 0, "c^{}_{},{} = {}", nu, l, m, c);
            }
        }
    }
    for nu in partitions_up_to(w + 1) {
        for (l, m, d) in basis_coproduct(&nu)?.terms() {
            n += 1;
            let e = (l.weight() + m.weight()) as isize - nu.weight() as isize;
            fail_if!(n, sign(e) * d < 0, "d^{}_{},{} = {}", nu, l, m, d);
        }
    }
    for s in skew_shapes_in_box(3, 3) {
        for (mu, a) in skew_expansion(&s)?.terms() {
            n += 1;
            fail_if!(n, sign(mu.weight() as isize - s.size() as isize) * a < 0, "α_{},{} = {}", s, mu, a);
        }
    }
    Ok(Verdict::Pass(n))
}

type Triple = BTreeMap<(Partition, Partition, Partition), i64>;

fn coassociativity(b: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for nu in partitions_up_to(b.weight(4)) {
        let d = basis_coproduct(&nu)?;
        let mut left = Triple::new();
        let mut right = Triple::new();
        for (a, bb, c) in d.terms() {
            for (x, y, e) in basis_coproduct(a)?.terms() {
                *left.entry((x.clone(), y.clone(), bb.clone())).or_default() += c * e;
            }
            for (x, y, e) in basis_coproduct(bb)?.terms() {
                *right.entry((a.clone(), x.clone(), y.clone())).or_default() += c * e;
            }
        }
        left.retain(|_, v| *v != 0);
        right.retain(|_, v| *v != 0);
        n += 1;
        fail_if!(n, left != right, "coassociativity at {}", nu);
        let e = Partition::empty();
        let left_unit: Vec<_> = d.terms().filter(|(a, _, _)| **a == e).map(|(_, x, c)| (x.clone(), c)).collect();
        let right_unit: Vec<_> = d.terms().filter(|(_, x, _)| **x == e).map(|(a, _, c)| (a.clone(), c)).collect();
        fail_if!(n, left_unit != vec![(nu.clone(), 1)] || right_unit != vec![(nu.clone(), 1)], "counit at {}", nu);
        fail_if!(n, d.swap() != *d, "cocommutativity at {}", nu);
    }
    Ok(Verdict::Pass(n))
}

fn compatibility(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(3));
    let mut n = 0;
    for l in &ps {
        for m in &ps {
            n += 1;
            let lhs = coproduct(&multiply(&g(l), &g(m))?)?;
            let rhs = tensor_multiply(&*basis_coproduct(l)?, &*basis_coproduct(m)?)?;
            fail_if!(n, lhs != rhs, "λ = {}, μ = {}", l, m);
        }
    }
    Ok(Verdict::Pass(n))
}

fn sslash_coproduct(b: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for nu in partitions_up_to(b.weight(4)) {
        let mut sum = TensorElement::zero();
        for l in subpartitions(&nu) {
            for (m, c) in sslash_element(&nu, &l)?.terms() {
                sum.add_term((l.clone(), m.clone()), c)?;
            }
        }
        n += 1;
        fail_if!(n, sum != *basis_coproduct(&nu)?, "ν = {}", nu);
    }
    Ok(Verdict::Pass(n))
}

fn sslash_diagonal(b: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for nu in partitions_up_to(b.weight(4)) {
        let mut power = GammaElement::one();
        for _ in 0..nu.inner_corners() {
            power = multiply(&power, &GammaElement::t())?;
        }
        n += 1;
        fail_if!(n, sslash_element(&nu, &nu)? != power, "ν = {}", nu);
    }
    Ok(Verdict::Pass(n))
}

fn rectangle_bridge(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(2));
    let mut n = 0;
    for l in &ps {
        for m in &ps {
            let (p, q) = (l.len().max(1), m.first().max(1));
            let r = Partition::rectangle(p, q);
            let glued = Partition::rect_sum(p, q, l, m)?;
            for nu in partitions_up_to(l.weight() + m.weight()) {
                n += 1;
                let d = d_coeff(l, m, &nu)?;
                let c = c_coeff(&nu, &r, &glued)?;
                fail_if!(n, d != c, "d^{}_{},{} = {} but c = {} with R = {}", nu, l, m, d, c, r);
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn inverse_bridge(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(2));
    let mut n = 0;
    for l in &ps {
        for m in &ps {
            let (p, q) = (l.len().max(m.len()).max(1), l.first().max(m.first()).max(1));
            let r = Partition::rectangle(p, q);
            let glued = Partition::rect_sum(p, q, l, m)?;
            for nu in partitions_up_to(glued.weight()) {
                let mut sum = 0;
                for sigma in subpartitions(&r) {
                    sum += d_coeff(&nu, &sigma, &glued)?;
                }
                n += 1;
                let c = c_coeff(l, m, &nu)?;
                fail_if!(n, c != sum, "c^{}_{},{} = {} but the sum is {}", nu, l, m, c, sum);
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn row_sums(b: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for l in partitions_up_to(b.weight(4)) {
        for m in subpartitions(&l) {
            if m.is_empty() {
                continue;
            }
            let mut sum = 0;
            for t in subpartitions(&l) {
                sum += d_coeff(&m, &t, &l)?;
            }
            n += 1;
            fail_if!(n, sum != 0, "Σ_τ d^{}_{},τ = {}", l, m, sum);
        }
    }
    Ok(Verdict::Pass(n))
}

fn add_box(p: &Partition) -> Vec<Partition> {
    superpartitions(p, p.weight() + 1).into_iter().filter(|q| q.weight() > p.weight()).collect()
}

fn remove_box(p: &Partition) -> Vec<Partition> {
    subpartitions(p).into_iter().filter(|q| q.weight() + 1 == p.weight()).collect()
}

fn exists(cands: Vec<Partition>, mut f: impl FnMut(&Partition) -> Result<i64>) -> Result<bool> {
    for c in cands {
        if f(&c)? != 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

fn alpha_of(nu: &Partition, lambda: &Partition, mu: &Partition) -> Result<i64> {
    if !nu.contains(lambda) {
        return Ok(0);
    }
    alpha_skew(&SkewShape::new(nu.clone(), lambda.clone())?, mu)
}

fn paths(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(3));
    let mut n = 0;
    for l in &ps {
        for m in &ps {
            let base = l.weight() + m.weight();
            for (nu, _) in multiply(&g(l), &g(m))?.terms() {
                if nu.weight() == base {
                    continue;
                }
                n += 1;
                fail_if!(n, !exists(remove_box(nu), |t| c_coeff(l, m, t))?, "(i) at {} {} {}", l, m, nu);
                fail_if!(n, !exists(add_box(m), |t| c_coeff(l, t, nu))?, "(ii) at {} {} {}", l, m, nu);
            }
            for nu in superpartitions(&l.union(m), base) {
                if nu.weight() == base || d_coeff(l, m, &nu)? == 0 {
                    continue;
                }
                n += 1;
                fail_if!(n, !exists(add_box(&nu), |t| d_coeff(l, m, t))?, "(iii) at {} {} {}", l, m, nu);
                fail_if!(n, !exists(remove_box(m), |t| d_coeff(l, t, &nu))?, "(iv) at {} {} {}", l, m, nu);
            }
        }
    }
    for s in skew_shapes_in_box(3, 3) {
        let (nu, lambda) = (s.outer(), s.inner());
        for (mu, _) in skew_expansion(&s)?.terms() {
            if mu.weight() == s.size() {
                continue;
            }
            n += 1;
            fail_if!(n, !exists(remove_box(mu), |t| alpha_of(nu, lambda, t))?, "(v) at {} {}", s, mu);
            fail_if!(n, !exists(add_box(nu), |t| alpha_of(t, lambda, mu))?, "(vi) at {} {}", s, mu);
            fail_if!(n, !exists(remove_box(lambda), |t| alpha_of(nu, t, mu))?, "(vii) at {} {}", s, mu);
        }
    }
    Ok(Verdict::Pass(n))
}

fn containment(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(3));
    let mut n = 0;
    for l in &ps {
        for m in &ps {
            let hull = partitions_of(l.weight() + m.weight())
                .into_iter()
                .filter(|r| classical_lr(l, m, r) != 0)
                .fold(Partition::empty(), |acc, r| acc.union(&r));
            for (nu, _) in multiply(&g(l), &g(m))?.terms() {
                n += 1;
                fail_if!(n, !hull.contains(nu), "{} in G{}·G{} outside {}", nu, l, m, hull);
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn multiplicity_free(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(4));
    let mut n = 0;
    for (i, l) in ps.iter().enumerate() {
        for m in &ps[i..] {
            let free = multiply(&g(l), &g(m))?.terms().all(|(_, c)| c.abs() == 1);
            let predicted =
                (l.is_rectangle() && m.is_rectangle()) || l.weight() <= 1 || m.weight() <= 1;
            n += 1;
            fail_if!(n, free != predicted, "G{}·G{}: multiplicity free {}, predicted {}", l, m, free, predicted);
        }
    }
    Ok(Verdict::Pass(n))
}

fn classical(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(4));
    let mut n = 0;
    for l in &ps {
        for m in &ps {
            for nu in partitions_of(l.weight() + m.weight()) {
                n += 1;
                let c = c_coeff(l, m, &nu)?;
                let lr = classical_lr(l, m, &nu) as i64;
                fail_if!(n, c != lr, "c^{}_{},{} = {}, classical {}", nu, l, m, c, lr);
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn pieri(b: &Bounds) -> Result<Verdict> {
    let w = b.weight(4);
    let mut n = 0;
    for l in partitions_up_to(w) {
        for len in 1..=3 {
            let column = Partition::new(vec![1; len])?;
            n += 1;
            fail_if!(n, pieri_product(&l, len)? != multiply(&g(&column), &g(&l))?, "λ = {}, ℓ = {}", l, len);
        }
        for m in partitions_up_to(w) {
            for k in 0..=3 {
                let row = if k == 0 { Partition::empty() } else { Partition::new(vec![k])? };
                n += 1;
                let closed = pieri_coproduct(&l, &m, k)?;
                let general = d_coeff(&m, &row, &l)?;
                fail_if!(n, closed != general, "d^{}_{},({}) = {} vs {}", l, m, k, closed, general);
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn rectangle_coproduct(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for p in 1..=3 {
        for q in 1..=3 {
            let r = Partition::rectangle(p, q);
            let full: BTreeSet<(usize, usize)> = r.boxes().collect();
            let mut rule = TensorElement::zero();
            for a in subpartitions(&r) {
                let ab: BTreeSet<_> = a.boxes().collect();
                for bb in subpartitions(&r) {
                    let hat: BTreeSet<_> = bb.boxes().map(|(i, j)| (p - 1 - i, q - 1 - j)).collect();
                    let inter: Vec<_> = ab.intersection(&hat).collect();
                    let rows: BTreeSet<_> = inter.iter().map(|x| x.0).collect();
                    let cols: BTreeSet<_> = inter.iter().map(|x| x.1).collect();
                    let covers = ab.union(&hat).count() == full.len();
                    if covers && rows.len() == inter.len() && cols.len() == inter.len() {
                        let e = (a.weight() + bb.weight()) as isize - r.weight() as isize;
                        rule.add_term((a.clone(), bb.clone()), sign(e))?;
                    }
                }
            }
            n += 1;
            fail_if!(n, *basis_coproduct(&r)? != rule, "ΔG_{}", r);
        }
    }
    Ok(Verdict::Pass(n))
}

/// `G_{R1} G_{R2} = Σ d^R_{λμ} G_{ρ+λ,μ}` with `R = R1 ∩ R2`, `ρ = R1 ∪ R2`;
/// `λ` extends the first rows of `ρ` to the right and `μ` hangs below `ρ`.
fn two_rectangles(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    let rects: Vec<Partition> = (1..=3).flat_map(|r| (1..=3).map(move |c| Partition::rectangle(r, c))).collect();
    for r1 in &rects {
        for r2 in &rects {
            let (inter, rho) = (r1.intersection(r2), r1.union(r2));
            let mut rule = GammaElement::zero();
            for (l, m, d) in basis_coproduct(&inter)?.terms() {
                let mut parts: Vec<usize> = (0..rho.len()).map(|i| rho.part(i) + l.part(i)).collect();
                parts.extend(m.parts());
                rule.add_term(Partition::new(parts)?, d)?;
            }
            n += 1;
            fail_if!(n, multiply(&g(r1), &g(r2))? != rule, "G{}·G{}", r1, r2);
        }
    }
    Ok(Verdict::Pass(n))
}

/// `t·G_R = G_1 G_λ − G_{λ+(1)} − G_{λ,(1)} + G_{λ+(1),(1)}` with `λ` the
/// rectangle minus its corner.
fn t_rectangle(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for p in 2..=3 {
        for q in 2..=3 {
            let r = Partition::rectangle(p, q);
            let mut parts = vec![q; p];
            parts[p - 1] = q - 1;
            let lambda = Partition::new(parts.clone())?;
            let mut wide = parts.clone();
            wide[0] += 1;
            let wide = Partition::new(wide)?;
            let tall = Partition::new([parts.clone(), vec![1]].concat())?;
            let both = Partition::new([wide.parts().to_vec(), vec![1]].concat())?;
            let rhs = multiply(&g(&Partition::new(vec![1])?), &g(&lambda))?
                .sub(&g(&wide))?
                .sub(&g(&tall))?
                .add(&g(&both))?;
            n += 1;
            fail_if!(n, multiply(&GammaElement::t(), &g(&r))? != rhs, "R = {}", r);
        }
    }
    Ok(Verdict::Pass(n))
}

fn phi_homomorphism(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(3));
    let mut n = 0;
    for l in &ps {
        for m in &ps {
            let prod = multiply(&g(l), &g(m))?;
            for p in 0..=3 {
                n += 1;
                let rhs = multiply(&phi_p(&g(l), p)?, &phi_p(&g(m), p)?)?;
                fail_if!(n, phi_p(&prod, p)? != rhs, "φ_{} on {} {}", p, l, m);
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn multi_coefficients(b: &Bounds) -> Result<Verdict> {
    let w = b.weight(3);
    let mut n = 0;
    for nu in partitions_up_to(w) {
        let s = SkewShape::straight(nu.clone());
        for l in partitions_up_to(w) {
            n += 1;
            fail_if!(n, multi_coeff(&s, std::slice::from_ref(&l))? != alpha_skew(&s, &l)?, "one block at {} {}", nu, l);
            for m in partitions_up_to(w) {
                n += 1;
                let a = multi_coeff(&s, &[l.clone(), m.clone()])?;
                fail_if!(n, a != d_coeff(&l, &m, &nu)?, "two blocks at {} {} {}", nu, l, m);
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn t_inverse(b: &Bounds) -> Result<Verdict> {
    let cap = b.weight(4) + 1;
    let mut n = 0;
    for l in partitions_up_to(cap) {
        let back = t_inverse_mult(&multiply_truncated(&GammaElement::t(), &g(&l), cap)?, cap)?;
        n += 1;
        fail_if!(n, back.element != g(&l), "λ = {}", l);
    }
    Ok(Verdict::Pass(n))
}

fn antipode_identity(b: &Bounds) -> Result<Verdict> {
    let cap = 5;
    let s_t = antipode(&GammaElement::t(), cap)?.element;
    let expected = GammaElement::from_terms(partitions_up_to(cap).into_iter().map(|p| (p, 1)))?;
    let mut n = 1;
    fail_if!(n, s_t != expected, "S(t) = {}", s_t);
    for nu in partitions_up_to(b.weight(3)) {
        let mut total = GammaElement::zero();
        for l in subpartitions(&nu) {
            let s = antipode(&g(&l), cap)?.element;
            total = total.add(&multiply_truncated(&s, &sslash_element(&nu, &l)?, cap)?)?;
        }
        let unit = if nu.is_empty() { GammaElement::one() } else { GammaElement::zero() };
        n += 1;
        fail_if!(n, total.truncate(cap) != unit, "recursion at {} leaves {}", nu, total);
    }
    Ok(Verdict::Pass(n))
}
