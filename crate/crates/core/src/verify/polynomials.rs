use super::{fail_if, Bounds, CheckFn, Verdict};
use crate::error::Result;
use crate::gamma::{basis_product, skew_expansion, GammaElement};
use crate::oracle::*;
use crate::shapes::*;
use crate::tableaux::{is_lattice, Content, Interval};

const EXACT: usize = TruncatedPolynomial::EXACT;

pub(super) fn oracle() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("tableau sums, Hecke products and stable limits agree", three_way),
        ("x and y Hecke products are conjugate", hecke_conjugation),
        ("products of polynomials", polynomial_products),
        ("skew polynomials expand by α", skew_polynomials),
        ("splitting the variables", variable_splitting),
        ("cutting a skew shape", cut_shape),
        ("cutting a double polynomial", cut_partition),
        ("double polynomials vanish outside the hook", vanishing),
        ("factorization through a rectangle", factorization),
        ("setting x1 = 1 drops the first row", specialization),
        ("expansion of G_w", alpha_expansion),
        ("staircase monomials round trip", staircase_basis),
        ("lattice words are plactic to the highest word", plactic_lattice),
    ]
}

fn svt(l: &Partition, p: usize, cap: usize) -> Result<TruncatedPolynomial> {
    svt_polynomial(&SkewShape::straight(l.clone()), p, cap)
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn three_way(b: &Bounds) -> Result<Verdict> {
    let side = b.weight(3).min(4);
    let (p, cap) = (3, 8);
    let mut n = 0;
    for s in skew_shapes_in_box(side, side) {
        let w = skew_to_permutation(&s, 1)?;
        let a = svt_polynomial(&s, p, cap)?;
        n += 1;
        fail_if!(n, a != hecke_grothendieck(&w, p, HeckeSide::X, cap)?, "Hecke product of {} for {}", w, s);
        fail_if!(n, a != stable_limit(&w, p, cap)?, "stable limit of {} for {}", w, s);
    }
    for w in all_permutations(4) {
        n += 1;
        let h = hecke_grothendieck(&w, p, HeckeSide::X, cap)?;
        fail_if!(n, h != stable_limit(&w, p, cap)?, "w = {}", w);
    }
    Ok(Verdict::Pass(n))
}

fn hecke_conjugation(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for rank in 2..=4 {
        for w in all_permutations(rank) {
            let c = w.conjugate_by_longest(rank)?;
            let x = hecke_grothendieck(&c, 3, HeckeSide::X, 9)?;
            let y = hecke_grothendieck(&w, 3, HeckeSide::Y, 9)?;
            n += 1;
            fail_if!(n, x.x_to_y() != y, "w = {} in S_{}", w, rank);
        }
    }
    Ok(Verdict::Pass(n))
}

fn polynomial_products(b: &Bounds) -> Result<Verdict> {
    let (p, cap) = (4, 8);
    let ps = partitions_up_to(b.weight(3));
    let mut n = 0;
    for l in &ps {
        for m in &ps {
            let lhs = svt(l, p, cap)?.mul(&svt(m, p, cap)?)?;
            let mut rhs = TruncatedPolynomial::zero(p, 0, cap);
            for (nu, c) in basis_product(l, m, Some(cap))?.terms() {
                rhs = rhs.add(&svt(nu, p, cap)?.scale(c)?)?;
            }
            n += 1;
            fail_if!(n, lhs != rhs, "G{}·G{} in {} variables", l, m, p);
        }
    }
    Ok(Verdict::Pass(n))
}

fn skew_polynomials(_: &Bounds) -> Result<Verdict> {
    let (p, cap) = (3, 7);
    let mut n = 0;
    for s in skew_shapes_in_box(3, 3) {
        let found = expand_in_stable_basis(&svt_polynomial(&s, p, cap)?, p, cap)?.coefficients;
        let expected = GammaElement::from_terms(
            skew_expansion(&s)?
                .terms()
                .filter(|(mu, _)| mu.weight() <= cap && mu.len() <= p)
                .map(|(mu, c)| (mu.clone(), c)),
        )?;
        n += 1;
        fail_if!(n, found != expected, "{}: {} vs {}", s, found, expected);
    }
    Ok(Verdict::Pass(n))
}

fn variable_splitting(_: &Bounds) -> Result<Verdict> {
    let cap = 7;
    let mut n = 0;
    for s in skew_shapes_in_box(3, 3) {
        let (nu, lambda) = (s.outer(), s.inner());
        let between: Vec<Partition> = subpartitions(nu).into_iter().filter(|x| x.contains(lambda)).collect();
        for (p, q) in [(1, 1), (1, 2), (2, 1)] {
            let lhs = svt_polynomial(&s, p + q, cap)?;
            let mut rhs = TruncatedPolynomial::zero(p + q, 0, cap);
            for sigma in &between {
                for tau in between.iter().filter(|t| t.contains(sigma)) {
                    let strip = SkewShape::new(tau.clone(), sigma.clone())?;
                    if !strip.strip_kind().rook {
                        continue;
                    }
                    let low = svt_polynomial(&SkewShape::new(tau.clone(), lambda.clone())?, p, cap)?.widen(p + q, 0);
                    let high = svt_polynomial(&SkewShape::new(nu.clone(), sigma.clone())?, q, cap)?.embed_x(p, p + q);
                    rhs = rhs.add(&low.mul(&high)?.scale(sign(strip.size()))?)?;
                }
            }
            n += 1;
            fail_if!(n, lhs != rhs, "{} with {} + {} variables", s, p, q);
        }
    }
    Ok(Verdict::Pass(n))
}

fn cut_shape(_: &Bounds) -> Result<Verdict> {
    let cap = 9;
    let mut n = 0;
    for s in skew_shapes_in_box(4, 4) {
        for c in 1..s.outer().first() {
            let (left, right) = s.split_at_column(c);
            let top = right.column_rows(0).min();
            let bottom = left.column_rows(c - 1).max();
            let (Some(top), Some(bottom)) = (top, bottom) else { continue };
            if bottom < top {
                continue;
            }
            let p = bottom - top + 1;
            let lhs = svt_polynomial(&s, p, cap)?;
            let rhs = svt_polynomial(&left, p, cap)?.mul(&svt_polynomial(&right, p, cap)?)?;
            n += 1;
            fail_if!(n, lhs != rhs, "{} cut after column {} with {} variables", s, c, p);
        }
    }
    Ok(Verdict::Pass(n))
}

fn first_columns(nu: &Partition, q: usize) -> Result<(Partition, Partition)> {
    let left = Partition::new(nu.parts().iter().map(|&x| x.min(q)).collect())?;
    let right = Partition::new(nu.parts().iter().map(|&x| x.saturating_sub(q)).collect())?;
    Ok((left, right))
}

fn cut_partition(_: &Bounds) -> Result<Verdict> {
    let cap = 9;
    let mut n = 0;
    for nu in partitions_in_box(3, 4) {
        for q in 1..nu.first() {
            let (lambda, mu) = first_columns(&nu, q)?;
            let p = lambda.conjugate().part(q - 1);
            let lhs = double_g(&nu, p, q, cap)?;
            let rhs = double_g(&lambda, p, q, cap)?.mul(&svt(&mu, p, cap)?.widen(p, q))?;
            n += 1;
            fail_if!(n, lhs != rhs, "ν = {} cut after column {}", nu, q);
        }
    }
    Ok(Verdict::Pass(n))
}

fn vanishing(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for nu in partitions_in_box(4, 4) {
        for p in 1..=2 {
            for q in 1..=2 {
                if nu.part(p) > q {
                    n += 1;
                    fail_if!(n, !double_g(&nu, p, q, 10)?.is_zero(), "ν = {}, p = {}, q = {}", nu, p, q);
                }
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn factorization(_: &Bounds) -> Result<Verdict> {
    let cap = 10;
    let mut n = 0;
    for p in 1..=2 {
        for q in 1..=2 {
            let r = Partition::rectangle(p, q);
            let gr = double_g(&r, p, q, cap)?;
            for sigma in partitions_up_to(2).into_iter().filter(|s| s.len() <= p) {
                for tau in partitions_up_to(2).into_iter().filter(|t| t.first() <= q) {
                    let mut parts: Vec<usize> = (0..p).map(|i| q + sigma.part(i)).collect();
                    parts.extend(tau.parts());
                    let glued = Partition::new(parts)?;
                    let gy = svt(&tau.conjugate(), q, cap)?.x_to_y().widen(p, q);
                    let rhs = gy.mul(&gr)?.mul(&svt(&sigma, p, cap)?.widen(p, q))?;
                    n += 1;
                    fail_if!(n, double_g(&glued, p, q, cap)? != rhs, "R = {}, σ = {}, τ = {}", r, sigma, tau);
                }
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn specialization(b: &Bounds) -> Result<Verdict> {
    let p = 3;
    let mut n = 0;
    for l in partitions_up_to(b.weight(5)) {
        let lhs = svt(&l, p, EXACT)?.specialize_x(1, 1)?;
        n += 1;
        fail_if!(n, lhs != svt(&l.drop_rows(1), p - 1, EXACT)?, "λ = {}", l);
    }
    Ok(Verdict::Pass(n))
}

fn alpha_expansion(_: &Bounds) -> Result<Verdict> {
    let cap = 7;
    let mut n = 0;
    for w in all_permutations(4) {
        let a = alpha_w(&w, cap)?.element;
        for (l, c) in a.terms() {
            n += 1;
            fail_if!(n, sign(l.weight() + w.length()) * c < 0, "α_{},{} = {}", w, l, c);
        }
        let p = 3;
        let stable = expand_in_stable_basis(&stable_limit(&w, p, cap)?, p, cap)?.coefficients;
        n += 1;
        fail_if!(n, stable != a, "{}: {} vs {}", w, a, stable);
    }
    Ok(Verdict::Pass(n))
}

fn codes(n: usize) -> Vec<Vec<usize>> {
    (0..n).fold(vec![vec![]], |acc, j| {
        acc.into_iter()
            .flat_map(|c| (0..n - j).map(move |k| [c.clone(), vec![k]].concat()))
            .collect()
    })
}

fn staircase_basis(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for rank in 2..=4 {
        for code in codes(rank) {
            let mut mono = TruncatedPolynomial::one(rank, 0, EXACT);
            for (j, &k) in code.iter().enumerate() {
                for _ in 0..k {
                    mono = mono.mul(&TruncatedPolynomial::x(j + 1, rank, 0, EXACT))?;
                }
            }
            let mut back = TruncatedPolynomial::zero(rank, 0, EXACT);
            for (w, c) in grothendieck_basis_expand(&mono, rank)? {
                back = back.add(&divided_difference_grothendieck(&w, rank)?.restrict_x(rank).scale(c)?)?;
            }
            n += 1;
            fail_if!(n, back != mono, "x^{:?} in S_{}", code, rank);
        }
    }
    Ok(Verdict::Pass(n))
}

fn plactic_lattice(b: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    let mut words: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..b.weight(6) {
        words = words.into_iter().flat_map(|w| (1..=3).map(move |a| [w.clone(), vec![a]].concat())).collect();
        for w in &words {
            let Some(nu) = Content::of_word(w).as_partition() else { continue };
            let mut highest = Vec::new();
            for (i, &c) in nu.parts().iter().enumerate().rev() {
                highest.extend(std::iter::repeat(i as u32 + 1).take(c));
            }
            let lattice = is_lattice(w, &[Interval::unbounded()]);
            n += 1;
            let found = plactic_equivalent(w, &highest, 100_000);
            fail_if!(n, found != Some(lattice), "{:?}: plactic {:?}, lattice {}", w, found, lattice);
        }
    }
    Ok(Verdict::Pass(n))
}
