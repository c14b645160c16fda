use super::{fail_if, Bounds, CheckFn, Verdict};
use crate::error::Result;
use crate::gamma::{basis_product, c_coeff, multiply, GammaElement};
use crate::grassmann::*;
use crate::oracle::{alpha_w, divided_difference_grothendieck, grothendieck_basis_expand};
use crate::shapes::*;

pub(super) fn grassmann() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("reduction is a ring map", quotient),
        ("Schubert duality", duality),
        ("triple intersections are symmetric", symmetry),
        ("triple intersections agree with products", forms),
        ("triple intersections are nonnegative", nonnegative),
    ]
}

pub(super) fn conjectures() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("signs of α_w", alpha_signs),
        ("signs of Grothendieck structure constants", schubert_signs),
        ("saturation with factor 2", saturation),
    ]
}

fn contexts(max_n: usize) -> Vec<GrassmannContext> {
    (2..=max_n).flat_map(|n| (1..n).filter_map(move |d| GrassmannContext::new(d, n).ok())).collect()
}

fn quotient(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(4));
    let mut n = 0;
    for ctx in contexts(6) {
        for l in &ps {
            for m in &ps {
                let g = |p: &Partition| GammaElement::basis(p.clone());
                let lhs = reduce(&multiply(&g(l), &g(m))?, &ctx);
                let rhs = k_multiply(&reduce(&g(l), &ctx), &reduce(&g(m), &ctx))?;
                n += 1;
                fail_if!(n, lhs != rhs, "{} {} in {}", l, m, ctx);
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn duality(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for ctx in contexts(6) {
        let idx = ctx.schubert_indices();
        for l in &idx {
            for m in &idx {
                let fast = dual_pairing(l, m, &ctx)?;
                let direct = dual_pairing_direct(l, m, &ctx)?;
                let expected = i64::from(ctx.dual(l)? == *m);
                n += 1;
                fail_if!(n, fast != expected || direct != expected, "{} {} in {}: {} {}", l, m, ctx, fast, direct);
                fail_if!(n, rectangle_coeff(l, m, &ctx)? != c_coeff(l, m, ctx.rectangle())?, "{} {} in {}", l, m, ctx);
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn symmetry(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for ctx in contexts(5) {
        let idx = ctx.schubert_indices();
        for a in &idx {
            for bb in &idx {
                for c in &idx {
                    let v = triple_intersection(a, bb, c, &ctx)?;
                    for (x, y, z) in [(a, c, bb), (bb, a, c), (bb, c, a), (c, a, bb), (c, bb, a)] {
                        n += 1;
                        fail_if!(n, triple_intersection(x, y, z, &ctx)? != v, "{} {} {} in {}", a, bb, c, ctx);
                    }
                }
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn forms(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for ctx in contexts(5) {
        let idx = ctx.schubert_indices();
        for a in &idx {
            for bb in &idx {
                let ab = k_multiply(&KClass::schubert(&ctx, a)?, &KClass::schubert(&ctx, bb)?)?;
                for c in &idx {
                    let v = triple_intersection(a, bb, c, &ctx)?;
                    let direct = pushforward(&k_multiply(&ab, &KClass::schubert(&ctx, c)?)?)?;
                    n += 1;
                    fail_if!(n, v != direct, "{} {} {} in {}: {} vs {}", a, bb, c, ctx, v, direct);
                    fail_if!(n, v != triple_intersection_dual_form(a, bb, c, &ctx)?, "dual form at {} {} {} in {}", a, bb, c, ctx);
                }
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn nonnegative(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for ctx in contexts(6) {
        let idx = ctx.schubert_indices();
        for a in &idx {
            for bb in &idx {
                for c in &idx {
                    let v = triple_intersection(a, bb, c, &ctx)?;
                    n += 1;
                    fail_if!(n, v < 0, "{} {} {} in {} gives {}", a, bb, c, ctx, v);
                }
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn alpha_signs(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for rank in 2..=4 {
        for w in all_permutations(rank) {
            for (l, c) in alpha_w(&w, 7)?.element.terms() {
                n += 1;
                let odd = (l.weight() + w.length()) % 2 == 1;
                fail_if!(n, (c < 0) != odd, "α_{},{} = {}", w, l, c);
            }
        }
    }
    Ok(Verdict::Pass(n))
}

/// Expands `𝔊_u 𝔊_v` for `u, v ∈ S_n` inside `S_{2n−1}`, where every
/// product of two staircase monomials of `S_n` fits.
fn schubert_signs(b: &Bounds) -> Result<Verdict> {
    let rank = b.weight(4).clamp(2, 4);
    let big = 2 * rank - 1;
    let perms = all_permutations(rank);
    let (mut n, mut bad) = (0, Vec::new());
    for (i, u) in perms.iter().enumerate() {
        let gu = divided_difference_grothendieck(u, big)?;
        for v in &perms[i..] {
            let prod = gu.mul(&divided_difference_grothendieck(v, big)?)?;
            for (w, c) in grothendieck_basis_expand(&prod, big)? {
                n += 1;
                let odd = (u.length() + v.length() + w.length()) % 2 == 1;
                if c != 0 && (c < 0) != odd {
                    bad.push(format!("c^{}_{},{} = {}", w, u, v, c));
                }
            }
        }
    }
    let summary = if bad.is_empty() {
        format!("all {} coefficients for S_{} have the predicted sign", n, rank)
    } else {
        format!("{} sign violations for S_{}, first {}", bad.len(), rank, bad[0])
    };
    Ok(Verdict::Report(n, summary))
}

fn saturation(b: &Bounds) -> Result<Verdict> {
    let ps = partitions_up_to(b.weight(3));
    let (mut n, mut bad) = (0, Vec::new());
    for (i, l) in ps.iter().enumerate() {
        for m in &ps[i..] {
            for (nu2, c) in basis_product(&l.scale(2), &m.scale(2), None)?.terms() {
                if c == 0 || nu2.parts().iter().any(|x| x % 2 == 1) {
                    continue;
                }
                let nu = Partition::new(nu2.parts().iter().map(|x| x / 2).collect())?;
                n += 1;
                if c_coeff(l, m, &nu)? == 0 {
                    bad.push(format!("c^{}_{},{} = 0 but c^{}_{},{} = {}", nu, l, m, nu2, l.scale(2), m.scale(2), c));
                }
            }
        }
    }
    let summary = if bad.is_empty() {
        format!("no counterexample among {} doubled triples", n)
    } else {
        format!("{} counterexamples, first {}", bad.len(), bad[0])
    };
    Ok(Verdict::Report(n, summary))
}
