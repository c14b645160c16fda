use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::{fail_if, Bounds, CheckFn, Verdict};
use crate::error::Result;
use crate::insertion::{factorize, multiply_box, multiply_column, Column, MarkedProduct};
use crate::oracle::plactic_equivalent;
use crate::shapes::*;
use crate::tableaux::{enumerate, is_lattice, superstandard, Constraints, EntrySet, Interval, SetValuedTableau};

pub(super) fn shapes() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("conjugation is an involution", conjugate_involution),
        ("rectangle complement is an involution", rotate_involution),
        ("skew permutations are 321-avoiding of length |s|", skew_permutations),
        ("Grassmannian permutations match straight shapes", grassmannian_matches_skew),
        ("shifting the diagonal prepends a fixed point", diagonal_shift),
    ]
}

fn conjugate_involution(b: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for l in partitions_up_to(b.weight(10)) {
        n += 1;
        fail_if!(n, l.conjugate().conjugate() != l, "λ = {}", l);
    }
    Ok(Verdict::Pass(n))
}

fn rotate_involution(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for rows in 1..=4 {
        for cols in 1..=4 {
            for l in partitions_in_box(rows, cols) {
                n += 1;
                let back = l.rotate180_in_rect(rows, cols)?.rotate180_in_rect(rows, cols)?;
                fail_if!(n, back != l, "λ = {} in {}x{}", l, rows, cols);
            }
        }
    }
    Ok(Verdict::Pass(n))
}

fn skew_permutations(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for s in skew_shapes_in_box(4, 4) {
        for offset in 1..=3 {
            let w = skew_to_permutation(&s, offset)?;
            n += 1;
            fail_if!(n, !w.is_321_avoiding() || w.length() != s.size(), "{} at offset {} gives {}", s, offset, w);
        }
    }
    Ok(Verdict::Pass(n))
}

fn grassmannian_matches_skew(b: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for l in partitions_up_to(b.weight(6)) {
        for p in l.len().max(1)..=5 {
            // upper-left box on diagonal p puts the bottom-left one on p − ℓ + 1
            let offset = p + 1 - l.len().max(1);
            let a = grassmannian_permutation(&l, p)?;
            let s = skew_to_permutation(&SkewShape::straight(l.clone()), offset)?;
            n += 1;
            fail_if!(n, a != s, "λ = {}, p = {}: {} vs {}", l, p, a, s);
        }
    }
    Ok(Verdict::Pass(n))
}

fn diagonal_shift(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for s in skew_shapes_in_box(4, 4) {
        for offset in 1..=3 {
            let a = skew_to_permutation(&s, offset + 1)?;
            let b = skew_to_permutation(&s, offset)?.shift(1);
            n += 1;
            fail_if!(n, a != b, "{} at offset {}", s, offset);
        }
    }
    Ok(Verdict::Pass(n))
}

pub(super) fn tableaux() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("enumerated tableaux are valid and distinct", enumeration_valid),
        ("reverse lattice words match the single-interval condition", lattice_interval),
        ("lattice words are closed under suffixes", lattice_suffixes),
        ("the superstandard tableau is the only lattice filling", superstandard_unique),
    ]
}

fn enumeration_valid(b: &Bounds) -> Result<Verdict> {
    let m = b.entry(3);
    let mut n = 0;
    for s in skew_shapes_in_box(3, 3) {
        let mut seen = HashSet::new();
        for t in enumerate(&s, m, &Constraints::none())? {
            n += 1;
            fail_if!(n, !t.validate(), "invalid tableau {} of shape {}", t, s);
            fail_if!(n, !seen.insert(t.clone()), "duplicate tableau {} of shape {}", t, s);
        }
    }
    Ok(Verdict::Pass(n))
}

fn words(max_len: usize, alphabet: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .into_iter()
            .flat_map(|w: Vec<u32>| (1..=alphabet).map(move |a| [w.clone(), vec![a]].concat()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn reverse_lattice(w: &[u32]) -> bool {
    (0..=w.len()).all(|k| {
        let suffix = &w[k..];
        let count = |a: u32| suffix.iter().filter(|&&x| x == a).count();
        (1..=3).all(|p| count(p) >= count(p + 1))
    })
}

fn lattice_interval(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for w in words(6, 3) {
        n += 1;
        let top = w.iter().copied().max().unwrap_or(1);
        let direct = reverse_lattice(&w);
        fail_if!(n, is_lattice(&w, &[Interval::new(1, top)]) != direct, "word {:?}", w);
        fail_if!(n, is_lattice(&w, &[Interval::unbounded()]) != direct, "word {:?} (unbounded)", w);
    }
    Ok(Verdict::Pass(n))
}

fn lattice_suffixes(_: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    let iv = [Interval::unbounded()];
    for w in words(6, 3) {
        if is_lattice(&w, &iv) {
            n += 1;
            fail_if!(n, (0..w.len()).any(|k| !is_lattice(&w[k..], &iv)), "word {:?}", w);
        }
    }
    Ok(Verdict::Pass(n))
}

fn superstandard_unique(b: &Bounds) -> Result<Verdict> {
    let mut n = 0;
    for nu in partitions_up_to(b.weight(6)) {
        let size = nu.weight();
        let c = Constraints::none().with_lattice(vec![Interval::unbounded()]).with_max_entries(size);
        let found = enumerate(&SkewShape::straight(nu.clone()), size.max(1) as u32, &c)?;
        n += 1;
        fail_if!(n, found != vec![superstandard(&nu)], "ν = {}: {} lattice fillings", nu, found.len());
    }
    Ok(Verdict::Pass(n))
}

pub(super) fn insertion() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("box products grow by a rook strip", box_growth),
        ("column products grow by a vertical strip", column_growth),
        ("column products are a bijection onto marked tableaux", bijection),
        ("column words multiply in the local plactic algebra", plactic_words),
    ]
}

fn straight_tableaux(max_weight: usize, m: u32) -> Result<Vec<SetValuedTableau>> {
    let mut out = Vec::new();
    for l in partitions_up_to(max_weight) {
        out.extend(enumerate(&SkewShape::straight(l), m, &Constraints::none())?);
    }
    Ok(out)
}

pub(crate) fn columns(max_len: usize, m: u32) -> Vec<Column> {
    fn extend(cur: &mut Column, max_len: usize, m: u32, out: &mut Vec<Column>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        let floor = cur.last().map_or(0, |b| b.max().unwrap());
        for s in EntrySet::all_nonempty(m) {
            if s.min().unwrap() > floor {
                cur.push(s);
                extend(cur, max_len, m, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_len, m, &mut out);
    out
}

fn growth(before: &SetValuedTableau, after: &SetValuedTableau) -> Result<SkewShape> {
    SkewShape::new(after.shape().outer().clone(), before.shape().outer().clone())
}

fn box_growth(b: &Bounds) -> Result<Verdict> {
    let m = b.entry(3);
    let mut n = 0;
    for t in straight_tableaux(b.weight(3), m)? {
        for x in EntrySet::all_nonempty(m) {
            let p = multiply_box(x, &t)?;
            n += 1;
            fail_if!(n, !p.validate(), "{} · {} = {} is not a tableau", x, t, p);
            let theta = growth(&t, &p)?;
            fail_if!(n, theta.is_empty() || !theta.strip_kind().rook, "{} · {} grows by {}", x, t, theta);
        }
    }
    Ok(Verdict::Pass(n))
}

fn column_growth(b: &Bounds) -> Result<Verdict> {
    let m = b.entry(3);
    let mut n = 0;
    let cols = columns(2, m);
    for t in straight_tableaux(b.weight(3), m)? {
        for c in &cols {
            let MarkedProduct { tableau, marks } = multiply_column(c, &t)?;
            n += 1;
            fail_if!(n, !tableau.validate(), "{:?} · {} = {} is not a tableau", c, t, tableau);
            let theta = growth(&t, &tableau)?;
            fail_if!(n, !theta.strip_kind().vertical, "{:?} · {} grows by {}", c, t, theta);
            fail_if!(n, theta.size() != c.len() + marks.len(), "{:?} · {}: {} boxes, {} marks", c, t, theta.size(), marks.len());
        }
    }
    Ok(Verdict::Pass(n))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn bijection(b: &Bounds) -> Result<Verdict> {
    let m = b.entry(3);
    let max_len = 2;
    let cols = columns(max_len, m);
    let all = |sh: &Partition| enumerate(&SkewShape::straight(sh.clone()), m, &Constraints::none());
    let mut n = 0;
    for lambda in partitions_up_to(b.weight(3)) {
        let mut image = HashSet::new();
        let mut tally: BTreeMap<(Partition, usize), usize> = BTreeMap::new();
        for t in all(&lambda)? {
            for c in &cols {
                let MarkedProduct { tableau, marks } = multiply_column(c, &t)?;
                n += 1;
                let (bc, bt) = factorize(&tableau, &lambda, &marks)?;
                fail_if!(n, bc != *c || bt != t, "{:?} · {} does not factor back", c, t);
                let shape = tableau.shape().outer().clone();
                fail_if!(n, !image.insert((tableau, marks)), "{:?} · {} collides", c, t);
                *tally.entry((shape, c.len())).or_default() += 1;
            }
        }
        let mut admissible = 0;
        for nu in superpartitions(&lambda, lambda.weight() + m as usize) {
            let theta = SkewShape::new(nu.clone(), lambda.clone())?;
            if theta.is_empty() || !theta.strip_kind().vertical {
                continue;
            }
            let ncols = theta.boxes().map(|(_, c)| c).collect::<BTreeSet<_>>().len();
            let count = all(&nu)?.len();
            for l in 1..=max_len.min(theta.size()) {
                let expect = binomial(ncols - 1, theta.size() - l) * count;
                let got = tally.get(&(nu.clone(), l)).copied().unwrap_or(0);
                fail_if!(n, got != expect, "λ = {}, ν = {}, ℓ = {}: {} products, expected {}", lambda, nu, l, got, expect);
                admissible += expect;
            }
        }
        fail_if!(n, admissible != image.len(), "λ = {}: image has {} elements, expected {}", lambda, image.len(), admissible);
    }
    Ok(Verdict::Pass(n))
}

fn plactic_words(b: &Bounds) -> Result<Verdict> {
    let m = b.entry(3);
    let mut n = 0;
    for t in straight_tableaux(b.weight(3), m)? {
        for c in columns(2, m) {
            let cw = SetValuedTableau::from_columns(std::slice::from_ref(&c))?.column_word();
            let tw = t.column_word();
            if cw.len() + tw.len() > 8 {
                continue;
            }
            let product = multiply_column(&c, &t)?.tableau.column_word();
            let joined = [cw, tw].concat();
            n += 1;
            match plactic_equivalent(&product, &joined, 100_000) {
                Some(true) => {}
                Some(false) => fail_if!(n, true, "{:?} · {}: {:?} vs {:?}", c, t, product, joined),
                None => fail_if!(n, true, "{:?} · {}: search budget exhausted", c, t),
            }
        }
    }
    Ok(Verdict::Pass(n))
}
