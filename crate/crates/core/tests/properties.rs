use kgamma::gamma::{basis_product, conjugate_element, multiply, GammaElement};
use kgamma::insertion::{factorize, multiply_column, Column};
use kgamma::oracle::{svt_polynomial, TruncatedPolynomial};
use kgamma::shapes::{all_permutations, skew_to_permutation, Partition, Permutation, SkewShape};
use kgamma::tableaux::{enumerate, Constraints, EntrySet};
use proptest::prelude::*;

fn partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn small(max_weight: usize) -> impl Strategy<Value = Partition> {
    partition(max_weight, max_weight).prop_filter("weight bound", move |p| p.weight() <= max_weight)
}

fn column(max_len: usize, max_entry: u32) -> impl Strategy<Value = Column> {
    prop::collection::btree_set(1..=max_entry, 1..=max_len).prop_flat_map(|cuts| {
        // split a sorted set of entries into consecutive nonempty boxes
        let xs: Vec<u32> = cuts.into_iter().collect();
        let n = xs.len();
        prop::collection::vec(any::<bool>(), n.saturating_sub(1)).prop_map(move |breaks| {
            let mut col: Column = Vec::new();
            let mut cur = EntrySet::singleton(xs[0]);
            for (i, &x) in xs.iter().enumerate().skip(1) {
                if breaks[i - 1] {
                    col.push(cur);
                    cur = EntrySet::singleton(x);
                } else {
                    cur.insert(x);
                }
            }
            col.push(cur);
            col
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(l in partition(6, 6)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().weight(), l.weight());
        let (r, c) = (l.len(), l.first());
        prop_assert_eq!(l.rotate180_in_rect(r, c).unwrap().rotate180_in_rect(r, c).unwrap(), l);
    }

    #[test]
    fn products_commute_and_respect_conjugation(l in small(3), m in small(3)) {
        let (gl, gm) = (GammaElement::basis(l.clone()), GammaElement::basis(m.clone()));
        let prod = multiply(&gl, &gm).unwrap();
        prop_assert_eq!(&prod, &multiply(&gm, &gl).unwrap());
        let conj = multiply(&GammaElement::basis(l.conjugate()), &GammaElement::basis(m.conjugate())).unwrap();
        prop_assert_eq!(conjugate_element(&prod).unwrap(), conj);
    }

    #[test]
    fn polynomial_products_expand(l in small(3), m in small(2)) {
        let (p, cap) = (3, 7);
        let svt = |x: &Partition| svt_polynomial(&SkewShape::straight(x.clone()), p, cap).unwrap();
        let mut rhs = TruncatedPolynomial::zero(p, 0, cap);
        for (nu, c) in basis_product(&l, &m, Some(cap)).unwrap().terms() {
            rhs = rhs.add(&svt(nu).scale(c).unwrap()).unwrap();
        }
        prop_assert_eq!(svt(&l).mul(&svt(&m)).unwrap(), rhs);
    }

    #[test]
    fn column_products_factor_back(lambda in small(4), pick in any::<usize>(), c in column(3, 4)) {
        let all = enumerate(&SkewShape::straight(lambda.clone()), 4, &Constraints::none()).unwrap();
        prop_assume!(!all.is_empty());
        let t = &all[pick % all.len()];
        let prod = multiply_column(&c, t).unwrap();
        let (back_c, back_t) = factorize(&prod.tableau, &lambda, &prod.marks).unwrap();
        prop_assert_eq!(back_c, c.clone());
        prop_assert_eq!(&back_t, t);
        let total = |cols: &[EntrySet]| cols.iter().map(|s| s.len()).sum::<usize>();
        prop_assert_eq!(prod.tableau.entry_count(), t.entry_count() + total(&c));
    }

    #[test]
    fn codes_round_trip(rank in 1usize..=6, pick in any::<usize>()) {
        let perms = all_permutations(rank);
        let w = &perms[pick % perms.len()];
        prop_assert_eq!(&Permutation::from_code(&w.code()).unwrap(), w);
        prop_assert_eq!(w.code().iter().sum::<usize>(), w.length());
    }

    #[test]
    fn skew_permutations_avoid_321(outer in partition(4, 4), inner in partition(4, 4)) {
        prop_assume!(outer.contains(&inner));
        let s = SkewShape::new(outer, inner).unwrap();
        let w = skew_to_permutation(&s, 1).unwrap();
        prop_assert!(w.is_321_avoiding());
        prop_assert_eq!(w.length(), s.size());
    }
}
