use std::sync::OnceLock;

use kdecomp_core::classify::{is_k_irreducible, is_k_irreducible_by_pairs};
use kdecomp_core::decompose::primary_decomposition;
use kdecomp_core::enumerate::{enumerate, EnumerateOptions};
use kdecomp_core::ideal::{all_ideals, all_k_ideals, generated_ideal};
use kdecomp_core::natpoly::{poly_add, poly_mul, principal_membership, yoked_pair_check, NatPoly};
use kdecomp_core::{catalog, srs, ElemSet, FiniteSemiring};
use proptest::prelude::*;

fn census() -> &'static [FiniteSemiring] {
    static CENSUS: OnceLock<Vec<FiniteSemiring>> = OnceLock::new();
    CENSUS.get_or_init(|| {
        (2..=4)
            .flat_map(|n| enumerate(n, EnumerateOptions::default()).unwrap())
            .collect()
    })
}

/// A product of two census members: orders 4 to 16.
fn product() -> impl Strategy<Value = FiniteSemiring> {
    let n = census().len();
    (0..n, 0..n).prop_map(|(a, b)| catalog::product(&census()[a], &census()[b]))
}

/// A product of two census members of order at most 3: orders 4 to 9.
fn small_product() -> impl Strategy<Value = FiniteSemiring> {
    let n = census().iter().filter(|s| s.order() <= 3).count();
    (0..n, 0..n).prop_map(|(a, b)| catalog::product(&census()[a], &census()[b]))
}

fn poly() -> impl Strategy<Value = NatPoly> {
    prop::collection::vec(0u64..=9, 0..=7).prop_map(NatPoly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn single_cell_corruption_never_panics(idx in 0..census().len(), table in 0..2usize, cell in 0..256usize, value in 0..20usize) {
        let s = &census()[idx];
        let n = s.order();
        let (mut add, mut mul) = (s.add_rows(), s.mul_rows());
        let t = if table == 0 { &mut add } else { &mut mul };
        let (r, c) = ((cell / n) % n, cell % n);
        t[r][c] = value;
        if let Ok(v) = FiniteSemiring::validate("fuzz", &add, &mul) {
            // accepted tables must round-trip through the text format
            prop_assert_eq!(srs::parse(&srs::write(&v)).unwrap(), v);
        }
    }

    #[test]
    fn closure_operators_on_products(s in product(), gens in any::<u16>()) {
        let gens = ElemSet::from_bits(gens).intersection(s.all());
        let i = generated_ideal(&s, gens);
        let c = i.k_closure().unwrap();
        prop_assert!(i.is_subset(&c));
        prop_assert_eq!(c.k_closure().unwrap(), c);
        let r = i.radical();
        prop_assert!(i.is_subset(&r));
        prop_assert_eq!(r.radical(), r);
        for x in s.elems() {
            prop_assert!(i.is_subset(&i.colon(x)));
        }
    }

    #[test]
    fn irreducibility_tests_agree_on_products(s in small_product()) {
        for k in all_k_ideals(&s).iter().filter(|k| k.is_proper()) {
            prop_assert_eq!(is_k_irreducible(k).unwrap(), is_k_irreducible_by_pairs(k).unwrap());
        }
    }

    #[test]
    fn decompositions_intersect_back(s in small_product()) {
        for k in all_k_ideals(&s).iter().filter(|k| k.is_proper()) {
            if let Ok(d) = primary_decomposition(k) {
                let meet = d.components.iter().fold(s.all(), |acc, c| acc.intersection(c.members()));
                prop_assert_eq!(meet, k.members());
            }
        }
    }

    #[test]
    fn ideal_meets_and_joins(idx in 0..census().len()) {
        let s = &census()[idx];
        let ideals = all_ideals(s);
        for i in &ideals {
            for j in &ideals {
                prop_assert!(i.intersection(j).unwrap().members().is_subset(i.members()));
                let sum = i.sum(j).unwrap();
                prop_assert!(i.is_subset(&sum) && j.is_subset(&sum));
            }
        }
    }

    #[test]
    fn membership_recovers_cofactor(f in poly(), g in poly()) {
        prop_assume!(!g.is_zero());
        let h = principal_membership(&poly_mul(&f, &g), &g).unwrap();
        prop_assert_eq!(h, Some(f));
    }

    #[test]
    fn membership_is_exact(f in poly(), g in poly()) {
        prop_assume!(!g.is_zero());
        if let Some(h) = principal_membership(&f, &g).unwrap() {
            prop_assert_eq!(poly_mul(&g, &h), f);
        }
    }

    #[test]
    fn yoked_iff_dominated(f in poly(), g in poly()) {
        let h = yoked_pair_check(&f, &g);
        prop_assert_eq!(h.is_some(), f.dominates(&g) || g.dominates(&f));
        if let Some(h) = h {
            prop_assert!(poly_add(&f, &h) == g || poly_add(&g, &h) == f);
        }
    }

    #[test]
    fn semiring_laws_in_nx(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(poly_mul(&f, &poly_add(&g, &h)), poly_add(&poly_mul(&f, &g), &poly_mul(&f, &h)));
        prop_assert_eq!(poly_mul(&f, &g), poly_mul(&g, &f));
    }
}

#[test]
fn exhaustive_small_membership_sweep() {
    // every f, g of degree <= 2 with coefficients <= 3
    let polys: Vec<NatPoly> = (0..64u64)
        .map(|code| NatPoly::new((0..3).map(|k| code >> (2 * k) & 3).collect()))
        .collect();
    for f in &polys {
        for g in polys.iter().filter(|g| !g.is_zero()) {
            assert_eq!(principal_membership(&poly_mul(f, g), g).unwrap().as_ref(), Some(f));
        }
    }
}
