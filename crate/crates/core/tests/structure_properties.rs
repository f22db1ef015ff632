mod common;

use std::sync::Arc;

use proptest::prelude::*;

use liecoh::exactlin::{int, Scalar};
use liecoh::liealg::{catalog, direct_sum, semidirect_product, LieAlgebra};
use liecoh::repmod::{sl2_irreducible, Representation};
use liecoh::Error;

use common::catalog_algebras;

#[test]
fn catalog_invariants() {
    for (name, l) in catalog_algebras() {
        assert!(l.validate().is_ok(), "{name}");
        let f = l.structure_flags();
        assert!(l.is_ideal(&f.derived), "{name}");
        assert!(l.is_ideal(&f.radical), "{name}");
        assert!(l.is_ideal(&f.center), "{name}");
        // radical is solvable: its derived series reaches zero
        assert!(
            l.derived_series_of(&f.radical).last().unwrap().is_zero(),
            "{name}"
        );
        assert_eq!(f.semisimple, f.radical.is_zero(), "{name}");
        assert!(!f.nilpotent || f.solvable, "{name}");
        assert!(!f.abelian || f.nilpotent, "{name}");
        assert_eq!(f.abelian, f.derived.is_zero(), "{name}");
        // L / Rad(L) is semisimple
        let q = l.quotient(&f.radical).unwrap();
        assert!(q.algebra.is_semisimple() || q.algebra.dim() == 0, "{name}");
    }
}

#[test]
fn expected_flags() {
    let expect = [
        ("heis3", true, true, false, true, true),
        ("aff1", false, true, false, false, false),
        ("sl2", false, false, true, true, true),
        ("sl2_plus_heis3", false, false, false, true, true),
        ("sl2_semidirect_v1", false, false, false, true, false),
        ("nonunimod3", false, true, false, false, false),
        ("unimod3(0,1,-1)", false, true, false, true, false),
    ];
    for (name, nil, sol, ss, unimod, split) in expect {
        let l = catalog(name).unwrap();
        assert_eq!(l.is_nilpotent(), nil, "{name}");
        assert_eq!(l.is_solvable(), sol, "{name}");
        assert_eq!(l.is_semisimple(), ss, "{name}");
        assert_eq!(l.is_unimodular(), unimod, "{name}");
        assert_eq!(l.is_ss_plus_nilpotent().holds, split, "{name}");
    }
}

#[test]
fn killing_form_of_sl2() {
    let k = catalog("sl2").unwrap().killing_form();
    let expected = [[8, 0, 0], [0, 0, 4], [0, 4, 0]];
    for (i, row) in expected.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            assert_eq!(k[(i, j)], int(x));
        }
    }
}

#[test]
fn unknown_catalog_name() {
    assert!(matches!(catalog("gl7"), Err(Error::Lookup(_))));
    assert!(matches!(
        catalog("unimod3(0,0,0)"),
        Err(Error::Constraint(_))
    ));
}

#[test]
fn zero_dimensional_algebra_predicates() {
    let l = LieAlgebra::abelian(0);
    assert!(l.is_abelian() && l.is_nilpotent() && l.is_solvable());
    assert!(l.is_semisimple() && l.is_perfect() && l.is_unimodular());
    assert!(l.is_ss_plus_nilpotent().holds);
}

#[test]
fn semidirect_products_of_sl2() {
    for m in 1..=3 {
        let l = semidirect_product(&sl2_irreducible(m)).unwrap();
        assert_eq!(l.dim(), 3 + m + 1);
        assert!(l.validate().is_ok());
        assert_eq!(l.radical().dim(), m + 1);
        assert!(l.is_perfect());
        assert!(!l.is_ss_plus_nilpotent().holds);
    }
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3).prop_map(int)
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(small_scalar(), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_antisymmetric_and_jacobi(x in vector(6), y in vector(6), z in vector(6)) {
        let l = catalog("sl2_plus_heis3").unwrap();
        let xy = l.bracket(&x, &y).unwrap();
        let yx = l.bracket(&y, &x).unwrap();
        prop_assert!(xy.iter().zip(&yx).all(|(a, b)| a == &-b));
        let j1 = l.bracket(&xy, &z).unwrap();
        let j2 = l.bracket(&l.bracket(&y, &z).unwrap(), &x).unwrap();
        let j3 = l.bracket(&l.bracket(&z, &x).unwrap(), &y).unwrap();
        prop_assert!((0..6).all(|i| (&j1[i] + &j2[i] + &j3[i]) == int(0)));
    }

    #[test]
    fn ad_is_a_representation(x in vector(5), y in vector(5)) {
        let l = catalog("sl2_semidirect_v1").unwrap();
        let lhs = l.ad(&l.bracket(&x, &y).unwrap()).unwrap();
        let rhs = l.ad(&x).unwrap().commutator(&l.ad(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn direct_sum_flags(i in 0usize..6, j in 0usize..6) {
        let names = ["abelian_2", "heis3", "aff1", "sl2", "so3", "nonunimod3"];
        let a = catalog(names[i]).unwrap();
        let b = catalog(names[j]).unwrap();
        let s = direct_sum(&a, &b);
        prop_assert!(s.validate().is_ok());
        prop_assert_eq!(s.is_unimodular(), a.is_unimodular() && b.is_unimodular());
        prop_assert_eq!(s.is_nilpotent(), a.is_nilpotent() && b.is_nilpotent());
        prop_assert_eq!(s.is_solvable(), a.is_solvable() && b.is_solvable());
        prop_assert_eq!(s.center().dim(), a.center().dim() + b.center().dim());
        prop_assert_eq!(s.radical().dim(), a.radical().dim() + b.radical().dim());
    }

    #[test]
    fn center_is_killed_by_ad(v in vector(3)) {
        let l = Arc::new(catalog("heis3").unwrap());
        let adj = Representation::adjoint(l.clone());
        let in_center = l.center().contains(&v);
        let killed = (0..3).all(|i| adj.action()[i].apply(&v).unwrap().iter().all(|x| *x == int(0)));
        prop_assert_eq!(in_center, killed);
    }
}
