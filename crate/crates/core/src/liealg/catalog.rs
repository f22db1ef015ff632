use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{format_rational, int, parse_rational, Scalar};
use crate::repmod::{sl2_irreducible, Representation};

fn names(s: &str) -> Vec<String> {
    s.split(',').map(str::to_owned).collect()
}

fn build(basis: &str, entries: &[(usize, usize, usize, i64)]) -> LieAlgebra {
    let l = LieAlgebra::new(
        names(basis),
        entries.iter().map(|&(i, j, k, c)| (i, j, k, int(c))),
    )
    .expect("catalog entries are well-formed");
    debug_assert!(l.validate().is_ok());
    l
}

/// `L1 ⊕ L2` with basis `L1` then `L2`; both summands are ideals.
///
/// Clashing basis names get a `'` suffix on the second summand.
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
    let shift = a.dim();
    let mut basis: Vec<String> = a.names().to_vec();
    for n in b.names() {
        let mut n = n.clone();
        while basis.contains(&n) {
            n.push('\'');
        }
        basis.push(n);
    }
    let entries = a
        .brackets()
        .flat_map(|((i, j), t)| t.iter().map(move |(k, c)| (i, j, *k, c.clone())))
        .chain(b.brackets().flat_map(|((i, j), t)| {
            t.iter()
                .map(move |(k, c)| (i + shift, j + shift, k + shift, c.clone()))
        }))
        .collect::<Vec<_>>();
    LieAlgebra::new(basis, entries).expect("direct sum of well-formed algebras")
}

/// `S ⋉ V` for a representation of `S` on the abelian algebra `V`:
/// `[s, v] = ρ(s) v`, `[v, v'] = 0`. Basis is `S` then `v0, v1, ...`.
pub fn semidirect_product(act: &Representation) -> Result<LieAlgebra> {
    act.validate().map_err(Error::Homomorphism)?;
    let s = act.algebra();
    let shift = s.dim();
    let mut basis: Vec<String> = s.names().to_vec();
    for a in 0..act.dim() {
        let mut n = format!("v{a}");
        while basis.contains(&n) {
            n.push('\'');
        }
        basis.push(n);
    }
    let mut entries: Vec<(usize, usize, usize, Scalar)> = s
        .brackets()
        .flat_map(|((i, j), t)| t.iter().map(move |(k, c)| (i, j, *k, c.clone())))
        .collect();
    for (i, rho) in act.action().iter().enumerate() {
        for a in 0..act.dim() {
            for b in 0..act.dim() {
                entries.push((i, shift + a, shift + b, rho[(b, a)].clone()));
            }
        }
    }
    LieAlgebra::new(basis, entries)
}

/// Solvable unimodular algebra on `x, y, z` with `[x,y] = 0`,
/// `[x,z] = a x + b y`, `[y,z] = c x - a y`. Requires `a² + bc ≠ 0`.
pub fn unimodular_3dim(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<LieAlgebra> {
    if (a * a + b * c) == int(0) {
        return Err(Error::Constraint(format!(
            "a^2 + bc = 0 for (a, b, c) = ({}, {}, {})",
            format_rational(a),
            format_rational(b),
            format_rational(c)
        )));
    }
    let l = LieAlgebra::new(
        names("x,y,z"),
        [
            (0, 2, 0, a.clone()),
            (0, 2, 1, b.clone()),
            (1, 2, 0, c.clone()),
            (1, 2, 1, -a),
        ],
    )?;
    debug_assert!(l.validate().is_ok());
    Ok(l)
}

/// Names accepted by [`catalog`], with representative parameters for the
/// parametrized families.
pub const CATALOG_NAMES: &[&str] = &[
    "abelian_1",
    "abelian_2",
    "abelian_3",
    "heis3",
    "aff1",
    "sl2",
    "so3",
    "sl2_plus_heis3",
    "sl2_semidirect_v1",
    "sl2_semidirect_v2",
    "unimod3(1,0,0)",
    "unimod3(0,1,1)",
    "unimod3(0,1,-1)",
    "unimod3(1,1,1)",
    "nonunimod3",
];

/// Looks up a named algebra.
///
/// `abelian_<n>` takes any `n`; `unimod3(a,b,c)` takes rational literals.
pub fn catalog(name: &str) -> Result<LieAlgebra> {
    let name = name.trim();
    if let Some(n) = name.strip_prefix("abelian_") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::Lookup(format!("bad abelian dimension in {name:?}")))?;
        return Ok(LieAlgebra::abelian(n));
    }
    if let Some(args) = name
        .strip_prefix("unimod3(")
        .and_then(|r| r.strip_suffix(')'))
    {
        let params: Vec<Scalar> = args
            .split(',')
            .map(|p| parse_rational(p.trim()))
            .collect::<Result<_>>()?;
        let [a, b, c] = params.as_slice() else {
            return Err(Error::Lookup(format!(
                "unimod3 takes three parameters: {name:?}"
            )));
        };
        return unimodular_3dim(a, b, c);
    }
    let l = match name {
        "heis3" => build("x,y,z", &[(0, 1, 2, 1)]),
        "aff1" => build("x,y", &[(0, 1, 1, 1)]),
        "sl2" => build("h,e,f", &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]),
        "so3" => build("x,y,z", &[(0, 1, 2, 1), (1, 2, 0, 1), (0, 2, 1, -1)]),
        "nonunimod3" => build("x,y,z", &[(0, 2, 0, 1), (1, 2, 1, 1)]),
        "sl2_plus_heis3" => direct_sum(&catalog("sl2")?, &catalog("heis3")?),
        "sl2_semidirect_v1" => semidirect_product(&sl2_irreducible(1))?,
        "sl2_semidirect_v2" => semidirect_product(&sl2_irreducible(2))?,
        _ => return Err(Error::Lookup(format!("no catalog algebra named {name:?}"))),
    };
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::frac;
    use crate::liealg::Subspace;
    use crate::repmod::Representation;
    use proptest::prelude::*;

    #[test]
    fn every_catalog_entry_validates() {
        for name in CATALOG_NAMES {
            let l = catalog(name).unwrap();
            assert!(l.validate().is_ok(), "{name}");
            let k = l.killing_form();
            assert_eq!(k, k.transpose(), "{name}");
        }
    }

    #[test]
    fn sl2_table() {
        let l = catalog("sl2").unwrap();
        assert_eq!(l.dim(), 3);
        assert_eq!(l.bracket_basis(0, 1), vec![int(0), int(2), int(0)]);
        assert_eq!(l.bracket_basis(0, 2), vec![int(0), int(0), int(-2)]);
        assert_eq!(l.bracket_basis(1, 2), vec![int(1), int(0), int(0)]);
    }

    #[test]
    fn nonunimod3_is_not_unimodular() {
        let l = catalog("nonunimod3").unwrap();
        // ad z sends x -> [z,x] = -x and y -> -y
        assert_eq!(l.ad_traces(), vec![int(0), int(0), int(-2)]);
        assert!(!l.is_unimodular() && l.is_solvable());
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(catalog("e8"), Err(Error::Lookup(_))));
        assert!(matches!(catalog("unimod3(1,2)"), Err(Error::Lookup(_))));
    }

    #[test]
    fn unimodular_family_members() {
        let l = catalog("unimod3(1,0,0)").unwrap();
        assert_eq!(l.bracket_basis(0, 2), vec![int(1), int(0), int(0)]);
        assert_eq!(l.bracket_basis(1, 2), vec![int(0), int(-1), int(0)]);
        assert!(l.is_unimodular() && l.is_solvable() && !l.is_nilpotent());
        let l = catalog("unimod3(0,1,1)").unwrap();
        assert_eq!(l.bracket_basis(0, 2), vec![int(0), int(1), int(0)]);
        assert_eq!(l.bracket_basis(1, 2), vec![int(1), int(0), int(0)]);
        assert!(l.is_unimodular());
        let e = unimodular_3dim(&int(0), &int(1), &int(0)).unwrap_err();
        assert!(matches!(e, Error::Constraint(_)));
    }

    #[test]
    fn ad_examples() {
        let heis = catalog("heis3").unwrap();
        let ad_x = heis.ad_basis(0);
        assert_eq!(ad_x[(2, 1)], int(1));
        assert_eq!(ad_x.entries().iter().filter(|c| **c != int(0)).count(), 1);
        assert_eq!(ad_x.trace().unwrap(), int(0));
        let aff = catalog("aff1").unwrap();
        assert_eq!(aff.ad_basis(0).trace().unwrap(), int(1));
        assert!(catalog("abelian_4").unwrap().ad_basis(2).is_zero());
    }

    #[test]
    fn direct_sums() {
        let a = direct_sum(&LieAlgebra::abelian(1), &LieAlgebra::abelian(1));
        assert!(a.same_structure(&LieAlgebra::abelian(2)));
        let names: Vec<_> = a.names().to_vec();
        assert_eq!(names, vec!["e0".to_string(), "e0'".to_string()]);
    }

    #[test]
    fn semidirect_with_trivial_action_is_direct_sum() {
        let s = std::sync::Arc::new(catalog("sl2").unwrap());
        let triv = Representation::trivial(s.clone(), 2);
        let semi = semidirect_product(&triv).unwrap();
        assert!(semi.same_structure(&direct_sum(&s, &LieAlgebra::abelian(2))));
    }

    #[test]
    fn semidirect_sl2_v1() {
        let l = catalog("sl2_semidirect_v1").unwrap();
        assert_eq!(l.dim(), 5);
        let f = l.structure_flags();
        let v_part = Subspace::span(5, (3..5).map(|i| crate::liealg::subspace::unit(5, i)));
        assert_eq!(f.radical, v_part);
        assert!(!l.is_ss_plus_nilpotent().holds);
    }

    #[test]
    fn rational_parameters() {
        let l = catalog("unimod3(1/2, -3, 2/3)").unwrap();
        assert_eq!(l.bracket_basis(0, 2), vec![frac(1, 2), int(-3), int(0)]);
        assert!(l.validate().is_ok());
    }

    fn param() -> impl Strategy<Value = Scalar> {
        (-4i64..=4, 1i64..=3).prop_map(|(p, q)| frac(p, q))
    }

    proptest! {
        #[test]
        fn unimodular_family_is_valid(a in param(), b in param(), c in param()) {
            prop_assume!(&a * &a + &b * &c != int(0));
            let l = unimodular_3dim(&a, &b, &c).unwrap();
            prop_assert!(l.validate().is_ok());
            prop_assert!(l.is_unimodular());
            prop_assert!(l.is_solvable());
            prop_assert!(!l.is_nilpotent());
        }

        #[test]
        fn unimodularity_of_direct_sums(i in 0..CATALOG_NAMES.len(), j in 0..CATALOG_NAMES.len()) {
            let a = catalog(CATALOG_NAMES[i]).unwrap();
            let b = catalog(CATALOG_NAMES[j]).unwrap();
            let s = direct_sum(&a, &b);
            prop_assert_eq!(s.is_unimodular(), a.is_unimodular() && b.is_unimodular());
        }
    }
}
