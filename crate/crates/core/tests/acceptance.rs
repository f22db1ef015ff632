//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::sync::Arc;

use num_traits::Zero;

use liecoh::cohomology::{
    cohomology_dims, convolve, dixmier_vanishing_check, h1_trivial_coeffs_perfectness,
    verify_additivity, verify_hazewinkel, verify_kunneth, CochainComplex, CohomologyOptions,
};
use liecoh::exactlin::{int, Matrix, Scalar};
use liecoh::liealg::{catalog, unimodular_3dim, LieAlgebra, Subspace};
use liecoh::repmod::{
    sl2_irreducible, sl2_irreducible_on, IrreducibilityConfig, Representation, TwistSign,
};
use liecoh::theorem::{
    check_conditions, five_term_check, splitting_h2_check, verify_corollary, ModuleFamily,
    SplittingReport,
};

use common::{catalog_algebras, constructed_modules, oracle};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn opts() -> CohomologyOptions {
    CohomologyOptions::default()
}

fn cfg() -> IrreducibilityConfig {
    IrreducibilityConfig::default()
}

fn alg(name: &str) -> Arc<LieAlgebra> {
    Arc::new(catalog(name).unwrap())
}

fn dims(v: &Representation) -> Result<Vec<usize>, String> {
    cohomology_dims(v, &opts())
        .map(|r| r.dims)
        .map_err(|e| e.to_string())
}

fn sl2_trivial() -> Check {
    let k = Representation::trivial(alg("sl2"), 1);
    let got = dims(&k)?;
    ensure(got == vec![1, 0, 0, 1], || format!("dims {got:?}"))?;
    ensure(oracle(&k) == got, || format!("oracle {:?}", oracle(&k)))
}

fn sl2_irreducibles_vanish() -> Check {
    for m in 1..=4 {
        let v = sl2_irreducible(m);
        let got = dims(&v)?;
        ensure(got.iter().all(|&h| h == 0), || {
            format!("V({m}) dims {got:?}")
        })?;
        ensure(oracle(&v) == got, || {
            format!("V({m}) oracle {:?}", oracle(&v))
        })?;
    }
    Ok(())
}

fn hazewinkel_grid() -> Check {
    for name in [
        "sl2",
        "heis3",
        "aff1",
        "nonunimod3",
        "unimod3(1,0,0)",
        "sl2_plus_heis3",
    ] {
        let l = alg(name);
        let family = ModuleFamily::default_for(l.clone(), &cfg()).map_err(|e| e.to_string())?;
        let modules = std::iter::once(Representation::trivial(l.clone(), 1))
            .chain(family.members().iter().map(|m| m.module.clone()));
        for v in modules {
            let r = verify_hazewinkel(&v, &opts()).map_err(|e| e.to_string())?;
            ensure(r.passes(), || {
                format!("{name} / {}: {:?}", v.label(), r.degrees)
            })?;
        }
    }
    Ok(())
}

fn kunneth_cases() -> Check {
    let sl2 = alg("sl2");
    let heis = alg("heis3");
    let a1 = alg("abelian_1");
    // Heisenberg trivial cohomology from the oracle, not the library
    let heis_k = Representation::trivial(heis.clone(), 1);
    let heis_vec = oracle(&heis_k);
    ensure(heis_vec == vec![1, 2, 2, 1], || {
        format!("heis3 oracle {heis_vec:?}")
    })?;
    let expected = convolve(&[1, 0, 0, 1], &heis_vec);
    let pairs = [
        (Representation::trivial(sl2.clone(), 1), heis_k.clone()),
        (
            sl2_irreducible(2),
            Representation::character(heis.clone(), &[int(1), int(0), int(0)])
                .map_err(|e| e.to_string())?,
        ),
        (
            Representation::trivial(a1.clone(), 1),
            Representation::trivial(a1.clone(), 1),
        ),
    ];
    for (i, (v, w)) in pairs.iter().enumerate() {
        let r = verify_kunneth(v, w, &opts()).map_err(|e| e.to_string())?;
        ensure(r.passes(), || format!("pair {i}: {:?}", r.degrees))?;
        if i == 0 {
            let direct: Vec<usize> = r.degrees.iter().map(|d| d.lhs).collect();
            ensure(direct == expected, || {
                format!("direct {direct:?} vs {expected:?}")
            })?;
        }
    }
    Ok(())
}

fn dixmier() -> Check {
    let heis = alg("heis3");
    for lambda in [[1, 0, 0], [0, 1, 0]] {
        let chi =
            Representation::character(heis.clone(), &lambda.map(int)).map_err(|e| e.to_string())?;
        let r = dixmier_vanishing_check(&chi, &opts()).map_err(|e| e.to_string())?;
        ensure(r.passed, || format!("{lambda:?}: {:?}", r.report.dims))?;
        ensure(oracle(&chi).iter().all(|&h| h == 0), || {
            format!("{lambda:?}: oracle nonzero")
        })?;
    }
    Ok(())
}

fn theorem_positive() -> Check {
    let l = alg("sl2_plus_heis3");
    let family = ModuleFamily::default_for(l.clone(), &cfg()).map_err(|e| e.to_string())?;
    let v = check_conditions(&l, &family, &opts()).map_err(|e| e.to_string())?;
    ensure(v.condition_i, || "condition (i) false".into())?;
    ensure(v.witnesses.is_empty(), || {
        format!("witnesses {:?}", v.witnesses)
    })?;
    ensure(v.consistent, || "inconsistent".into())
}

fn theorem_negative() -> Check {
    // aff1: the character x -> 1
    let aff = alg("aff1");
    let family = ModuleFamily::default_for(aff.clone(), &cfg()).map_err(|e| e.to_string())?;
    let v = check_conditions(&aff, &family, &opts()).map_err(|e| e.to_string())?;
    ensure(!v.condition_i && v.consistent, || "aff1 verdict".into())?;
    let target = Representation::character(aff.clone(), &[int(1), int(0)]).unwrap();
    let hit = v
        .witnesses
        .iter()
        .find(|w| family.members()[w.member].module == target && w.degree == 1)
        .ok_or("aff1: no witness at chi(1,0) in degree 1")?;
    ensure(hit.dim == 1, || format!("aff1 dim {}", hit.dim))?;
    ensure(oracle(&target)[1] == 1, || "aff1 oracle H^1".into())?;

    // sl2 ⋉ Q^2: V(1) lifted from the Levi quotient
    let l = alg("sl2_semidirect_v1");
    let radical = l.radical();
    let q = Arc::new(l.quotient(&radical).unwrap().algebra);
    let lifted = Representation::lift_through_quotient(
        l.clone(),
        &radical,
        &sl2_irreducible_on(q, 1).unwrap(),
    )
    .map_err(|e| e.to_string())?;
    let family = ModuleFamily::default_for(l.clone(), &cfg()).map_err(|e| e.to_string())?;
    let v = check_conditions(&l, &family, &opts()).map_err(|e| e.to_string())?;
    ensure(!v.condition_i && v.consistent, || {
        "sl2 x| Q^2 verdict".into()
    })?;
    let hit = v
        .witnesses
        .iter()
        .find(|w| family.members()[w.member].module == lifted && w.degree == 1)
        .ok_or("sl2 x| Q^2: no witness at lifted V(1)")?;
    ensure(hit.dim == 1, || format!("sl2 x| Q^2 dim {}", hit.dim))?;
    explicit_cocycle(&lifted)
}

/// `phi(s + v) = v` is a cocycle and not a coboundary.
fn explicit_cocycle(v: &Representation) -> Check {
    let l = v.algebra();
    let n = l.dim();
    // basis h, e, f, v0, v1; module basis matches v0, v1
    let phi = |i: usize| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); 2];
        if i >= 3 {
            out[i - 3] = int(1);
        }
        out
    };
    let phi_vec = |x: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); 2];
        for (i, c) in x.iter().enumerate() {
            for (o, p) in out.iter_mut().zip(phi(i)) {
                *o += c * p;
            }
        }
        out
    };
    for i in 0..n {
        for j in 0..n {
            let lhs = phi_vec(&l.bracket_basis(i, j));
            let xi = v.action()[i].apply(&phi(j)).unwrap();
            let xj = v.action()[j].apply(&phi(i)).unwrap();
            let rhs: Vec<Scalar> = xi.iter().zip(&xj).map(|(a, b)| a - b).collect();
            ensure(lhs == rhs, || {
                format!("cocycle identity fails at ({i}, {j})")
            })?;
        }
    }
    // coboundaries x -> x.w; stack the equations x_i.w = phi(x_i)
    let blocks: Vec<Matrix> = v.action().to_vec();
    let a = Matrix::vstack(2, &blocks).unwrap();
    let target: Vec<Scalar> = (0..n).flat_map(phi).collect();
    let mut augmented_cols: Vec<Vec<Scalar>> = (0..2).map(|c| a.column(c)).collect();
    augmented_cols.push(target);
    let aug = Matrix::from_columns(2 * n, &augmented_cols).unwrap();
    ensure(aug.rank() > a.rank(), || "cocycle is a coboundary".into())
}

fn corollary_dim3() -> Check {
    for a in -1..=1i64 {
        for b in -1..=1i64 {
            for c in -1..=1i64 {
                if a * a + b * c == 0 {
                    continue;
                }
                let l = Arc::new(
                    unimodular_3dim(&int(a), &int(b), &int(c)).map_err(|e| e.to_string())?,
                );
                let family =
                    ModuleFamily::default_for(l.clone(), &cfg()).map_err(|e| e.to_string())?;
                let r = verify_corollary(&l, &family, &opts()).map_err(|e| e.to_string())?;
                ensure(r.vanishing_on_family, || {
                    format!("({a},{b},{c}): {:?}", r.witnesses)
                })?;
                ensure(
                    r.vanishing_on_family == l.is_unimodular() && r.agree,
                    || format!("({a},{b},{c}) disagrees"),
                )?;
            }
        }
    }
    let l = alg("nonunimod3");
    let k_tw = Representation::trivial(l.clone(), 1).twist(TwistSign::Plus);
    let h3 = dims(&k_tw)?[3];
    let h0_trivial = Representation::trivial(l.clone(), 1).invariants().dim();
    ensure(h3 == 1 && h3 == h0_trivial, || {
        format!("nonunimod3 H^3(K^-tw) = {h3}")
    })?;
    let family = ModuleFamily::default_for(l.clone(), &cfg()).map_err(|e| e.to_string())?;
    let r = verify_corollary(&l, &family, &opts()).map_err(|e| e.to_string())?;
    ensure(
        !r.vanishing_on_family && !l.is_unimodular() && r.agree,
        || "nonunimod3 verdict".into(),
    )
}

fn property_suites() -> Check {
    for (name, l) in catalog_algebras() {
        let modules = constructed_modules(&l);
        for v in &modules {
            let tag = || format!("{name} / {}", v.label());
            let complex = CochainComplex::new(v, &opts()).map_err(|e| e.to_string())?;
            for k in 1..complex.coboundaries().len() {
                let dd = complex
                    .coboundary(k)
                    .product(complex.coboundary(k - 1))
                    .unwrap();
                ensure(dd.is_zero(), || format!("{}: d d != 0 at {k}", tag()))?;
            }
            let r = complex.cohomology(&opts());
            ensure(r.dims[0] == v.invariants().dim(), || {
                format!("{}: H^0", tag())
            })?;
            ensure(l.dim() == 0 || r.euler_characteristic() == 0, || {
                format!("{}: euler", tag())
            })?;
            let cfg = cfg();
            let status = v.is_irreducible(&cfg).map_err(|e| e.to_string())?;
            if status.is_decided() {
                for other in [
                    v.dual(),
                    v.twist(TwistSign::Plus),
                    v.twist(TwistSign::Minus),
                ] {
                    let s = other.is_irreducible(&cfg).map_err(|e| e.to_string())?;
                    ensure(
                        !s.is_decided() || s.is_irreducible() == status.is_irreducible(),
                        || format!("{}: irreducibility changed under dual/twist", tag()),
                    )?;
                }
            }
        }
        for pair in modules.windows(2).take(3) {
            let r = verify_additivity(&pair[0], &pair[1], &opts()).map_err(|e| e.to_string())?;
            ensure(r.passes(), || format!("{name}: additivity {:?}", r.degrees))?;
        }
        let adj = Representation::adjoint(l.clone());
        ensure(adj.invariants() == l.center(), || {
            format!("{name}: adjoint invariants")
        })?;
        let perfect = h1_trivial_coeffs_perfectness(&l, &opts()).map_err(|e| e.to_string())?;
        ensure(perfect == l.is_perfect(), || {
            format!("{name}: H^1(L,K) vs perfect")
        })?;
    }
    Ok(())
}

fn five_term_and_splitting() -> Check {
    let l = alg("sl2_semidirect_v1");
    let radical = l.radical();
    let q = Arc::new(l.quotient(&radical).unwrap().algebra);
    let r = five_term_check(&l, &radical, &sl2_irreducible_on(q, 2).unwrap(), &opts())
        .map_err(|e| e.to_string())?;
    ensure(r.holds(), || format!("sl2 x| Q^2: {r:?}"))?;

    let heis = alg("heis3");
    let zero = Subspace::zero(3);
    let adj = Representation::adjoint(heis.clone());
    let r = five_term_check(&heis, &zero, &adj, &opts()).map_err(|e| e.to_string())?;
    ensure(r.holds() && r.quotient_h1 == r.lifted_h1, || {
        format!("I = 0: {r:?}")
    })?;

    let center = heis.center();
    let q = Arc::new(heis.quotient(&center).unwrap().algebra);
    let chi = Representation::character(q, &[int(1), int(0)]).unwrap();
    let r = five_term_check(&heis, &center, &chi, &opts()).map_err(|e| e.to_string())?;
    ensure(r.holds(), || format!("heis3 / center: {r:?}"))?;

    for name in ["sl2_semidirect_v1", "sl2_semidirect_v2"] {
        match splitting_h2_check(&alg(name), &opts(), &cfg()).map_err(|e| e.to_string())? {
            SplittingReport::Computed { h2: 0, .. } => {}
            other => return Err(format!("{name}: {other:?}")),
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("sl2 trivial coefficients: dims 1, 0, 0, 1", sl2_trivial),
        (
            "sl2 with V(1)..V(4): all cohomology vanishes",
            sl2_irreducibles_vanish,
        ),
        (
            "Hazewinkel duality on the algebra/module grid",
            hazewinkel_grid,
        ),
        ("Kunneth on three products", kunneth_cases),
        (
            "heis3 with nontrivial characters: all cohomology vanishes",
            dixmier,
        ),
        (
            "sl2 + heis3: condition (i), no witnesses, consistent",
            theorem_positive,
        ),
        (
            "aff1 and sl2 x| Q^2: expected H^1 witnesses",
            theorem_negative,
        ),
        (
            "dimension 3: H^3 vanishing matches unimodularity",
            corollary_dim3,
        ),
        ("property suites over the catalog", property_suites),
        (
            "five-term inequality and H^2 splitting",
            five_term_and_splitting,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        match check() {
            Ok(()) => println!("PASS {:>2}  {name}  ({:.2?})", i + 1, start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2}  {name}: {e}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
