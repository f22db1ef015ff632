use super::{cohomology_dims, CohomologyOptions, CohomologyReport};
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::repmod::{Representation, TwistSign};

/// One degree of a dimension identity `lhs == rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    pub degree: usize,
    pub lhs: usize,
    pub rhs: usize,
}

impl DegreeCheck {
    pub fn passes(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: &'static str,
    pub degrees: Vec<DegreeCheck>,
}

impl IdentityReport {
    pub fn passes(&self) -> bool {
        self.degrees.iter().all(DegreeCheck::passes)
    }

    fn from_pairs(name: &'static str, lhs: &[usize], rhs: &[usize]) -> Self {
        let degrees = lhs
            .iter()
            .zip(rhs)
            .enumerate()
            .map(|(degree, (&lhs, &rhs))| DegreeCheck { degree, lhs, rhs })
            .collect();
        Self { name, degrees }
    }
}

/// `dim H^n(L, (V^tw)^*) = dim H^{dim L - n}(L, V)` for every `n`.
pub fn verify_hazewinkel(
    module: &Representation,
    options: &CohomologyOptions,
) -> Result<IdentityReport> {
    let twisted_dual = module.twist(TwistSign::Minus).dual();
    let lhs = cohomology_dims(&twisted_dual, options)?.dims;
    let mut rhs = cohomology_dims(module, options)?.dims;
    rhs.reverse();
    Ok(IdentityReport::from_pairs("hazewinkel", &lhs, &rhs))
}

/// Cauchy product of two Betti vectors.
pub fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `dim H^n(L1 ⊕ L2, V1 ⊠ V2) = Σ_{i+j=n} dim H^i(L1, V1) dim H^j(L2, V2)`.
pub fn verify_kunneth(
    left: &Representation,
    right: &Representation,
    options: &CohomologyOptions,
) -> Result<IdentityReport> {
    let product = left.outer_tensor(right);
    let lhs = cohomology_dims(&product, options)?.dims;
    let rhs = convolve(
        &cohomology_dims(left, options)?.dims,
        &cohomology_dims(right, options)?.dims,
    );
    Ok(IdentityReport::from_pairs("kunneth", &lhs, &rhs))
}

/// `H^*(L, V ⊕ W) = H^*(L, V) ⊕ H^*(L, W)` on dimensions.
pub fn verify_additivity(
    v: &Representation,
    w: &Representation,
    options: &CohomologyOptions,
) -> Result<IdentityReport> {
    let lhs = cohomology_dims(&v.direct_sum(w)?, options)?.dims;
    let a = cohomology_dims(v, options)?.dims;
    let b = cohomology_dims(w, options)?.dims;
    let rhs: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
    Ok(IdentityReport::from_pairs("additivity", &lhs, &rhs))
}

/// `dim H^{dim L}(L, V) = dim ((V^*)^{-tw})^L`.
pub fn verify_top_degree(
    module: &Representation,
    options: &CohomologyOptions,
) -> Result<DegreeCheck> {
    let d = module.algebra().dim();
    let top = cohomology_dims(module, options)?.dim(d);
    let inv = module.dual().twist(TwistSign::Plus).invariants().dim();
    Ok(DegreeCheck {
        degree: d,
        lhs: top,
        rhs: inv,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DixmierReport {
    pub report: CohomologyReport,
    /// Every degree vanished.
    pub passed: bool,
}

/// Cohomology of a nilpotent algebra in a module without invariant
/// vectors vanishes in every degree.
pub fn dixmier_vanishing_check(
    module: &Representation,
    options: &CohomologyOptions,
) -> Result<DixmierReport> {
    if !module.algebra().is_nilpotent() {
        return Err(Error::Precondition("algebra is not nilpotent".into()));
    }
    if module.has_trivial_submodule() {
        return Err(Error::Precondition("module has nonzero invariants".into()));
    }
    let report = cohomology_dims(module, options)?;
    Ok(DixmierReport {
        passed: report.is_zero(),
        report,
    })
}

/// `H^1(L, K) = 0`, cross-checked against `[L, L] = L`.
pub fn h1_trivial_coeffs_perfectness(
    algebra: &LieAlgebra,
    options: &CohomologyOptions,
) -> Result<bool> {
    let k = Representation::trivial(std::sync::Arc::new(algebra.clone()), 1);
    let h1_zero = cohomology_dims(&k, options)?.dim(1) == 0;
    if h1_zero != algebra.is_perfect() {
        return Err(Error::Internal(
            "H^1(L, K) vanishing disagrees with perfectness".into(),
        ));
    }
    Ok(h1_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;
    use crate::liealg::catalog;
    use crate::repmod::sl2_irreducible;
    use std::sync::Arc;

    fn alg(name: &str) -> Arc<LieAlgebra> {
        Arc::new(catalog(name).unwrap())
    }

    fn opts() -> CohomologyOptions {
        CohomologyOptions::default()
    }

    #[test]
    fn convolution() {
        assert_eq!(convolve(&[1, 1], &[1, 1]), vec![1, 2, 1]);
        assert_eq!(
            convolve(&[1, 0, 0, 1], &[1, 2, 2, 1]),
            vec![1, 2, 2, 2, 2, 2, 1]
        );
    }

    #[test]
    fn hazewinkel_on_aff1() {
        let k = Representation::trivial(alg("aff1"), 1);
        let r = verify_hazewinkel(&k, &opts()).unwrap();
        assert!(r.passes());
        assert_eq!(r.degrees[2].lhs, 1);
    }

    #[test]
    fn kunneth_abelian() {
        let k = Representation::trivial(alg("abelian_1"), 1);
        let r = verify_kunneth(&k, &k, &opts()).unwrap();
        assert!(r.passes());
        assert_eq!(
            r.degrees.iter().map(|d| d.lhs).collect::<Vec<_>>(),
            vec![1, 2, 1]
        );
    }

    #[test]
    fn dixmier_preconditions() {
        let e = dixmier_vanishing_check(&sl2_irreducible(1), &opts()).unwrap_err();
        assert!(matches!(e, Error::Precondition(_)));
        let k = Representation::trivial(alg("heis3"), 1);
        assert!(matches!(
            dixmier_vanishing_check(&k, &opts()),
            Err(Error::Precondition(_))
        ));
        let chi = Representation::character(alg("abelian_2"), &[int(1), int(0)]).unwrap();
        assert!(dixmier_vanishing_check(&chi, &opts()).unwrap().passed);
    }

    #[test]
    fn perfectness() {
        assert!(h1_trivial_coeffs_perfectness(&catalog("sl2").unwrap(), &opts()).unwrap());
        assert!(!h1_trivial_coeffs_perfectness(&catalog("heis3").unwrap(), &opts()).unwrap());
        assert!(!h1_trivial_coeffs_perfectness(&catalog("aff1").unwrap(), &opts()).unwrap());
    }
}
