use std::sync::Arc;

use itertools::Itertools;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{int, Matrix, Scalar};
use crate::liealg::{LieAlgebra, Subspace};
use crate::repmod::{
    sl2_irreducible_on, Irreducibility, IrreducibilityConfig, Representation, TwistSign,
};

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub module: Representation,
    pub irreducibility: Irreducibility,
    pub trivial: bool,
}

impl FamilyMember {
    /// Nontrivial and certified irreducible: the modules the vanishing
    /// conditions quantify over.
    pub fn is_eligible(&self) -> bool {
        !self.trivial && self.irreducibility.is_irreducible()
    }
}

/// A finite list of modules standing in for "every nontrivial irreducible
/// module". Statuses are recomputed on construction.
///
/// `adequate` records the caller's claim that the family is rich enough to
/// contain a witness whenever the algebra fails to split as semisimple plus
/// nilpotent. Without it, absence of witnesses is only evidence relative to
/// the family.
#[derive(Clone, Debug)]
pub struct ModuleFamily {
    algebra: Arc<LieAlgebra>,
    members: Vec<FamilyMember>,
    pub adequate: bool,
}

impl ModuleFamily {
    pub fn new(
        algebra: Arc<LieAlgebra>,
        modules: Vec<Representation>,
        adequate: bool,
        config: &IrreducibilityConfig,
    ) -> Result<Self> {
        let mut members = Vec::with_capacity(modules.len());
        for module in modules {
            if !module.algebra().same_structure(&algebra) {
                return Err(Error::Domain(format!(
                    "family member {} is over a different algebra",
                    module.label()
                )));
            }
            module.validate().map_err(Error::Homomorphism)?;
            let irreducibility = module.is_irreducible(config)?;
            members.push(FamilyMember {
                trivial: module.is_trivial(),
                irreducibility,
                module,
            });
        }
        Ok(Self {
            algebra,
            members,
            adequate,
        })
    }

    /// The shipped family for an algebra, built from its structure:
    ///
    /// - characters with coordinates in `{-2..2}` on a basis of `(L/[L,L])^*`;
    /// - `K^{-tw}` when `L` is not unimodular;
    /// - `L` acting on `[L,L] / [[L,L],[L,L]]`;
    /// - modules of the semisimple quotient `L/Rad(L)`, lifted to `L`
    ///   (`V(1)..V(4)` when the quotient has the `sl2` table, otherwise its
    ///   adjoint module), and the first two of them tensored with the
    ///   characters having coordinates in `{-1, 0, 1}`.
    ///
    /// The result is flagged adequate.
    pub fn default_for(algebra: Arc<LieAlgebra>, config: &IrreducibilityConfig) -> Result<Self> {
        let mut modules: Vec<Representation> = Vec::new();
        let push = |m: Representation, modules: &mut Vec<Representation>| {
            if m.dim() > 0 && !m.is_trivial() && !modules.contains(&m) {
                modules.push(m);
            }
        };

        let chars = characters(&algebra, 2);
        for c in &chars {
            push(c.clone(), &mut modules);
        }
        if !algebra.is_unimodular() {
            let k = Representation::trivial(algebra.clone(), 1).twist(TwistSign::Plus);
            push(k.with_label("K^-tw"), &mut modules);
        }
        if let Some(m) = derived_abelianization_module(&algebra)? {
            push(m, &mut modules);
        }
        let lifted = semisimple_quotient_modules(&algebra)?;
        for w in &lifted {
            push(w.clone(), &mut modules);
        }
        let small_chars = characters(&algebra, 1);
        for w in lifted.iter().take(2) {
            for c in &small_chars {
                push(
                    w.tensor(c)?
                        .with_label(format!("{} (x) {}", w.label(), c.label())),
                    &mut modules,
                );
            }
        }
        Self::new(algebra, modules, true, config)
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn members(&self) -> &[FamilyMember] {
        &self.members
    }

    /// Records an external irreducibility claim for member `index`. An
    /// undecided member claimed irreducible becomes eligible; a claim that
    /// contradicts a decided status is rejected.
    pub fn apply_claim(&mut self, index: usize, irreducible: bool) -> Result<()> {
        let member = self
            .members
            .get_mut(index)
            .ok_or_else(|| Error::Lookup(format!("no family member {index}")))?;
        match (&member.irreducibility, irreducible) {
            (Irreducibility::Undecided, true) => {
                member.irreducibility = Irreducibility::Irreducible
            }
            (Irreducibility::Undecided, false) => {}
            (status, claim) if status.is_irreducible() == claim => {}
            (status, _) => {
                return Err(Error::Constraint(format!(
                    "claim about {} contradicts computed status {}",
                    member.module.label(),
                    status.as_str()
                )))
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Basis of the functionals vanishing on `[L, L]`.
pub(crate) fn character_basis(algebra: &LieAlgebra) -> Vec<Vec<Scalar>> {
    let derived = algebra.derived_algebra();
    if derived.is_zero() {
        return Subspace::full(algebra.dim()).basis().to_vec();
    }
    Matrix::from_rows(derived.basis().to_vec())
        .unwrap()
        .kernel()
}

/// Nontrivial characters whose coordinates on [`character_basis`] lie in
/// `{-radius..radius}`. The box shrinks for large abelianizations.
pub(crate) fn characters(algebra: &Arc<LieAlgebra>, radius: i64) -> Vec<Representation> {
    let basis = character_basis(algebra);
    let mut radius = radius;
    while radius > 1 && (2 * radius + 1).pow(basis.len() as u32) > 200 {
        radius -= 1;
    }
    let coords: Vec<Vec<i64>> = if (2 * radius + 1).pow(basis.len().min(10) as u32) > 300 {
        // axis directions only
        (0..basis.len())
            .flat_map(|i| {
                [1, -1].map(|s| {
                    let mut v = vec![0; basis.len()];
                    v[i] = s;
                    v
                })
            })
            .collect()
    } else {
        (0..basis.len())
            .map(|_| -radius..=radius)
            .multi_cartesian_product()
            .collect()
    };
    coords
        .into_iter()
        .filter(|c| c.iter().any(|&x| x != 0))
        .map(|c| {
            let mut lambda = vec![Scalar::zero(); algebra.dim()];
            for (coef, b) in c.iter().zip(&basis) {
                for (x, y) in lambda.iter_mut().zip(b) {
                    *x += int(*coef) * y;
                }
            }
            Representation::character(algebra.clone(), &lambda)
                .expect("functional vanishes on [L, L] by construction")
        })
        .collect()
}

/// `L` acting on `D / [D, D]` for `D = [L, L]`, or `None` when that
/// quotient is zero.
pub(crate) fn derived_abelianization_module(
    algebra: &Arc<LieAlgebra>,
) -> Result<Option<Representation>> {
    let derived = algebra.derived_algebra();
    if derived.is_zero() {
        return Ok(None);
    }
    let dd = algebra.bracket_subspaces(&derived, &derived);
    if dd == derived {
        return Ok(None);
    }
    let on_derived = Representation::adjoint(algebra.clone()).restrict(&derived)?;
    let dd_coords = Subspace::span(
        derived.dim(),
        dd.basis()
            .iter()
            .map(|v| derived.coordinates(v).expect("[D,D] lies in D")),
    );
    Ok(Some(
        on_derived
            .quotient_module(&dd_coords)?
            .with_label("[L,L]/[[L,L],[L,L]]"),
    ))
}

/// Modules of `L / Rad(L)` lifted to `L`.
pub(crate) fn semisimple_quotient_modules(
    algebra: &Arc<LieAlgebra>,
) -> Result<Vec<Representation>> {
    let radical = algebra.radical();
    if radical.is_full() {
        return Ok(Vec::new());
    }
    let q = algebra.quotient(&radical)?;
    let qalg = Arc::new(q.algebra.clone());
    let base: Vec<Representation> = match (1..=4)
        .map(|m| sl2_irreducible_on(qalg.clone(), m))
        .collect::<Result<Vec<_>>>()
    {
        Ok(mods) => mods,
        Err(_) => vec![Representation::adjoint(qalg.clone()).with_label("adjoint(L/Rad)")],
    };
    base.into_iter()
        .map(|v| {
            let label = if radical.is_zero() {
                v.label().to_owned()
            } else {
                format!("lift({})", v.label())
            };
            Ok(
                Representation::lift_through_quotient(algebra.clone(), &radical, &v)?
                    .with_label(label),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;

    fn alg(name: &str) -> Arc<LieAlgebra> {
        Arc::new(catalog(name).unwrap())
    }

    #[test]
    fn heis3_characters() {
        let chars = characters(&alg("heis3"), 2);
        assert_eq!(chars.len(), 24);
        assert!(chars.iter().all(|c| c.action()[2].is_zero()));
    }

    #[test]
    fn aff1_default_family() {
        let f = ModuleFamily::default_for(alg("aff1"), &IrreducibilityConfig::default()).unwrap();
        let labels: Vec<_> = f
            .members()
            .iter()
            .map(|m| m.module.label().to_owned())
            .collect();
        assert_eq!(
            labels,
            vec!["chi(-2,0)", "chi(-1,0)", "chi(1,0)", "chi(2,0)"]
        );
        assert!(f.members().iter().all(FamilyMember::is_eligible));
    }

    #[test]
    fn sl2_default_family() {
        let f = ModuleFamily::default_for(alg("sl2"), &IrreducibilityConfig::default()).unwrap();
        let labels: Vec<_> = f
            .members()
            .iter()
            .map(|m| m.module.label().to_owned())
            .collect();
        assert_eq!(labels, vec!["V(1)", "V(2)", "V(3)", "V(4)"]);
    }

    #[test]
    fn rotation_algebra_gets_its_derived_module() {
        let f = ModuleFamily::default_for(alg("unimod3(0,1,-1)"), &IrreducibilityConfig::default())
            .unwrap();
        let derived = f
            .members()
            .iter()
            .find(|m| m.module.label() == "[L,L]/[[L,L],[L,L]]")
            .unwrap();
        assert_eq!(derived.module.dim(), 2);
        assert!(derived.is_eligible());
    }

    #[test]
    fn wrong_algebra_is_rejected() {
        let v = crate::repmod::sl2_irreducible(1);
        let e = ModuleFamily::new(
            alg("heis3"),
            vec![v],
            false,
            &IrreducibilityConfig::default(),
        );
        assert!(matches!(e, Err(Error::Domain(_))));
    }
}
