use rayon::prelude::*;

use super::ModuleFamily;
use crate::cohomology::{cohomology_dims, CohomologyOptions};
use crate::error::{Error, Result};
use crate::liealg::{LieAlgebra, SsNilpotentReport};

/// Nonzero cohomology found for a family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub member: usize,
    pub module: String,
    pub degree: usize,
    pub dim: usize,
}

/// Results of the four equivalent conditions on one algebra, with the
/// cohomological ones evaluated over a module family.
#[derive(Clone, Debug)]
pub struct TheoremVerdict {
    /// Semisimple ⊕ nilpotent, decided structurally.
    pub condition_i: bool,
    pub decomposition: SsNilpotentReport,
    /// `H^n = 0` for all `n`, over the eligible members.
    pub condition_ii: bool,
    /// `H^{dim L - 1} = 0` over the eligible members.
    pub condition_iii: bool,
    /// `H^1 = 0` over the eligible members.
    pub condition_iv: bool,
    /// One entry per (member, degree) with nonzero cohomology.
    pub witnesses: Vec<Witness>,
    pub evaluated: usize,
    /// Members left out, with the reason.
    pub skipped: Vec<(String, &'static str)>,
    pub adequate: bool,
    pub consistent: bool,
}

pub(crate) fn skip_reason(member: &super::FamilyMember) -> Option<&'static str> {
    if member.trivial {
        Some("trivial")
    } else if !member.irreducibility.is_decided() {
        Some("irreducibility undecided")
    } else if !member.irreducibility.is_irreducible() {
        Some("reducible")
    } else {
        None
    }
}

/// Per-member cohomology dims for the eligible members, in family order.
pub(crate) fn member_dims(
    family: &ModuleFamily,
    options: &CohomologyOptions,
) -> Result<Vec<(usize, Vec<usize>)>> {
    family
        .members()
        .par_iter()
        .enumerate()
        .filter(|(_, m)| m.is_eligible())
        .map(|(i, m)| Ok((i, cohomology_dims(&m.module, options)?.dims)))
        .collect()
}

pub(crate) fn check_family_algebra(algebra: &LieAlgebra, family: &ModuleFamily) -> Result<()> {
    if !algebra.same_structure(family.algebra()) {
        return Err(Error::Domain("family is over a different algebra".into()));
    }
    Ok(())
}

/// Evaluates conditions (i)–(iv) on `algebra` against `family`.
///
/// `consistent` holds iff either condition (i) holds and no witness was
/// found, or it fails and (for an adequate family) each of (ii), (iii),
/// (iv) is refuted by some member.
pub fn check_conditions(
    algebra: &LieAlgebra,
    family: &ModuleFamily,
    options: &CohomologyOptions,
) -> Result<TheoremVerdict> {
    check_family_algebra(algebra, family)?;
    let d = algebra.dim();
    let decomposition = algebra.is_ss_plus_nilpotent();
    let condition_i = decomposition.holds;

    let skipped = family
        .members()
        .iter()
        .filter_map(|m| skip_reason(m).map(|r| (m.module.label().to_owned(), r)))
        .collect();
    let results = member_dims(family, options)?;
    let mut witnesses = Vec::new();
    for (i, dims) in &results {
        for (degree, &dim) in dims.iter().enumerate() {
            if dim > 0 {
                witnesses.push(Witness {
                    member: *i,
                    module: family.members()[*i].module.label().to_owned(),
                    degree,
                    dim,
                });
            }
        }
    }
    let refuted_at = |deg: Option<usize>| match deg {
        Some(n) => witnesses.iter().any(|w| w.degree == n),
        None => false,
    };
    let condition_ii = witnesses.is_empty();
    let condition_iii = !refuted_at(d.checked_sub(1));
    let condition_iv = !refuted_at((d >= 1).then_some(1));

    let consistent = if condition_i {
        witnesses.is_empty()
    } else {
        !family.adequate || (!condition_ii && !condition_iii && !condition_iv)
    };
    Ok(TheoremVerdict {
        condition_i,
        decomposition,
        condition_ii,
        condition_iii,
        condition_iv,
        witnesses,
        evaluated: results.len(),
        skipped,
        adequate: family.adequate,
        consistent,
    })
}
