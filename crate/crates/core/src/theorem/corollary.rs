use super::verdict::{check_family_algebra, member_dims, Witness};
use super::ModuleFamily;
use crate::cohomology::CohomologyOptions;
use crate::error::Result;
use crate::liealg::LieAlgebra;

/// Which structural statement the high-degree vanishing is compared with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorollaryCriterion {
    /// `dim L <= 2`: no degree `n >= 3` exists.
    Vacuous,
    /// `dim L = 3`: unimodularity.
    Unimodular,
    /// `dim L >= 4`: semisimple ⊕ nilpotent.
    SemisimplePlusNilpotent,
}

impl CorollaryCriterion {
    pub fn as_str(self) -> &'static str {
        match self {
            CorollaryCriterion::Vacuous => "vacuous",
            CorollaryCriterion::Unimodular => "unimodular",
            CorollaryCriterion::SemisimplePlusNilpotent => "semisimple plus nilpotent",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorollaryReport {
    pub dim: usize,
    pub criterion: CorollaryCriterion,
    /// The structural side: semisimple ⊕ nilpotent, or 2-dimensional, or
    /// 3-dimensional unimodular.
    pub structural: bool,
    /// `H^n = 0` for every `n >= 3` over the eligible members.
    pub vanishing_on_family: bool,
    pub witnesses: Vec<Witness>,
    pub evaluated: usize,
    pub adequate: bool,
    pub agree: bool,
}

/// Compares vanishing of `H^n`, `n >= 3`, over the family with the
/// structural classification.
pub fn verify_corollary(
    algebra: &LieAlgebra,
    family: &ModuleFamily,
    options: &CohomologyOptions,
) -> Result<CorollaryReport> {
    check_family_algebra(algebra, family)?;
    let d = algebra.dim();
    let criterion = match d {
        0..=2 => CorollaryCriterion::Vacuous,
        3 => CorollaryCriterion::Unimodular,
        _ => CorollaryCriterion::SemisimplePlusNilpotent,
    };
    if criterion == CorollaryCriterion::Vacuous {
        return Ok(CorollaryReport {
            dim: d,
            criterion,
            structural: true,
            vanishing_on_family: true,
            witnesses: Vec::new(),
            evaluated: 0,
            adequate: family.adequate,
            agree: true,
        });
    }
    let ss_nil = algebra.is_ss_plus_nilpotent().holds;
    let structural = match criterion {
        CorollaryCriterion::Unimodular => algebra.is_unimodular() || ss_nil,
        _ => ss_nil,
    };
    let results = member_dims(family, options)?;
    let mut witnesses = Vec::new();
    for (i, dims) in &results {
        for (degree, &dim) in dims.iter().enumerate().skip(3) {
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
    let vanishing_on_family = witnesses.is_empty();
    let agree = if structural {
        vanishing_on_family
    } else {
        !family.adequate || !vanishing_on_family
    };
    Ok(CorollaryReport {
        dim: d,
        criterion,
        structural,
        vanishing_on_family,
        witnesses,
        evaluated: results.len(),
        adequate: family.adequate,
        agree,
    })
}
