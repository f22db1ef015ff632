use std::sync::Arc;

use super::family::{characters, derived_abelianization_module, semisimple_quotient_modules};
use crate::cohomology::{cohomology_dims, CohomologyOptions};
use crate::error::Result;
use crate::liealg::LieAlgebra;
use crate::repmod::{IrreducibilityConfig, Representation, TwistSign};

/// Where a candidate module came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStage {
    /// `K^{-tw}`, the character `x -> Tr(ad x)`.
    TraceCharacter,
    Character,
    SemisimpleQuotient,
    DerivedAbelianization,
}

impl SearchStage {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStage::TraceCharacter => "trace character",
            SearchStage::Character => "character",
            SearchStage::SemisimpleQuotient => "semisimple quotient",
            SearchStage::DerivedAbelianization => "derived abelianization",
        }
    }
}

#[derive(Clone, Debug)]
pub struct WitnessHit {
    pub module: Representation,
    pub stage: SearchStage,
    pub degree: usize,
    pub dim: usize,
    /// Candidates examined, this one included.
    pub examined: usize,
}

/// Looks for a nontrivial irreducible module with `H^1 ≠ 0`, or failing
/// that `H^{dim L - 1} ≠ 0`; either refutes the vanishing conditions and so
/// shows `L` is not semisimple ⊕ nilpotent.
///
/// Candidates, in order: `K^{-tw}` when `L` is not unimodular; characters
/// with small coordinates; modules lifted from `L / Rad(L)`; `L` acting on
/// `[L,L] / [[L,L],[L,L]]`. At most `budget` candidates are examined.
pub fn witness_search(
    algebra: &Arc<LieAlgebra>,
    budget: usize,
    options: &CohomologyOptions,
    config: &IrreducibilityConfig,
) -> Result<Option<WitnessHit>> {
    let d = algebra.dim();
    if d == 0 {
        return Ok(None);
    }
    let mut candidates: Vec<(SearchStage, Representation)> = Vec::new();
    if !algebra.is_unimodular() {
        let k = Representation::trivial(algebra.clone(), 1).twist(TwistSign::Plus);
        candidates.push((SearchStage::TraceCharacter, k.with_label("K^-tw")));
    }
    candidates.extend(
        characters(algebra, 2)
            .into_iter()
            .map(|c| (SearchStage::Character, c)),
    );
    candidates.extend(
        semisimple_quotient_modules(algebra)?
            .into_iter()
            .map(|m| (SearchStage::SemisimpleQuotient, m)),
    );
    if let Some(m) = derived_abelianization_module(algebra)? {
        candidates.push((SearchStage::DerivedAbelianization, m));
    }

    for (examined, (stage, module)) in candidates.into_iter().take(budget).enumerate() {
        if module.is_trivial() || !module.is_irreducible(config)?.is_irreducible() {
            continue;
        }
        let dims = cohomology_dims(&module, options)?.dims;
        let degree = [1, d - 1].into_iter().find(|&n| dims[n] > 0);
        if let Some(degree) = degree {
            return Ok(Some(WitnessHit {
                dim: dims[degree],
                module,
                stage,
                degree,
                examined: examined + 1,
            }));
        }
    }
    Ok(None)
}
