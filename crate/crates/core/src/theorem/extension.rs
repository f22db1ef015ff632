use std::sync::Arc;

use num_traits::Zero;

use crate::cohomology::{cohomology_dims, CohomologyOptions};
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::liealg::{LieAlgebra, Subspace};
use crate::repmod::{Irreducibility, IrreducibilityConfig, Representation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiveTermReport {
    /// `dim H^1(L/I, V̄)`.
    pub quotient_h1: usize,
    /// `dim H^1(L, V)` for `V` the lift of `V̄`.
    pub lifted_h1: usize,
}

impl FiveTermReport {
    pub fn holds(&self) -> bool {
        self.quotient_h1 <= self.lifted_h1
    }
}

/// Inflation `H^1(L/I, V̄) -> H^1(L, V)` is injective when `I` acts
/// trivially on `V`, so the dimensions must satisfy `≤`.
pub fn five_term_check(
    algebra: &Arc<LieAlgebra>,
    ideal: &Subspace,
    vbar: &Representation,
    options: &CohomologyOptions,
) -> Result<FiveTermReport> {
    let lifted = Representation::lift_through_quotient(algebra.clone(), ideal, vbar)?;
    Ok(FiveTermReport {
        quotient_h1: cohomology_dims(vbar, options)?.dim(1),
        lifted_h1: cohomology_dims(&lifted, options)?.dim(1),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplittingReport {
    /// `dim H^2(L/I, I)` for a minimal abelian ideal `I` on which `L/I`
    /// acts nontrivially.
    Computed {
        ideal: Subspace,
        h2: usize,
    },
    NotApplicable {
        reason: &'static str,
    },
    /// Irreducibility of a candidate ideal could not be certified.
    Undecided,
}

/// Finds a minimal abelian ideal `I` with nontrivial `L/I`-action and
/// reports `dim H^2(L/I, I)`; a zero value means the extension
/// `0 -> I -> L -> L/I -> 0` splits. The splitting is not constructed.
///
/// The ideal is searched for inside the last nonzero term of the derived
/// series of the radical, refining through invariant subspaces until the
/// adjoint action on it is irreducible.
pub fn splitting_h2_check(
    algebra: &Arc<LieAlgebra>,
    options: &CohomologyOptions,
    config: &IrreducibilityConfig,
) -> Result<SplittingReport> {
    let n = algebra.dim();
    let radical = algebra.radical();
    if radical.is_zero() {
        return Ok(SplittingReport::NotApplicable {
            reason: "semisimple algebra has no abelian ideal",
        });
    }
    let series = algebra.derived_series_of(&radical);
    let abelian = series
        .iter()
        .rev()
        .find(|s| !s.is_zero())
        .expect("radical is nonzero")
        .clone();

    // ambient basis of the current candidate, refined until irreducible
    let mut ideal = abelian;
    let adjoint = Representation::adjoint(algebra.clone());
    let module = loop {
        let m = adjoint.restrict(&ideal)?;
        match m.is_irreducible(config)? {
            Irreducibility::Irreducible => break m,
            Irreducibility::Undecided => return Ok(SplittingReport::Undecided),
            Irreducibility::Reducible(w) => {
                let vectors = w.basis().iter().map(|coords| {
                    let mut v = vec![Scalar::zero(); n];
                    for (c, b) in coords.iter().zip(ideal.basis()) {
                        for (x, y) in v.iter_mut().zip(b) {
                            *x += c * y;
                        }
                    }
                    v
                });
                ideal = Subspace::span(n, vectors.collect::<Vec<_>>());
            }
        }
    };
    if module.is_trivial() {
        return Ok(SplittingReport::NotApplicable {
            reason: "minimal ideal is central",
        });
    }
    let q = algebra.quotient(&ideal)?;
    // I is abelian, so it acts trivially on itself and the action factors through L/I
    let action = q
        .complement
        .iter()
        .map(|&c| module.action()[c].clone())
        .collect();
    let on_ideal = Representation::new(Arc::new(q.algebra), module.dim(), action)?.with_label("I");
    on_ideal
        .validate()
        .map_err(|v| Error::Internal(format!("ideal is not an L/I-module: {v}")))?;
    let h2 = cohomology_dims(&on_ideal, options)?.dim(2);
    Ok(SplittingReport::Computed { ideal, h2 })
}
