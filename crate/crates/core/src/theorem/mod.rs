//! Checks of the structure theorem on concrete algebras.
//!
//! An algebra is a direct sum of a semisimple and a nilpotent algebra iff
//! `H^n(L, V) = 0` for all `n` and all nontrivial irreducible `V`, iff
//! `H^{dim L - 1}(L, V) = 0` for all such `V`, iff `H^1(L, V) = 0` for all
//! such `V`. The structural side is decided exactly. The cohomological
//! sides quantify over infinitely many modules, so here they are evaluated
//! over a finite [`ModuleFamily`]: a witness refutes a condition outright,
//! while the absence of witnesses confirms it only relative to the family.
//!
//! The high-degree variant is checked by [`verify_corollary`]: vanishing
//! of `H^n`, `n >= 3`, holds exactly for semisimple ⊕ nilpotent algebras,
//! 2-dimensional algebras and 3-dimensional unimodular algebras.

mod corollary;
mod extension;
mod family;
mod verdict;
mod witness;

pub use corollary::{verify_corollary, CorollaryCriterion, CorollaryReport};
pub use extension::{five_term_check, splitting_h2_check, FiveTermReport, SplittingReport};
pub use family::{FamilyMember, ModuleFamily};
pub use verdict::{check_conditions, TheoremVerdict, Witness};
pub use witness::{witness_search, SearchStage, WitnessHit};
