//! Lie algebras given by structure constants, and the structural
//! predicates needed to decide whether an algebra splits as a semisimple
//! part plus a nilpotent part.

mod algebra;
mod catalog;
mod structure;
pub(crate) mod subspace;

pub use algebra::{JacobiViolation, LieAlgebra};
pub use catalog::{catalog, direct_sum, semidirect_product, unimodular_3dim, CATALOG_NAMES};
pub use structure::{Quotient, SsNilpotentReport, StructureFlags};
pub use subspace::Subspace;
