//! Exact Lie algebra cohomology over the rationals.
//!
//! The crate computes Chevalley–Eilenberg cohomology `H^n(L, V)` of a
//! finite-dimensional Lie algebra `L` with coefficients in a module `V`,
//! using exact rational arithmetic throughout, and checks the vanishing
//! and duality statements that characterize algebras splitting as a
//! semisimple part plus a nilpotent part.
//!
//! - [`exactlin`]: rational matrices, ranks and kernels.
//! - [`liealg`]: algebras by structure constants, radical, series, catalog.
//! - [`repmod`]: modules, duals, twists, tensor products, irreducibility.
//! - [`cohomology`]: the cochain complex and the identity checkers.
//! - [`theorem`]: verdicts over finite module families, witness search.
//! - [`cli`]: the text document format and the command runner.

pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exactlin;
pub mod liealg;
pub mod repmod;
pub mod theorem;

pub use error::{Error, Result};
