//! Modules over Lie algebras as matrix representations, and the standard
//! constructions on them: duals, trace twists, sums, tensor products,
//! lifting from quotient algebras, invariants and irreducibility.

mod irreducible;
mod representation;

pub use irreducible::{spin, Irreducibility, IrreducibilityConfig};
pub use representation::{
    sl2_irreducible, sl2_irreducible_on, HomomorphismViolation, Representation, TwistSign,
};
