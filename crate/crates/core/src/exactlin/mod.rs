//! Exact linear algebra over the rationals.
//!
//! Every rank, kernel and product in the crate goes through [`Matrix`];
//! there is no floating point anywhere, so a dimension reported as zero
//! is exactly zero.

mod matrix;
mod scalar;

pub use matrix::{is_zero_vector, Echelon, Matrix};
pub use scalar::{format_rational, frac, int, one, parse_rational, zero, Scalar};
