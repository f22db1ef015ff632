//! Chevalley–Eilenberg cohomology and checkers for the identities it
//! satisfies: twisted Poincaré duality, Künneth, additivity, vanishing
//! for nilpotent algebras, the top-degree formula.

mod complex;
mod verify;

pub use complex::{
    build_complex, cohomology_dims, CochainComplex, CohomologyOptions, CohomologyReport,
};
pub use verify::{
    convolve, dixmier_vanishing_check, h1_trivial_coeffs_perfectness, verify_additivity,
    verify_hazewinkel, verify_kunneth, verify_top_degree, DegreeCheck, DixmierReport,
    IdentityReport,
};
