// Inflation from a quotient and the splitting of abelian extensions.

use std::sync::Arc;

use liecoh::cohomology::CohomologyOptions;
use liecoh::exactlin::int;
use liecoh::liealg::{catalog, LieAlgebra, Subspace};
use liecoh::repmod::{sl2_irreducible_on, IrreducibilityConfig, Representation};
use liecoh::theorem::{five_term_check, splitting_h2_check, SplittingReport};

fn main() {
    let options = CohomologyOptions::default();
    let cfg = IrreducibilityConfig::default();

    // sl2 acting on Q^2, inflating V(2) from the quotient by the radical
    let l = Arc::new(catalog("sl2_semidirect_v1").unwrap());
    let radical = l.radical();
    let q = Arc::new(l.quotient(&radical).unwrap().algebra);
    let v2 = sl2_irreducible_on(q, 2).unwrap();
    let r = five_term_check(&l, &radical, &v2, &options).unwrap();
    println!(
        "sl2 x| Q^2, V(2): H^1 of quotient {} <= H^1 of lift {}",
        r.quotient_h1, r.lifted_h1
    );

    // heis3 over its center, with a character of the abelian quotient
    let h = Arc::new(catalog("heis3").unwrap());
    let center = h.center();
    let quotient: Arc<LieAlgebra> = Arc::new(h.quotient(&center).unwrap().algebra);
    let chi = Representation::character(quotient, &[int(1), int(0)]).unwrap();
    let r = five_term_check(&h, &center, &chi, &options).unwrap();
    println!("heis3 / center, chi: {} <= {}", r.quotient_h1, r.lifted_h1);

    let zero = Subspace::zero(h.dim());
    let adj = Representation::adjoint(h.clone());
    let r = five_term_check(&h, &zero, &adj, &options).unwrap();
    println!("heis3 / 0, adjoint: {} = {}", r.quotient_h1, r.lifted_h1);

    for name in ["sl2_semidirect_v1", "sl2_semidirect_v2", "heis3", "sl2"] {
        let l = Arc::new(catalog(name).unwrap());
        match splitting_h2_check(&l, &options, &cfg).unwrap() {
            SplittingReport::Computed { ideal, h2 } => {
                println!(
                    "{name}: minimal ideal of dimension {}, dim H^2(L/I, I) = {h2}",
                    ideal.dim()
                )
            }
            SplittingReport::NotApplicable { reason } => {
                println!("{name}: not applicable ({reason})")
            }
            SplittingReport::Undecided => println!("{name}: undecided"),
        }
    }
}
