// Duality H^n(L, (V^tw)^*) = H^{dim L - n}(L, V), including for algebras
// that are not unimodular, where plain Poincare duality fails.

use std::sync::Arc;

use liecoh::cohomology::{cohomology_dims, verify_hazewinkel, CohomologyOptions};
use liecoh::liealg::catalog;
use liecoh::repmod::Representation;

fn main() {
    let options = CohomologyOptions::default();
    for name in ["sl2", "heis3", "aff1", "nonunimod3", "unimod3(1,0,0)"] {
        let l = Arc::new(catalog(name).unwrap());
        for module in [
            Representation::trivial(l.clone(), 1),
            Representation::adjoint(l.clone()),
        ] {
            let report = verify_hazewinkel(&module, &options).unwrap();
            let lhs: Vec<usize> = report.degrees.iter().map(|d| d.lhs).collect();
            let rhs: Vec<usize> = report.degrees.iter().map(|d| d.rhs).collect();
            println!(
                "{name:<15} {:<8} {lhs:?} vs {rhs:?}  {}",
                module.label(),
                if report.passes() { "ok" } else { "FAIL" }
            );
            assert!(report.passes());
        }
    }

    // without the twist the trivial module of nonunimod3 is not self-dual
    let l = Arc::new(catalog("nonunimod3").unwrap());
    let dims = cohomology_dims(&Representation::trivial(l, 1), &options)
        .unwrap()
        .dims;
    let reversed: Vec<usize> = dims.iter().rev().copied().collect();
    println!("\nnonunimod3 H^*(L, K) = {dims:?}, reversed {reversed:?}");
}
