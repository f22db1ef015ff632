// Chevalley-Eilenberg cohomology tables for a few classical cases.

use std::sync::Arc;

use liecoh::cohomology::{build_complex, CohomologyOptions};
use liecoh::exactlin::int;
use liecoh::liealg::catalog;
use liecoh::repmod::{sl2_irreducible, Representation};

fn table(title: &str, module: &Representation) {
    let options = CohomologyOptions::default();
    let complex = build_complex(module.algebra(), module, &options).unwrap();
    let r = complex.cohomology(&options);
    println!("{title}");
    println!(
        "{:>3} {:>8} {:>8} {:>7}",
        "n", "dim C^n", "rank d", "dim H^n"
    );
    for n in 0..r.dims.len() {
        println!(
            "{n:>3} {:>8} {:>8} {:>7}",
            r.cochain_dims[n], r.ranks[n], r.dims[n]
        );
    }
    println!();
}

fn main() {
    let sl2 = Arc::new(catalog("sl2").unwrap());
    table(
        "sl2 with trivial coefficients",
        &Representation::trivial(sl2.clone(), 1),
    );
    table("sl2 with V(3)", &sl2_irreducible(3));

    let heis = Arc::new(catalog("heis3").unwrap());
    table(
        "heis3 with trivial coefficients",
        &Representation::trivial(heis.clone(), 1),
    );
    table("heis3 adjoint", &Representation::adjoint(heis.clone()));
    let chi = Representation::character(heis, &[int(1), int(0), int(0)]).unwrap();
    table("heis3 with the character x -> 1", &chi);

    let aff = Arc::new(catalog("aff1").unwrap());
    let chi = Representation::character(aff, &[int(1), int(0)]).unwrap();
    table("aff1 with the character x -> 1", &chi);

    let with_reps = CohomologyOptions {
        representatives: true,
        ..CohomologyOptions::default()
    };
    let r = liecoh::cohomology::cohomology_dims(&chi, &with_reps).unwrap();
    println!(
        "aff1 cocycle representatives: {:?}",
        r.representatives
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect::<Vec<_>>()
    );
}
