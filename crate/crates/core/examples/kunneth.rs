// Kunneth formula for direct sums of algebras with outer tensor modules.

use std::sync::Arc;

use liecoh::cohomology::{cohomology_dims, convolve, verify_kunneth, CohomologyOptions};
use liecoh::exactlin::int;
use liecoh::liealg::catalog;
use liecoh::repmod::{sl2_irreducible, Representation};

fn main() {
    let options = CohomologyOptions::default();
    let sl2 = Arc::new(catalog("sl2").unwrap());
    let heis = Arc::new(catalog("heis3").unwrap());

    let a = cohomology_dims(&Representation::trivial(sl2.clone(), 1), &options)
        .unwrap()
        .dims;
    let b = cohomology_dims(&Representation::trivial(heis.clone(), 1), &options)
        .unwrap()
        .dims;
    println!("sl2: {a:?}");
    println!("heis3: {b:?}");
    println!("convolution: {:?}", convolve(&a, &b));

    let pairs = [
        (
            Representation::trivial(sl2.clone(), 1),
            Representation::trivial(heis.clone(), 1),
        ),
        (
            sl2_irreducible(2),
            Representation::character(heis.clone(), &[int(0), int(1), int(0)]).unwrap(),
        ),
    ];
    for (left, right) in &pairs {
        let r = verify_kunneth(left, right, &options).unwrap();
        let direct: Vec<usize> = r.degrees.iter().map(|d| d.lhs).collect();
        println!(
            "{} over sl2 (x) {} over heis3: {direct:?}, passes {}",
            left.label(),
            right.label(),
            r.passes()
        );
    }
}
