// Building modules: sl2 irreducibles, duals, twists, tensor products,
// and the irreducibility test.

use std::sync::Arc;

use liecoh::liealg::catalog;
use liecoh::repmod::{sl2_irreducible, IrreducibilityConfig, Representation, TwistSign};

fn main() {
    let cfg = IrreducibilityConfig::default();

    let v2 = sl2_irreducible(2);
    println!("V(2), e acts by\n{}", v2.action()[1]);
    let square = v2.tensor(&v2).unwrap();
    println!(
        "V(2) (x) V(2): dim {}, invariants {}, {}",
        square.dim(),
        square.invariants().dim(),
        square.is_irreducible(&cfg).unwrap().as_str()
    );
    for m in 0..=4 {
        let v = sl2_irreducible(m);
        let status = v.is_irreducible(&cfg).unwrap();
        let dual_status = v.dual().is_irreducible(&cfg).unwrap();
        println!(
            "V({m}): {} / dual {}",
            status.as_str(),
            dual_status.as_str()
        );
    }

    // twisting only matters off the unimodular locus
    let l = Arc::new(catalog("nonunimod3").unwrap());
    println!(
        "\nnonunimod3 ad traces {:?}",
        l.ad_traces()
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
    );
    let k = Representation::trivial(l.clone(), 1);
    for sign in [TwistSign::Plus, TwistSign::Minus] {
        let t = k.twist(sign);
        println!("K twisted {sign:?}: z acts by {}", t.action()[2][(0, 0)]);
    }

    let adj = Representation::adjoint(l.clone());
    println!(
        "adjoint module: dim {}, invariants {}, {}",
        adj.dim(),
        adj.invariants().dim(),
        adj.is_irreducible(&cfg).unwrap().as_str()
    );
    if let liecoh::repmod::Irreducibility::Reducible(w) = adj.is_irreducible(&cfg).unwrap() {
        println!("invariant subspace of dimension {}", w.dim());
    }
}
