// In dimension 3, vanishing of H^3 on nontrivial irreducible modules is
// the same as unimodularity. Sweeps the unimodular family
// [x,z] = a x + c y, [y,z] = b x - a y and one non-unimodular algebra.

use std::sync::Arc;

use liecoh::cohomology::{cohomology_dims, CohomologyOptions};
use liecoh::exactlin::int;
use liecoh::liealg::{catalog, unimodular_3dim};
use liecoh::repmod::{IrreducibilityConfig, Representation, TwistSign};
use liecoh::theorem::{verify_corollary, ModuleFamily};

fn main() {
    let options = CohomologyOptions::default();
    let cfg = IrreducibilityConfig::default();
    for a in -1..=1 {
        for b in -1..=1 {
            for c in -1..=1 {
                if a * a + b * c == 0 {
                    continue;
                }
                let l = Arc::new(unimodular_3dim(&int(a), &int(b), &int(c)).unwrap());
                let family = ModuleFamily::default_for(l.clone(), &cfg).unwrap();
                let r = verify_corollary(&l, &family, &options).unwrap();
                println!(
                    "({a:>2},{b:>2},{c:>2})  unimodular {}  H^3 vanishes on {} members: {}",
                    l.is_unimodular(),
                    r.evaluated,
                    r.vanishing_on_family
                );
                assert!(r.agree);
            }
        }
    }

    let l = Arc::new(catalog("nonunimod3").unwrap());
    let k_tw = Representation::trivial(l.clone(), 1).twist(TwistSign::Plus);
    let h3 = cohomology_dims(&k_tw, &options).unwrap().dim(3);
    println!(
        "\nnonunimod3: unimodular {}, dim H^3(L, K^-tw) = {h3}",
        l.is_unimodular()
    );
    let family = ModuleFamily::default_for(l.clone(), &cfg).unwrap();
    let r = verify_corollary(&l, &family, &options).unwrap();
    for w in &r.witnesses {
        println!("  {} has H^{} of dimension {}", w.module, w.degree, w.dim);
    }
}
