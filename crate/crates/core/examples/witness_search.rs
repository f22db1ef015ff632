// Hunting for modules that certify an algebra is not semisimple plus
// nilpotent.

use std::sync::Arc;

use liecoh::cohomology::CohomologyOptions;
use liecoh::liealg::{catalog, CATALOG_NAMES};
use liecoh::repmod::IrreducibilityConfig;
use liecoh::theorem::witness_search;

fn main() {
    let options = CohomologyOptions::default();
    let cfg = IrreducibilityConfig::default();
    for name in CATALOG_NAMES {
        let l = Arc::new(catalog(name).unwrap());
        match witness_search(&l, 200, &options, &cfg).unwrap() {
            Some(hit) => println!(
                "{name:<20} {} (dim {}, {}) has H^{} of dimension {} after {} candidates",
                hit.module.label(),
                hit.module.dim(),
                hit.stage.as_str(),
                hit.degree,
                hit.dim,
                hit.examined
            ),
            None => println!(
                "{name:<20} no witness; semisimple plus nilpotent: {}",
                l.is_ss_plus_nilpotent().holds
            ),
        }
    }
}
