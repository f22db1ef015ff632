// The four equivalent conditions on every catalog algebra, evaluated over
// the default module family.

use std::sync::Arc;

use liecoh::cohomology::CohomologyOptions;
use liecoh::liealg::{catalog, CATALOG_NAMES};
use liecoh::repmod::IrreducibilityConfig;
use liecoh::theorem::{check_conditions, ModuleFamily};

fn main() {
    let options = CohomologyOptions::default();
    let cfg = IrreducibilityConfig::default();
    println!(
        "{:<20} {:>5} {:>5} {:>5} {:>5} {:>8} {:>10}  first witness",
        "algebra", "(i)", "(ii)", "(iii)", "(iv)", "members", "consistent"
    );
    for name in CATALOG_NAMES {
        let l = Arc::new(catalog(name).unwrap());
        let family = ModuleFamily::default_for(l.clone(), &cfg).unwrap();
        let v = check_conditions(&l, &family, &options).unwrap();
        let first = v
            .witnesses
            .first()
            .map(|w| format!("{} in degree {}", w.module, w.degree))
            .unwrap_or_default();
        println!(
            "{name:<20} {:>5} {:>5} {:>5} {:>5} {:>8} {:>10}  {first}",
            v.condition_i,
            v.condition_ii,
            v.condition_iii,
            v.condition_iv,
            v.evaluated,
            v.consistent
        );
        assert!(v.consistent, "{name}");
    }
}
