// Structural invariants of every algebra in the built-in catalog.

use liecoh::liealg::{catalog, CATALOG_NAMES};

fn yn(b: bool) -> &'static str {
    if b {
        "y"
    } else {
        "-"
    }
}

fn main() {
    println!(
        "{:<20} {:>3} {:>4} {:>4} {:>4} {:>4} {:>4} {:>5} {:>7} {:>6}",
        "algebra", "dim", "nil", "sol", "ss", "perf", "unim", "ss+n", "radical", "center"
    );
    for name in CATALOG_NAMES {
        let l = catalog(name).unwrap();
        let f = l.structure_flags();
        println!(
            "{:<20} {:>3} {:>4} {:>4} {:>4} {:>4} {:>4} {:>5} {:>7} {:>6}",
            name,
            l.dim(),
            yn(f.nilpotent),
            yn(f.solvable),
            yn(f.semisimple),
            yn(f.perfect),
            yn(f.unimodular),
            yn(l.is_ss_plus_nilpotent().holds),
            f.radical.dim(),
            f.center.dim(),
        );
    }

    let l = catalog("sl2_semidirect_v1").unwrap();
    let r = l.radical();
    let q = l.quotient(&r).unwrap();
    println!(
        "\nsl2 acting on Q^2: radical of dimension {}, quotient basis {:?}",
        r.dim(),
        q.algebra.names()
    );
    println!("quotient is semisimple: {}", q.algebra.is_semisimple());
}
