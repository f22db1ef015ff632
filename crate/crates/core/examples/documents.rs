// Reading and writing the plain-text document format, and driving the
// command-line front end in-process.

use std::sync::Arc;

use liecoh::cli::{emit, execute, parse};
use liecoh::cohomology::{cohomology_dims, CohomologyOptions};

const DOC: &str = "\
# the 2-dimensional non-abelian algebra with a character
algebra dim=2 basis=x,y
bracket 0 1 1 1
module name=lambda dim=1
act x
1
act y
0
family adequate=no
member lambda
";

fn main() {
    let doc = parse(DOC).unwrap();
    let text = emit(&doc);
    print!("{text}");
    assert_eq!(parse(&text).unwrap(), doc);

    let alg = Arc::new(doc.algebra.clone());
    let lambda = doc.module(&alg, "lambda").unwrap();
    let dims = cohomology_dims(&lambda, &CohomologyOptions::default())
        .unwrap()
        .dims;
    println!("\nH^*(aff1, lambda) = {dims:?}");

    let bad = DOC.replace("act y\n0", "act y\n1/0");
    println!("malformed entry: {}", parse(&bad).unwrap_err());

    for args in [
        vec!["liecoh", "cohomology", "@sl2", "K"],
        vec!["liecoh", "witness", "@aff1"],
        vec!["liecoh", "verify-corollary", "@unimod3(1,0,0)"],
    ] {
        let out = execute(&args);
        println!("\n$ {} (exit {})", args[1..].join(" "), out.status);
        print!("{}", out.stdout);
    }
}
