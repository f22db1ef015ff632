// Rank, kernel and echelon form over Q, with no rounding anywhere.

use liecoh::exactlin::{format_rational, frac, Matrix};

fn main() {
    // a Hilbert-like matrix whose last row is the sum of the first two
    let rows = vec![
        vec![frac(1, 1), frac(1, 2), frac(1, 3)],
        vec![frac(1, 2), frac(1, 3), frac(1, 4)],
        vec![frac(3, 2), frac(5, 6), frac(7, 12)],
    ];
    let m = Matrix::from_rows(rows).unwrap();
    println!("matrix\n{m}");

    let ech = m.echelon();
    println!("reduced row echelon form\n{}", ech.reduced);
    println!("pivot columns {:?}", ech.pivots);

    let (rank, kernel) = m.rank_kernel();
    println!("rank {rank}, nullity {}", kernel.len());
    for v in &kernel {
        let v_text: Vec<String> = v.iter().map(format_rational).collect();
        println!("kernel vector ({})", v_text.join(", "));
        let image = m.apply(v).unwrap();
        assert!(image.iter().all(|x| x == &frac(0, 1)));
    }
    assert_eq!(rank + kernel.len(), m.cols());
}
