#![allow(dead_code)]

use std::sync::Arc;

use itertools::Itertools;
use num_traits::{One, Zero};

use liecoh::exactlin::{Matrix, Scalar};
use liecoh::liealg::{catalog, LieAlgebra, CATALOG_NAMES};
use liecoh::repmod::{IrreducibilityConfig, Representation, TwistSign};
use liecoh::theorem::ModuleFamily;

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut total = Scalar::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// The alternating form `dx_S` evaluated on vectors `ys`: the minor of the
/// matrix of `ys` on the coordinates in `S`.
fn form(s: &[usize], ys: &[Vec<Scalar>]) -> Scalar {
    let m: Vec<Vec<Scalar>> = ys
        .iter()
        .map(|y| s.iter().map(|&i| y[i].clone()).collect())
        .collect();
    det(&m)
}

fn apply(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .zip(v)
                .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

/// `dim H^n(L, V)` for `n = 0..=dim L`, computed from the textbook
/// differential applied to the cochains `dx_S ⊗ v_a`.
pub fn oracle_dims(l: &LieAlgebra, action: &[Matrix], module_dim: usize) -> Vec<usize> {
    let d = l.dim();
    let m = module_dim;
    let basis: Vec<Vec<Scalar>> = (0..d).map(|i| unit(d, i)).collect();
    let mut ranks = Vec::new();
    for n in 0..d {
        let cols: Vec<Vec<usize>> = (0..d).combinations(n).collect();
        let rows: Vec<Vec<usize>> = (0..d).combinations(n + 1).collect();
        let mut mat = vec![vec![Scalar::zero(); cols.len() * m]; rows.len() * m];
        for (ci, s) in cols.iter().enumerate() {
            for (ri, t) in rows.iter().enumerate() {
                // (d phi)(x_0..x_n) with phi = dx_s ⊗ v_a, as a vector in V per a
                let xs: Vec<Vec<Scalar>> = t.iter().map(|&i| basis[i].clone()).collect();
                let mut coeff_action: Vec<(usize, Scalar)> = Vec::new();
                let mut coeff_plain = Scalar::zero();
                for i in 0..=n {
                    let rest: Vec<Vec<Scalar>> = xs
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != i)
                        .map(|(_, x)| x.clone())
                        .collect();
                    let f = form(s, &rest);
                    if !f.is_zero() {
                        let sign = if i % 2 == 0 { f } else { -f };
                        coeff_action.push((t[i], sign));
                    }
                }
                for i in 0..=n {
                    for j in i + 1..=n {
                        let br = l.bracket(&xs[i], &xs[j]).unwrap();
                        let mut args = vec![br];
                        args.extend(
                            xs.iter()
                                .enumerate()
                                .filter(|&(k, _)| k != i && k != j)
                                .map(|(_, x)| x.clone()),
                        );
                        let f = form(s, &args);
                        if (i + j) % 2 == 0 {
                            coeff_plain += f;
                        } else {
                            coeff_plain -= f;
                        }
                    }
                }
                for a in 0..m {
                    let mut out = vec![Scalar::zero(); m];
                    out[a] += &coeff_plain;
                    for (x, c) in &coeff_action {
                        let image = apply(&action[*x], &unit(m, a));
                        for (o, y) in out.iter_mut().zip(image) {
                            *o += c * y;
                        }
                    }
                    for (b, value) in out.into_iter().enumerate() {
                        mat[ri * m + b][ci * m + a] = value;
                    }
                }
            }
        }
        let rank = if mat.is_empty() || mat[0].is_empty() {
            0
        } else {
            Matrix::from_rows(mat).unwrap().rank()
        };
        ranks.push(rank);
    }
    ranks.push(0);
    (0..=d)
        .map(|n| {
            let c = (0..d).combinations(n).count() * m;
            c - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 }
        })
        .collect()
}

pub fn oracle(v: &Representation) -> Vec<usize> {
    oracle_dims(v.algebra(), v.action(), v.dim())
}

pub fn catalog_algebras() -> Vec<(&'static str, Arc<LieAlgebra>)> {
    CATALOG_NAMES
        .iter()
        .map(|&n| (n, Arc::new(catalog(n).unwrap())))
        .collect()
}

/// Modules built for an algebra: trivial, adjoint, both twists of the
/// trivial module, and the default family members.
pub fn constructed_modules(l: &Arc<LieAlgebra>) -> Vec<Representation> {
    let k = Representation::trivial(l.clone(), 1);
    let mut out = vec![
        k.clone(),
        Representation::adjoint(l.clone()),
        k.twist(TwistSign::Plus),
        k.twist(TwistSign::Minus),
    ];
    let family = ModuleFamily::default_for(l.clone(), &IrreducibilityConfig::default()).unwrap();
    out.extend(family.members().iter().map(|m| m.module.clone()));
    out
}
