use std::collections::HashMap;

use itertools::Itertools;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::liealg::{LieAlgebra, Subspace};
use crate::repmod::Representation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyOptions {
    /// Largest `dim C^n` that will be built.
    pub column_ceiling: usize,
    /// Also return cocycles spanning a complement of the coboundaries.
    pub representatives: bool,
}

impl Default for CohomologyOptions {
    fn default() -> Self {
        Self {
            column_ceiling: 20_000,
            representatives: false,
        }
    }
}

/// The Chevalley–Eilenberg complex `C^n = Hom(Λ^n L, V)`.
///
/// A basis of `C^n` is indexed by pairs (increasing `n`-subset of the
/// algebra basis, module coordinate), subsets in lexicographic order and
/// the module coordinate varying fastest. The differential is
///
/// ```text
/// (df)(x_0..x_n) = Σ_i (-1)^i ρ(x_i) f(.., x̂_i, ..)
///                + Σ_{i<j} (-1)^{i+j} f([x_i, x_j], .., x̂_i, .., x̂_j, ..)
/// ```
#[derive(Clone, Debug)]
pub struct CochainComplex {
    module: Representation,
    subsets: Vec<Vec<Vec<usize>>>,
    coboundaries: Vec<Matrix>,
}

fn mask(s: &[usize]) -> u64 {
    s.iter().fold(0u64, |m, &i| m | (1 << i))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// `d_n : C^n -> C^{n+1}`.
fn coboundary(
    algebra: &LieAlgebra,
    module: &Representation,
    source: &[Vec<usize>],
    target: &[Vec<usize>],
) -> Matrix {
    let m = module.dim();
    let index: HashMap<u64, usize> = source
        .iter()
        .enumerate()
        .map(|(i, s)| (mask(s), i))
        .collect();
    let mut d = Matrix::zeros(target.len() * m, source.len() * m);
    let sign = |p: usize| {
        if p % 2 == 0 {
            Scalar::from_integer(1.into())
        } else {
            Scalar::from_integer((-1).into())
        }
    };

    for (t_idx, t) in target.iter().enumerate() {
        // action term
        for (i, &ti) in t.iter().enumerate() {
            let s_idx = index[&(mask(t) & !(1 << ti))];
            let rho = &module.action()[ti];
            let s = sign(i);
            for b in 0..m {
                for a in 0..m {
                    let r = &rho[(b, a)];
                    if !r.is_zero() {
                        d[(t_idx * m + b, s_idx * m + a)] += &s * r;
                    }
                }
            }
        }
        // bracket term
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let (bsign, terms) = algebra.bracket_terms(t[i], t[j]);
                if terms.is_empty() {
                    continue;
                }
                let rest: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != i && p != j)
                    .map(|(_, &x)| x)
                    .collect();
                for (k, c) in terms {
                    if rest.contains(k) {
                        continue;
                    }
                    // moving e_k from the front to its sorted place
                    let pos = rest.iter().filter(|&&r| r < *k).count();
                    let s_idx = index[&(mask(&rest) | (1 << k))];
                    let coef = sign(i + j + pos) * &bsign * c;
                    for b in 0..m {
                        d[(t_idx * m + b, s_idx * m + b)] += &coef;
                    }
                }
            }
        }
    }
    d
}

impl CochainComplex {
    /// Builds every coboundary of the complex for `module` over its own
    /// algebra and checks `d_{n+1} d_n = 0` exactly.
    pub fn new(module: &Representation, options: &CohomologyOptions) -> Result<Self> {
        let algebra = module.algebra().clone();
        let d = algebra.dim();
        if d > 63 {
            return Err(Error::Resource(format!("algebra dimension {d} exceeds 63")));
        }
        for n in 0..=d {
            let cols = binomial(d, n).saturating_mul(module.dim());
            if cols > options.column_ceiling {
                return Err(Error::Resource(format!(
                    "dim C^{n} = {cols} exceeds the column ceiling {}",
                    options.column_ceiling
                )));
            }
        }
        let subsets: Vec<Vec<Vec<usize>>> =
            (0..=d).map(|n| (0..d).combinations(n).collect()).collect();
        let coboundaries: Vec<Matrix> = (0..d)
            .into_par_iter()
            .map(|n| coboundary(&algebra, module, &subsets[n], &subsets[n + 1]))
            .collect();
        for n in 0..d.saturating_sub(1) {
            let dd = coboundaries[n + 1].product(&coboundaries[n])?;
            if !dd.is_zero() {
                return Err(Error::Internal(format!("d_{} d_{n} is not zero", n + 1)));
            }
        }
        Ok(Self {
            module: module.clone(),
            subsets,
            coboundaries,
        })
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn algebra_dim(&self) -> usize {
        self.subsets.len() - 1
    }

    pub fn cochain_dim(&self, n: usize) -> usize {
        self.subsets
            .get(n)
            .map_or(0, |s| s.len() * self.module.dim())
    }

    /// `d_n` for `0 <= n < dim L`.
    pub fn coboundary(&self, n: usize) -> &Matrix {
        &self.coboundaries[n]
    }

    pub fn coboundaries(&self) -> &[Matrix] {
        &self.coboundaries
    }

    /// Subset of basis indices labelling block `i` of `C^n`.
    pub fn subset(&self, n: usize, i: usize) -> &[usize] {
        &self.subsets[n][i]
    }

    pub fn cohomology(&self, options: &CohomologyOptions) -> CohomologyReport {
        let d = self.algebra_dim();
        let ranks: Vec<usize> = (0..=d)
            .into_par_iter()
            .map(|n| {
                if n < d {
                    self.coboundaries[n].rank()
                } else {
                    0
                }
            })
            .collect();
        let cochain_dims: Vec<usize> = (0..=d).map(|n| self.cochain_dim(n)).collect();
        let dims = (0..=d)
            .map(|n| {
                let incoming = if n == 0 { 0 } else { ranks[n - 1] };
                cochain_dims[n] - ranks[n] - incoming
            })
            .collect();
        let representatives = options.representatives.then(|| {
            (0..=d)
                .into_par_iter()
                .map(|n| self.representatives(n))
                .collect()
        });
        CohomologyReport {
            cochain_dims,
            ranks,
            dims,
            representatives,
        }
    }

    /// Cocycles of degree `n` whose classes form a basis of `H^n`.
    fn representatives(&self, n: usize) -> Vec<Vec<Scalar>> {
        let size = self.cochain_dim(n);
        let cocycles = if n < self.algebra_dim() {
            self.coboundaries[n].kernel()
        } else {
            Subspace::full(size).basis().to_vec()
        };
        let mut span = if n == 0 {
            Subspace::zero(size)
        } else {
            let prev = &self.coboundaries[n - 1];
            Subspace::span(size, (0..prev.cols()).map(|j| prev.column(j)))
        };
        let mut reps = Vec::new();
        for z in cocycles {
            if !span.contains(&z) {
                span = span.sum(&Subspace::span(size, [z.clone()]));
                reps.push(z);
            }
        }
        reps
    }
}

/// Per-degree data of `H^*(L, V)`, `n = 0 ..= dim L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub cochain_dims: Vec<usize>,
    /// `rank d_n`; the last entry (`d_{dim L} = 0`) is always zero.
    pub ranks: Vec<usize>,
    pub dims: Vec<usize>,
    pub representatives: Option<Vec<Vec<Vec<Scalar>>>>,
}

impl CohomologyReport {
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(n, &h)| if n % 2 == 0 { h as i64 } else { -(h as i64) })
            .sum()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&h| h == 0)
    }
}

/// `C^*(L, V)` for a module given over an algebra with the same structure
/// constants as `algebra`.
pub fn build_complex(
    algebra: &LieAlgebra,
    module: &Representation,
    options: &CohomologyOptions,
) -> Result<CochainComplex> {
    if !algebra.same_structure(module.algebra()) {
        return Err(Error::Domain("module is over a different algebra".into()));
    }
    CochainComplex::new(module, options)
}

/// `dim H^n(L, V)` for every `n`.
pub fn cohomology_dims(
    module: &Representation,
    options: &CohomologyOptions,
) -> Result<CohomologyReport> {
    Ok(CochainComplex::new(module, options)?.cohomology(options))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;
    use crate::liealg::catalog;
    use crate::repmod::sl2_irreducible;
    use std::sync::Arc;

    fn trivial(name: &str) -> Representation {
        Representation::trivial(Arc::new(catalog(name).unwrap()), 1)
    }

    fn opts() -> CohomologyOptions {
        CohomologyOptions::default()
    }

    #[test]
    fn abelian_trivial_has_zero_differentials() {
        let c = CochainComplex::new(&trivial("abelian_3"), &opts()).unwrap();
        assert!(c.coboundaries().iter().all(Matrix::is_zero));
        let h = c.cohomology(&opts());
        assert_eq!(h.dims, vec![1, 3, 3, 1]);
    }

    #[test]
    fn cochain_dims_of_sl2_adjoint_sized_module() {
        let c = CochainComplex::new(&sl2_irreducible(2), &opts()).unwrap();
        let dims: Vec<_> = (0..=3).map(|n| c.cochain_dim(n)).collect();
        assert_eq!(dims, vec![3, 9, 9, 3]);
    }

    #[test]
    fn heis3_d1_is_dual_of_bracket() {
        let c = CochainComplex::new(&trivial("heis3"), &opts()).unwrap();
        let d1 = c.coboundary(1);
        assert_eq!(d1.rank(), 1);
        // (df)(x, y) = -f([x, y]) = -f(z)
        assert_eq!(c.subset(2, 0), &[0, 1]);
        assert_eq!(d1[(0, 2)], int(-1));
    }

    #[test]
    fn sl2_third_cohomology() {
        let h = cohomology_dims(&trivial("sl2"), &opts()).unwrap();
        assert_eq!(h.dims, vec![1, 0, 0, 1]);
    }

    #[test]
    fn ceiling_is_enforced() {
        let small = CohomologyOptions {
            column_ceiling: 2,
            ..opts()
        };
        assert!(matches!(
            cohomology_dims(&trivial("sl2"), &small),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn mismatched_algebra_is_rejected() {
        let l = catalog("heis3").unwrap();
        assert!(matches!(
            build_complex(&l, &sl2_irreducible(1), &opts()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn representatives_are_non_cobounding_cocycles() {
        let with = CohomologyOptions {
            representatives: true,
            ..opts()
        };
        let module = trivial("heis3");
        let c = CochainComplex::new(&module, &with).unwrap();
        let h = c.cohomology(&with);
        let reps = h.representatives.as_ref().unwrap();
        for n in 0..=3 {
            assert_eq!(reps[n].len(), h.dims[n]);
            for z in &reps[n] {
                if n < 3 {
                    assert!(crate::exactlin::is_zero_vector(
                        &c.coboundary(n).apply(z).unwrap()
                    ));
                }
            }
        }
    }

    #[test]
    fn zero_dimensional_algebra() {
        let k = Representation::trivial(Arc::new(LieAlgebra::abelian(0)), 2);
        let h = cohomology_dims(&k, &opts()).unwrap();
        assert_eq!(h.dims, vec![2]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
