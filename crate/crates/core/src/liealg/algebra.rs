use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::subspace::{unit, Subspace};
use crate::error::{Error, Result};
use crate::exactlin::{format_rational, is_zero_vector, Matrix, Scalar};

/// A finite-dimensional Lie algebra over Q given by structure constants
/// on a fixed basis `e_0, ..., e_{n-1}`.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; antisymmetry
/// supplies the rest. Construction checks indices only. Call
/// [`LieAlgebra::validate`] for the Jacobi identity (catalog
/// constructors already do).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    names: Vec<String>,
    table: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
}

/// First basis triple `(i, j, k)` on which the Jacobi identity fails, with
/// the nonzero value of `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Scalar>,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        let r: Vec<String> = self.residual.iter().map(format_rational).collect();
        write!(
            f,
            "basis triple ({i}, {j}, {k}) has residual ({})",
            r.join(", ")
        )
    }
}

fn check_name(name: &str) -> Result<()> {
    let ok = !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '\'' | '.' | '-'));
    if ok {
        Ok(())
    } else {
        Err(Error::Malformed(format!("bad basis name {name:?}")))
    }
}

impl LieAlgebra {
    /// Builds an algebra from bracket entries `(i, j, k, c)` meaning
    /// `[e_i, e_j]` contains `c * e_k`. Requires `i < j`; repeated
    /// entries accumulate.
    pub fn new<I>(names: Vec<String>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let dim = names.len();
        for (pos, n) in names.iter().enumerate() {
            check_name(n)?;
            if names[..pos].contains(n) {
                return Err(Error::Malformed(format!("duplicate basis name {n:?}")));
            }
        }
        let mut dense: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if i >= j {
                return Err(Error::Malformed(format!(
                    "bracket entry ({i}, {j}) must have i < j"
                )));
            }
            if j >= dim || k >= dim {
                return Err(Error::Malformed(format!(
                    "bracket entry ({i}, {j}) -> {k} out of range for dimension {dim}"
                )));
            }
            *dense
                .entry((i, j))
                .or_default()
                .entry(k)
                .or_insert_with(Scalar::zero) += c;
        }
        let table = dense
            .into_iter()
            .map(|(ij, terms)| {
                let terms: Vec<_> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                (ij, terms)
            })
            .filter(|(_, terms)| !terms.is_empty())
            .collect();
        Ok(Self { names, table })
    }

    /// Like [`LieAlgebra::new`] with names `e0, e1, ...`.
    pub fn with_dim<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        Self::new(default_names(dim), entries)
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            names: default_names(dim),
            table: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Nonzero stored brackets, `((i, j), [(k, c), ...])` with `i < j`.
    pub fn brackets(&self) -> impl Iterator<Item = ((usize, usize), &[(usize, Scalar)])> {
        self.table.iter().map(|(&ij, v)| (ij, v.as_slice()))
    }

    /// Same dimension and structure constants; basis names ignored.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.dim() == other.dim() && self.table == other.table
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::Shape(format!(
                "{} names for dimension {}",
                names.len(),
                self.dim()
            )));
        }
        for n in &names {
            check_name(n)?;
        }
        self.names = names;
        Ok(self)
    }

    /// Sparse `[e_i, e_j]`, respecting antisymmetry.
    pub fn bracket_terms(&self, i: usize, j: usize) -> (Scalar, &[(usize, Scalar)]) {
        use std::cmp::Ordering::*;
        let sign = |s: i64| Scalar::from_integer(s.into());
        match i.cmp(&j) {
            Less => (
                sign(1),
                self.table.get(&(i, j)).map_or(&[][..], Vec::as_slice),
            ),
            Greater => (
                sign(-1),
                self.table.get(&(j, i)).map_or(&[][..], Vec::as_slice),
            ),
            Equal => (sign(1), &[][..]),
        }
    }

    /// Dense `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        let (sign, terms) = self.bracket_terms(i, j);
        for (k, c) in terms {
            v[*k] = &sign * c;
        }
        v
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        let mut out = vec![Scalar::zero(); self.dim()];
        for (&(i, j), terms) in &self.table {
            // [x, y] picks up (x_i y_j - x_j y_i) [e_i, e_j]
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if c.is_zero() {
                continue;
            }
            for (k, s) in terms {
                out[*k] += &c * s;
            }
        }
        Ok(out)
    }

    pub(crate) fn check_vector(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::Shape(format!(
                "vector of length {} in an algebra of dimension {}",
                x.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k`.
    pub fn validate(&self) -> std::result::Result<(), JacobiViolation> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let residual = self.jacobiator(i, j, k);
                    if !is_zero_vector(&residual) {
                        return Err(JacobiViolation {
                            triple: (i, j, k),
                            residual,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let (sign, terms) = self.bracket_terms(a, b);
            for (m, coef) in terms {
                let (sign2, terms2) = self.bracket_terms(*m, c);
                for (l, coef2) in terms2 {
                    out[*l] += &sign * coef * &sign2 * coef2;
                }
            }
        }
        out
    }

    /// Matrix of `y -> [x, y]`; column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_vector(x)?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                let (sign, terms) = self.bracket_terms(i, j);
                for (k, c) in terms {
                    m[(*k, j)] += xi * &sign * c;
                }
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&unit(self.dim(), i))
            .expect("basis vector has the right length")
    }

    /// `Tr(ad e_i)` for each basis element; a linear functional on L.
    pub fn ad_traces(&self) -> Vec<Scalar> {
        (0..self.dim())
            .map(|i| self.ad_basis(i).trace().expect("ad is square"))
            .collect()
    }

    /// `Tr(ad x) = 0` for every `x`; checking the basis suffices by linearity.
    pub fn is_unimodular(&self) -> bool {
        self.ad_traces().iter().all(Zero::is_zero)
    }

    /// Gram matrix `K[i][j] = Tr(ad e_i ad e_j)` of the Killing form.
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim()).map(|i| self.ad_basis(i)).collect();
        let n = self.dim();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].product(&ads[j]).unwrap().trace().unwrap();
                k[(j, i)] = t.clone();
                k[(i, j)] = t;
            }
        }
        k
    }

    /// Span of `[a, b]` over basis vectors `a` of `lhs` and `b` of `rhs`.
    pub fn bracket_subspaces(&self, lhs: &Subspace, rhs: &Subspace) -> Subspace {
        let mut products = Vec::new();
        for a in lhs.basis() {
            for b in rhs.basis() {
                products.push(self.bracket(a, b).expect("subspaces live in L"));
            }
        }
        Subspace::span(self.dim(), products)
    }

    /// `[L, L]`.
    pub fn derived_algebra(&self) -> Subspace {
        Subspace::span(
            self.dim(),
            self.table.keys().map(|&(i, j)| self.bracket_basis(i, j)),
        )
    }

    /// `Z(L)`: kernel of the stacked maps `ad e_j`, since `[x, e_j] = -ad(e_j) x`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let stacked = Matrix::vstack(n, &ads).unwrap();
        Subspace::span(n, stacked.kernel())
    }

    /// Lower central series `A, [A, A], [A, [A, A]], ...` of a subalgebra,
    /// stopped at the first repeated term.
    pub fn lower_central_series_of(&self, sub: &Subspace) -> Vec<Subspace> {
        let mut series = vec![sub.clone()];
        loop {
            let next = self.bracket_subspaces(sub, series.last().unwrap());
            if &next == series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    /// Derived series `A, [A, A], [A^(1), A^(1)], ...` stopped at the first
    /// repeated term.
    pub fn derived_series_of(&self, sub: &Subspace) -> Vec<Subspace> {
        let mut series = vec![sub.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_subspaces(last, last);
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn lower_central_series(&self) -> Vec<Subspace> {
        self.lower_central_series_of(&Subspace::full(self.dim()))
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        self.derived_series_of(&Subspace::full(self.dim()))
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_algebra().is_full()
    }

    pub fn is_semisimple(&self) -> bool {
        self.killing_form().rank() == self.dim()
    }

    /// Solvable radical, as the Killing-orthogonal complement of `[L, L]`.
    /// Correct in characteristic zero.
    pub fn radical(&self) -> Subspace {
        let n = self.dim();
        let derived = self.derived_algebra();
        if derived.is_zero() {
            return Subspace::full(n);
        }
        let killing = self.killing_form();
        // x is orthogonal to every d in [L, L]  <=>  (D K) x = 0
        let d = Matrix::from_rows(derived.basis().to_vec()).unwrap();
        let constraints = d.product(&killing).unwrap();
        Subspace::span(n, constraints.kernel())
    }

    /// `[L, I] ⊆ I`.
    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        sub.ambient_dim() == self.dim()
            && self
                .bracket_subspaces(&Subspace::full(self.dim()), sub)
                .is_subspace_of(sub)
    }
}

pub(crate) fn default_names(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{i}")).collect()
}
