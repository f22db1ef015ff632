use num_traits::Zero;

use crate::exactlin::{is_zero_vector, Matrix, Scalar};

/// A linear subspace of `Q^n`, stored as a reduced row echelon basis.
///
/// The canonical form makes two subspaces equal exactly when their
/// basis lists are equal, so the derived `PartialEq` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit(ambient, i)))
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let rows: Vec<Vec<Scalar>> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector length vs ambient dimension"))
            .filter(|v| !is_zero_vector(v))
            .collect();
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let m = Matrix::from_rows(rows).expect("uniform row length");
        let ech = m.echelon();
        let basis = (0..ech.pivots.len())
            .map(|r| ech.reduced.row(r).to_vec())
            .collect();
        Self {
            ambient,
            basis,
            pivots: ech.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Coordinates `0..ambient` that are not pivots, in increasing order.
    /// Their unit vectors span a complement.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|i| !self.pivots.contains(i))
            .collect()
    }

    /// `v` minus the unique element of the subspace agreeing with `v` on
    /// the pivot coordinates. Zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (x, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &c * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && is_zero_vector(&self.reduce(v))
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        // x = sum a_i u_i = sum b_j w_j  <=>  [U | -W] (a, b) = 0
        let mut columns: Vec<Vec<Scalar>> = self.basis.clone();
        columns.extend(other.basis.iter().map(|w| w.iter().map(|x| -x).collect()));
        let m = Matrix::from_columns(self.ambient, &columns).expect("uniform length");
        let k = self.basis.len();
        Self::span(
            self.ambient,
            m.kernel().into_iter().map(|coeffs| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (c, u) in coeffs[..k].iter().zip(&self.basis) {
                    for (x, y) in v.iter_mut().zip(u) {
                        *x += c * y;
                    }
                }
                v
            }),
        )
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = num_traits::One::one();
    v
}
