use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{int, Matrix, Scalar};
use crate::liealg::{catalog, direct_sum, LieAlgebra, Subspace};

/// A finite-dimensional module over a Lie algebra, given by one action
/// matrix `ρ(e_i)` per basis element of the algebra.
///
/// Constructors check shapes; [`Representation::validate`] checks the
/// homomorphism law. Equality compares the algebra's structure constants
/// and the action matrices; the label is for reports only.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<LieAlgebra>,
    dim: usize,
    action: Vec<Matrix>,
    label: String,
}

/// First basis pair `(i, j)` with `ρ([e_i, e_j]) ≠ [ρ(e_i), ρ(e_j)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismViolation {
    pub pair: (usize, usize),
    pub residual: Matrix,
}

impl fmt::Display for HomomorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.pair;
        write!(
            f,
            "rho([e{i}, e{j}]) differs from the commutator of rho(e{i}) and rho(e{j})"
        )
    }
}

/// Direction of the trace shift in [`Representation::twist`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistSign {
    /// `ρ(x) + Tr(ad x)·1`, the "minus-twisted" module.
    Plus,
    /// `ρ(x) - Tr(ad x)·1`, the twisted module.
    Minus,
}

impl TwistSign {
    pub fn opposite(self) -> Self {
        match self {
            TwistSign::Plus => TwistSign::Minus,
            TwistSign::Minus => TwistSign::Plus,
        }
    }
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_structure(&other.algebra)
            && self.dim == other.dim
            && self.action == other.action
    }
}

impl Eq for Representation {}

impl Representation {
    pub fn new(algebra: Arc<LieAlgebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::Shape(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some((i, m)) = action
            .iter()
            .enumerate()
            .find(|(_, m)| m.rows() != dim || m.cols() != dim)
        {
            return Err(Error::Shape(format!(
                "action matrix {i} is {}x{}, module dimension is {dim}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(Self {
            algebra,
            dim,
            action,
            label: String::from("V"),
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// The trivial module `K^dim`.
    pub fn trivial(algebra: Arc<LieAlgebra>, dim: usize) -> Self {
        let action = vec![Matrix::zeros(dim, dim); algebra.dim()];
        Self {
            algebra,
            dim,
            action,
            label: if dim == 1 {
                "K".into()
            } else {
                format!("K^{dim}")
            },
        }
    }

    /// `ρ(e_i) = ad e_i`.
    pub fn adjoint(algebra: Arc<LieAlgebra>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.ad_basis(i)).collect();
        Self {
            dim: algebra.dim(),
            algebra,
            action,
            label: "adjoint".into(),
        }
    }

    /// One-dimensional module `ρ(e_i) = [λ_i]`. The functional must vanish
    /// on `[L, L]`.
    pub fn character(algebra: Arc<LieAlgebra>, lambda: &[Scalar]) -> Result<Self> {
        algebra.check_vector(lambda)?;
        for d in algebra.derived_algebra().basis() {
            let value = d
                .iter()
                .zip(lambda)
                .fold(Scalar::zero(), |acc, (a, b)| acc + a * b);
            if !value.is_zero() {
                return Err(Error::Constraint(
                    "functional does not vanish on the derived subalgebra".into(),
                ));
            }
        }
        let action = lambda.iter().map(|x| Matrix::scalar(1, x)).collect();
        let label = format!(
            "chi({})",
            lambda
                .iter()
                .map(crate::exactlin::format_rational)
                .collect::<Vec<_>>()
                .join(",")
        );
        Ok(Self {
            algebra,
            dim: 1,
            action,
            label,
        })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `ρ(x)` for a coordinate vector `x`.
    pub fn act(&self, x: &[Scalar]) -> Result<Matrix> {
        self.algebra.check_vector(x)?;
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (c, a) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                m = m.add(&a.scale(c))?;
            }
        }
        Ok(m)
    }

    /// Checks `ρ([e_i, e_j]) = ρ(e_i)ρ(e_j) - ρ(e_j)ρ(e_i)` for all `i < j`.
    pub fn validate(&self) -> std::result::Result<(), HomomorphismViolation> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self
                    .act(&self.algebra.bracket_basis(i, j))
                    .expect("bracket has algebra dimension");
                let rhs = self.action[i].commutator(&self.action[j]).expect("square");
                if lhs != rhs {
                    return Err(HomomorphismViolation {
                        pair: (i, j),
                        residual: lhs.sub(&rhs).unwrap(),
                    });
                }
            }
        }
        Ok(())
    }

    pub(crate) fn check_same_algebra(&self, other: &Representation) -> Result<()> {
        if !self.algebra.same_structure(&other.algebra) {
            return Err(Error::Domain("modules over different algebras".into()));
        }
        Ok(())
    }

    pub fn is_trivial(&self) -> bool {
        self.action.iter().all(Matrix::is_zero)
    }

    /// `V^L`, the common kernel of all `ρ(e_i)`.
    pub fn invariants(&self) -> Subspace {
        let stacked = Matrix::vstack(self.dim, &self.action).unwrap();
        Subspace::span(self.dim, stacked.kernel())
    }

    pub fn has_trivial_submodule(&self) -> bool {
        !self.invariants().is_zero()
    }

    /// `V*` with `ρ*(x) = -ρ(x)^T`.
    pub fn dual(&self) -> Self {
        Self {
            algebra: self.algebra.clone(),
            dim: self.dim,
            action: self.action.iter().map(|m| m.transpose().neg()).collect(),
            label: format!("{}*", self.label),
        }
    }

    /// Shifts the action by `± Tr(ad x)·1`.
    pub fn twist(&self, sign: TwistSign) -> Self {
        let traces = self.algebra.ad_traces();
        let action = self
            .action
            .iter()
            .zip(&traces)
            .map(|(m, t)| {
                let shift = match sign {
                    TwistSign::Plus => t.clone(),
                    TwistSign::Minus => -t,
                };
                m.add(&Matrix::scalar(self.dim, &shift)).unwrap()
            })
            .collect();
        let suffix = match sign {
            TwistSign::Plus => "^-tw",
            TwistSign::Minus => "^tw",
        };
        Self {
            algebra: self.algebra.clone(),
            dim: self.dim,
            action,
            label: format!("({}){suffix}", self.label),
        }
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Self> {
        self.check_same_algebra(other)?;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Ok(Self {
            algebra: self.algebra.clone(),
            dim: self.dim + other.dim,
            action,
            label: format!("{} + {}", self.label, other.label),
        })
    }

    /// `V ⊗ W` with `ρ(x) = ρ_V(x) ⊗ 1 + 1 ⊗ ρ_W(x)`.
    pub fn tensor(&self, other: &Representation) -> Result<Self> {
        self.check_same_algebra(other)?;
        let (iv, iw) = (Matrix::identity(self.dim), Matrix::identity(other.dim));
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.kron(&iw).add(&iv.kron(b)).unwrap())
            .collect();
        Ok(Self {
            algebra: self.algebra.clone(),
            dim: self.dim * other.dim,
            action,
            label: format!("{} (x) {}", self.label, other.label),
        })
    }

    /// `V ⊠ W` over `L1 ⊕ L2`: `L1` acts on the first factor, `L2` on the second.
    pub fn outer_tensor(&self, other: &Representation) -> Self {
        let algebra = Arc::new(direct_sum(&self.algebra, &other.algebra));
        let (iv, iw) = (Matrix::identity(self.dim), Matrix::identity(other.dim));
        let action = self
            .action
            .iter()
            .map(|a| a.kron(&iw))
            .chain(other.action.iter().map(|b| iv.kron(b)))
            .collect();
        Self {
            algebra,
            dim: self.dim * other.dim,
            action,
            label: format!("{} [x] {}", self.label, other.label),
        }
    }

    /// The submodule on an invariant subspace, in echelon-basis coordinates.
    pub fn restrict(&self, sub: &Subspace) -> Result<Self> {
        if sub.ambient_dim() != self.dim {
            return Err(Error::Shape(
                "subspace of the wrong ambient dimension".into(),
            ));
        }
        let k = sub.dim();
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let mut columns = Vec::with_capacity(k);
            for b in sub.basis() {
                let image = m.apply(b)?;
                columns.push(
                    sub.coordinates(&image)
                        .ok_or_else(|| Error::Domain("subspace is not invariant".into()))?,
                );
            }
            action.push(Matrix::from_columns(k, &columns)?);
        }
        Ok(Self {
            algebra: self.algebra.clone(),
            dim: k,
            action,
            label: format!("sub({})", self.label),
        })
    }

    /// `V / U` for an invariant subspace `U`, on the complement coordinates of `U`.
    pub fn quotient_module(&self, sub: &Subspace) -> Result<Self> {
        if sub.ambient_dim() != self.dim {
            return Err(Error::Shape(
                "subspace of the wrong ambient dimension".into(),
            ));
        }
        let complement = sub.complement_coordinates();
        let k = complement.len();
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            if sub
                .basis()
                .iter()
                .any(|b| !sub.contains(&m.apply(b).unwrap()))
            {
                return Err(Error::Domain("subspace is not invariant".into()));
            }
            let columns: Vec<Vec<Scalar>> = complement
                .iter()
                .map(|&c| {
                    let image = sub.reduce(&m.column(c));
                    complement.iter().map(|&d| image[d].clone()).collect()
                })
                .collect();
            action.push(Matrix::from_columns(k, &columns)?);
        }
        Ok(Self {
            algebra: self.algebra.clone(),
            dim: k,
            action,
            label: format!("quot({})", self.label),
        })
    }

    /// Lifts a module of `L/I` to `L` by letting `I` act as zero. The
    /// quotient is taken on the complement of `I`'s pivot coordinates, and
    /// `vbar` must be a module over an algebra with that structure.
    pub fn lift_through_quotient(
        algebra: Arc<LieAlgebra>,
        ideal: &Subspace,
        vbar: &Representation,
    ) -> Result<Self> {
        let q = algebra.quotient(ideal)?;
        if !q.algebra.same_structure(vbar.algebra()) {
            return Err(Error::Domain(
                "module is not over the quotient algebra L/I".into(),
            ));
        }
        let mut action = Vec::with_capacity(algebra.dim());
        for i in 0..algebra.dim() {
            let coeffs = q.projection.column(i);
            action.push(vbar.act(&coeffs)?);
        }
        Ok(Self {
            algebra,
            dim: vbar.dim,
            action,
            label: format!("lift({})", vbar.label),
        })
    }
}

/// The `(m+1)`-dimensional irreducible module of `sl2` with highest weight
/// `m`, over the catalog basis `h, e, f`.
///
/// On the weight basis `v_0..v_m`: `h v_k = (m-2k) v_k`, `f v_k = v_{k+1}`,
/// `e v_k = k(m-k+1) v_{k-1}`.
pub fn sl2_irreducible(m: usize) -> Representation {
    let sl2 = Arc::new(catalog("sl2").expect("sl2 is in the catalog"));
    sl2_irreducible_on(sl2, m).expect("catalog sl2 has the standard table")
}

/// Same as [`sl2_irreducible`] over any algebra with the structure
/// constants of the catalog `sl2`.
pub fn sl2_irreducible_on(algebra: Arc<LieAlgebra>, m: usize) -> Result<Representation> {
    if !algebra.same_structure(&catalog("sl2")?) {
        return Err(Error::Domain("algebra does not have the sl2 table".into()));
    }
    let n = m + 1;
    let mut h = Matrix::zeros(n, n);
    let mut e = Matrix::zeros(n, n);
    let mut f = Matrix::zeros(n, n);
    for k in 0..n {
        h[(k, k)] = int(m as i64 - 2 * k as i64);
        if k + 1 < n {
            f[(k + 1, k)] = int(1);
        }
        if k > 0 {
            e[(k - 1, k)] = int((k * (m - k + 1)) as i64);
        }
    }
    Ok(Representation::new(algebra, n, vec![h, e, f])?.with_label(format!("V({m})")))
}
