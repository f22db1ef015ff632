use super::{LieAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};

/// Structural predicates of a Lie algebra, computed exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFlags {
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub semisimple: bool,
    pub perfect: bool,
    pub unimodular: bool,
    pub killing_form: Matrix,
    pub radical: Subspace,
    pub center: Subspace,
    pub derived: Subspace,
}

/// Outcome of the "semisimple plus nilpotent" decomposition test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsNilpotentReport {
    pub holds: bool,
    pub radical: Subspace,
    /// Whether the radical is nilpotent as a Lie algebra.
    pub radical_nilpotent: bool,
    /// Number of steps for the radical's lower central series to reach
    /// zero, or to stabilize if it never does.
    pub radical_lcs_length: usize,
    /// `[L, Rad] == [Rad, Rad]`, i.e. a Levi factor acts trivially on the radical.
    pub levi_acts_trivially: bool,
}

/// `L / I` on the complement basis `{e_c : c not a pivot of I}`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub ideal: Subspace,
    pub complement: Vec<usize>,
    /// `dim(L/I) x dim(L)` matrix of the canonical projection.
    pub projection: Matrix,
}

impl Quotient {
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.ideal.reduce(v);
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }
}

impl LieAlgebra {
    pub fn structure_flags(&self) -> StructureFlags {
        StructureFlags {
            abelian: self.is_abelian(),
            nilpotent: self.is_nilpotent(),
            solvable: self.is_solvable(),
            semisimple: self.is_semisimple(),
            perfect: self.is_perfect(),
            unimodular: self.is_unimodular(),
            killing_form: self.killing_form(),
            radical: self.radical(),
            center: self.center(),
            derived: self.derived_algebra(),
        }
    }

    /// Decides whether L is the direct sum of a semisimple and a nilpotent
    /// algebra, without constructing a Levi factor.
    ///
    /// With `L = S ⋉ R`, `[L, R] = [S, R] + [R, R]`. If `R` is nilpotent and
    /// `[S, R] ⊆ [R, R]`, then `S` acts trivially on an `S`-stable complement
    /// of `[R, R]`, which generates `R`, so `[S, R] = 0`.
    pub fn is_ss_plus_nilpotent(&self) -> SsNilpotentReport {
        let radical = self.radical();
        let lcs = self.lower_central_series_of(&radical);
        let radical_nilpotent = lcs.last().unwrap().is_zero();
        let full = Subspace::full(self.dim());
        let levi_acts_trivially =
            self.bracket_subspaces(&full, &radical) == self.bracket_subspaces(&radical, &radical);
        SsNilpotentReport {
            holds: radical_nilpotent && levi_acts_trivially,
            radical,
            radical_nilpotent,
            radical_lcs_length: lcs.len() - 1,
            levi_acts_trivially,
        }
    }

    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if ideal.ambient_dim() != self.dim() {
            return Err(Error::Shape(format!(
                "subspace of Q^{} in an algebra of dimension {}",
                ideal.ambient_dim(),
                self.dim()
            )));
        }
        if !self.is_ideal(ideal) {
            return Err(Error::Domain("subspace is not an ideal".into()));
        }
        let complement = ideal.complement_coordinates();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = ideal.reduce(v);
            complement.iter().map(|&c| r[c].clone()).collect()
        };
        let mut entries = Vec::new();
        for (a, &ca) in complement.iter().enumerate() {
            for (b, &cb) in complement.iter().enumerate().skip(a + 1) {
                for (k, c) in project(&self.bracket_basis(ca, cb)).into_iter().enumerate() {
                    entries.push((a, b, k, c));
                }
            }
        }
        let names = complement
            .iter()
            .map(|&c| self.names()[c].clone())
            .collect();
        let algebra = LieAlgebra::new(names, entries)?;
        let columns: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|i| project(&super::subspace::unit(self.dim(), i)))
            .collect();
        let projection = Matrix::from_columns(complement.len(), &columns)?;
        Ok(Quotient {
            algebra,
            ideal: ideal.clone(),
            complement,
            projection,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::catalog;
    use crate::exactlin::int;

    #[test]
    fn sl2_flags() {
        let f = catalog("sl2").unwrap().structure_flags();
        assert!(f.semisimple && f.perfect && f.unimodular);
        assert!(!f.solvable && !f.nilpotent);
        assert!(f.radical.is_zero() && f.center.is_zero());
    }

    #[test]
    fn heis3_flags() {
        let l = catalog("heis3").unwrap();
        let f = l.structure_flags();
        assert!(f.nilpotent && f.solvable && !f.abelian && !f.semisimple);
        assert!(f.radical.is_full());
        assert_eq!(f.center.basis(), &[vec![int(0), int(0), int(1)]]);
        // oracle: L > span(z) > 0
        let lcs = l.lower_central_series();
        assert_eq!(
            lcs.iter().map(|s| s.dim()).collect::<Vec<_>>(),
            vec![3, 1, 0]
        );
    }

    #[test]
    fn direct_sum_flags_blockwise() {
        let l = catalog("sl2_plus_heis3").unwrap();
        let f = l.structure_flags();
        assert!(!f.semisimple && !f.perfect);
        let heis_part =
            crate::liealg::Subspace::span(6, (3..6).map(|i| crate::liealg::subspace::unit(6, i)));
        assert_eq!(f.radical, heis_part);
    }

    #[test]
    fn ss_plus_nilpotent_cases() {
        assert!(
            catalog("sl2_plus_heis3")
                .unwrap()
                .is_ss_plus_nilpotent()
                .holds
        );
        let aff = catalog("aff1").unwrap().is_ss_plus_nilpotent();
        assert!(!aff.holds);
        assert!(aff.radical.is_full() && !aff.radical_nilpotent);
        let semi = catalog("sl2_semidirect_v1").unwrap().is_ss_plus_nilpotent();
        assert!(!semi.holds);
        assert!(semi.radical_nilpotent && !semi.levi_acts_trivially);
        assert_eq!(semi.radical.dim(), 2);
        let h = catalog("heis3").unwrap().is_ss_plus_nilpotent();
        assert!(h.holds);
        assert_eq!(h.radical_lcs_length, 2);
    }

    #[test]
    fn quotient_by_radical_is_sl2() {
        let l = catalog("sl2_semidirect_v1").unwrap();
        let q = l.quotient(&l.radical()).unwrap();
        assert!(q.algebra.same_structure(&catalog("sl2").unwrap()));
        assert_eq!(q.complement, vec![0, 1, 2]);
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let l = catalog("sl2").unwrap();
        let h = crate::liealg::Subspace::span(3, [crate::liealg::subspace::unit(3, 0)]);
        assert!(l.quotient(&h).is_err());
    }
}
