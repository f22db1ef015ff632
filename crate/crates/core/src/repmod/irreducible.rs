//! Irreducibility testing over Q by Norton's criterion.
//!
//! Pick `θ = p(a)` for an element `a` of the enveloping algebra and a
//! polynomial `p` irreducible over Q, such that `ker θ` has dimension
//! `deg p`. Then `ker θ` is a simple `Q[a]`-module, so every nonzero
//! kernel vector spins up to the same submodule. If that spin is all of
//! `V`, and a kernel vector of `θ^T` spins up to all of `V*`, no proper
//! submodule exists: one meeting `ker θ` would contain the first spin,
//! and one avoiding it would have an annihilator containing `ker θ^T`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Representation;
use crate::error::{Error, Result};
use crate::exactlin::{int, Matrix, Scalar};
use crate::liealg::Subspace;

/// Search budget for [`Representation::is_irreducible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityConfig {
    pub seed: u64,
    /// Longest word in the generators used as a candidate element.
    pub max_word_len: usize,
    /// Random rational combinations tried after the plain words.
    pub random_trials: usize,
}

impl Default for IrreducibilityConfig {
    fn default() -> Self {
        Self {
            seed: 0x5eed,
            max_word_len: 4,
            random_trials: 64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
    /// The search budget ran out before a certificate was found.
    Undecided,
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, Irreducibility::Undecided)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Irreducibility::Irreducible => "irreducible",
            Irreducibility::Reducible(_) => "reducible",
            Irreducibility::Undecided => "undecided",
        }
    }
}

/// Smallest subspace containing `seed` and closed under `gens`.
pub fn spin(dim: usize, seed: &[Scalar], gens: &[Matrix]) -> Subspace {
    let mut span = Subspace::span(dim, [seed.to_vec()]);
    let mut frontier = vec![seed.to_vec()];
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w = g.apply(&v).expect("square generator");
            if !span.contains(&w) {
                span = span.sum(&Subspace::span(dim, [w.clone()]));
                frontier.push(w);
            }
        }
    }
    span
}

/// Monic polynomials tried as `p` in `θ = p(a)`, as coefficient lists
/// (constant term first). Linear factors first, then quadratics
/// `x² + bx + c` whose discriminant is not a rational square.
fn candidate_polynomials() -> Vec<Vec<i64>> {
    let mut polys: Vec<Vec<i64>> = [0, 1, -1, 2, -2, 3, -3]
        .iter()
        .map(|&r| vec![-r, 1])
        .collect();
    for b in -2i64..=2 {
        for c in -3i64..=3 {
            let disc = b * b - 4 * c;
            let square = disc >= 0 && {
                let s = (disc as f64).sqrt().round() as i64;
                s * s == disc
            };
            if !square {
                polys.push(vec![c, b, 1]);
            }
        }
    }
    polys
}

fn poly_at(coeffs: &[i64], a: &Matrix) -> Matrix {
    // Horner
    let n = a.rows();
    let mut acc = Matrix::zeros(n, n);
    for &c in coeffs.iter().rev() {
        acc = acc
            .product(a)
            .unwrap()
            .add(&Matrix::scalar(n, &int(c)))
            .unwrap();
    }
    acc
}

struct Search<'a> {
    rep: &'a Representation,
    gens: Vec<Matrix>,
    gens_t: Vec<Matrix>,
    polys: Vec<Vec<i64>>,
}

impl Search<'_> {
    /// Runs Norton's test for one element `a`; `None` if no candidate
    /// polynomial gives a kernel of the right size.
    fn try_element(&self, a: &Matrix) -> Option<Irreducibility> {
        let n = self.rep.dim();
        for p in &self.polys {
            let theta = poly_at(p, a);
            let kernel = theta.kernel();
            if kernel.len() != p.len() - 1 {
                continue;
            }
            let s = spin(n, &kernel[0], &self.gens);
            if !s.is_full() {
                return Some(Irreducibility::Reducible(s));
            }
            let kernel_t = theta.transpose().kernel();
            let s_t = spin(n, &kernel_t[0], &self.gens_t);
            if !s_t.is_full() {
                // annihilator of a proper submodule of V* is a proper submodule of V
                let rows = Matrix::from_rows(s_t.basis().to_vec()).unwrap();
                return Some(Irreducibility::Reducible(Subspace::span(n, rows.kernel())));
            }
            return Some(Irreducibility::Irreducible);
        }
        None
    }
}

impl Representation {
    /// Decides irreducibility, returning a witness subspace when reducible.
    ///
    /// Deterministic for a given configuration. Errors on `dim V = 0`.
    pub fn is_irreducible(&self, config: &IrreducibilityConfig) -> Result<Irreducibility> {
        let n = self.dim();
        if n == 0 {
            return Err(Error::Domain(
                "zero module has no irreducibility status".into(),
            ));
        }
        if n == 1 {
            return Ok(Irreducibility::Irreducible);
        }
        let gens: Vec<Matrix> = self
            .action()
            .iter()
            .filter(|m| !m.is_zero())
            .cloned()
            .collect();
        // cheap witnesses first: spins of unit vectors
        for i in 0..n {
            let mut e = vec![Scalar::zero(); n];
            e[i] = int(1);
            let s = spin(n, &e, &gens);
            if !s.is_full() {
                return Ok(Irreducibility::Reducible(s));
            }
        }
        let invariants = self.invariants();
        if !invariants.is_zero() {
            return Ok(Irreducibility::Reducible(invariants));
        }
        let search = Search {
            rep: self,
            gens_t: gens.iter().map(Matrix::transpose).collect(),
            gens: gens.clone(),
            polys: candidate_polynomials(),
        };

        let mut seen = std::collections::HashSet::new();
        let mut words: Vec<Matrix> = Vec::new();
        for g in &gens {
            if seen.insert(g.clone()) {
                if let Some(verdict) = search.try_element(g) {
                    return Ok(verdict);
                }
                words.push(g.clone());
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let short_words = words.clone();
        for _ in 0..config.random_trials {
            let mut a = Matrix::zeros(n, n);
            for w in &short_words {
                let c = rng.gen_range(-3i64..=3);
                if c != 0 {
                    a = a.add(&w.scale(&int(c))).unwrap();
                }
            }
            // mix in one product so the element leaves the span of the generators
            if short_words.len() >= 2 {
                let i = rng.gen_range(0..short_words.len());
                let j = rng.gen_range(0..short_words.len());
                a = a
                    .add(&short_words[i].product(&short_words[j]).unwrap())
                    .unwrap();
            }
            if seen.insert(a.clone()) {
                if let Some(verdict) = search.try_element(&a) {
                    return Ok(verdict);
                }
            }
        }

        let mut layer = words;
        for _ in 2..=config.max_word_len {
            let mut next = Vec::new();
            for w in &layer {
                for g in &gens {
                    let p = w.product(g).unwrap();
                    if p.is_zero() || !seen.insert(p.clone()) {
                        continue;
                    }
                    if let Some(verdict) = search.try_element(&p) {
                        return Ok(verdict);
                    }
                    next.push(p);
                }
            }
            layer = next;
        }
        Ok(Irreducibility::Undecided)
    }
}
