//! Complex semisimple Lie algebras in a Weyl basis, real forms and regular subalgebras.

pub mod chevalley;
pub mod realform;
pub mod subalgebra;

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::bracket::StructureConstants;
use crate::linalg::{zero_vec, Matrix, Vector};
use crate::rootsys::{RootError, RootSystem};
use crate::scalar::{FieldSpec, Scalar};

pub use realform::{RealBasisKind, RealForm, VoganDiagram};
pub use subalgebra::Subalgebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("field tower lacks sqrt({0})")]
    TowerTooSmall(u64),
    #[error("a_alpha extension is inconsistent at root {root}: {detail}")]
    InconsistentExtension { root: usize, detail: String },
    #[error("theta is not a diagram automorphism: {0}")]
    ThetaNotAutomorphism(String),
    #[error("painted node {0} is not fixed by theta")]
    PaintedNotFixed(usize),
    #[error("Vogan diagram type {diagram} does not match algebra type {algebra}")]
    TypeMismatch { diagram: String, algebra: String },
    #[error("R0 is not closed: {0:?}")]
    NotClosed(Vec<(usize, usize, usize)>),
    #[error("H_alpha for root {0} is not in h_k")]
    CartanPartTooSmall(usize),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// `𝔤^ℂ` with basis `H₁ … H_r` (Killing duals of the simple roots) followed by `E_α` in root order.
#[derive(Debug, Clone, Serialize)]
pub struct WeylAlgebra {
    pub root_system: RootSystem,
    pub rank: usize,
    pub dim: usize,
    pub field: FieldSpec,
    /// Integer Chevalley constants the Weyl basis was rescaled from.
    #[serde(skip)]
    pub chevalley: chevalley::ChevalleyTable,
    /// `κ_α = B(e_α, e_{−α})` for the Chevalley root vectors.
    #[serde(skip)]
    pub chevalley_killing: Vec<BigRational>,
    #[serde(skip)]
    n: HashMap<(usize, usize), Scalar>,
    pub brackets: StructureConstants,
    /// Trace form of the adjoint representation in this basis.
    pub killing: Matrix,
}

impl WeylAlgebra {
    pub fn build(rs: &RootSystem) -> Result<Self, LieError> {
        Self::build_in(rs, None)
    }

    /// Builds inside a declared tower; fails with the first missing radicand.
    pub fn build_in(rs: &RootSystem, field: Option<&FieldSpec>) -> Result<Self, LieError> {
        let rank = rs.rank;
        let nroots = rs.len();
        let dim = rank + nroots;
        let table = chevalley::chevalley_table(rs);

        // Chevalley basis: coroots h_i, then e_α
        let mut chev = StructureConstants::abelian(dim);
        for k in 0..nroots {
            let root = rs.root(k);
            for i in 0..rank {
                let c: i64 = (0..rank).map(|j| root[j] * rs.cartan_matrix[j][i]).sum();
                if c != 0 {
                    chev.set_term(i, rank + k, rank + k, Scalar::from_int(c));
                }
            }
            if rs.is_positive(k) {
                let norm = rs.pair_roots(k, k);
                let mut h = zero_vec(dim);
                for i in 0..rank {
                    let c = rs.pairing[i][i].clone() / &norm * BigRational::from_integer(root[i].into());
                    h[i] = Scalar::from_rational(c);
                }
                chev.set(rank + k, rank + rs.neg(k), &h);
            }
        }
        for (&(a, b), &v) in &table {
            if a < b {
                chev.set_term(rank + a, rank + b, rank + rs.sum(a, b).unwrap(), Scalar::from_int(v));
            }
        }
        let ck = chev.killing_matrix();
        let kappa: Vec<BigRational> = (0..nroots)
            .map(|k| ck[(rank + k, rank + rs.neg(k))].to_rational().expect("rational trace form"))
            .collect();
        if kappa.iter().any(|k| !k.is_positive()) {
            return Err(LieError::Internal("nonpositive B(e_a, e_-a)".into()));
        }

        // E_α = e_α / √κ_α, H_i = h_i / κ_i
        let mut n = HashMap::new();
        for (&(a, b), &v) in &table {
            let s = rs.sum(a, b).unwrap();
            let ratio = &kappa[s] / (&kappa[a] * &kappa[b]);
            let value = Scalar::sqrt_rational(&ratio) * Scalar::from_int(v);
            n.insert((a, b), value);
        }
        let mut radicals: Vec<u64> = n.values().flat_map(|v| v.radicals()).collect();
        radicals.sort_unstable();
        radicals.dedup();
        let field = match field {
            Some(f) => {
                if let Some(&missing) = radicals.iter().find(|d| !f.radicands().contains(d)) {
                    return Err(LieError::TowerTooSmall(missing));
                }
                f.clone()
            }
            None => FieldSpec::closure(radicals),
        };

        let mut brackets = StructureConstants::abelian(dim);
        for k in 0..nroots {
            for i in 0..rank {
                let v = rs.pair(rs.root(k), &unit_root(rank, i));
                if !v.is_zero() {
                    brackets.set_term(i, rank + k, rank + k, Scalar::from_rational(v));
                }
            }
            if rs.is_positive(k) {
                let mut h = zero_vec(dim);
                for (i, &c) in rs.root(k).iter().enumerate() {
                    h[i] = Scalar::from_int(c);
                }
                brackets.set(rank + k, rank + rs.neg(k), &h);
            }
        }
        for (&(a, b), v) in &n {
            if a < b {
                brackets.set_term(rank + a, rank + b, rank + rs.sum(a, b).unwrap(), v.clone());
            }
        }
        let killing = brackets.killing_matrix();
        Ok(WeylAlgebra {
            root_system: rs.clone(),
            rank,
            dim,
            field,
            chevalley: table,
            chevalley_killing: kappa,
            n,
            brackets,
            killing,
        })
    }

    pub fn from_type_str(t: &str) -> Result<Self, LieError> {
        Self::build(&RootSystem::from_type_str(t)?)
    }

    pub fn rs(&self) -> &RootSystem {
        &self.root_system
    }

    /// Basis index of `E_α`.
    pub fn e(&self, k: usize) -> usize {
        self.rank + k
    }

    pub fn is_root_index(&self, i: usize) -> bool {
        i >= self.rank
    }

    /// Root of the basis vector `i`, if it is a root vector.
    pub fn root_of(&self, i: usize) -> Option<usize> {
        i.checked_sub(self.rank)
    }

    /// `N_{αβ}`, zero when `α + β ∉ R`.
    pub fn n(&self, a: usize, b: usize) -> Scalar {
        self.n.get(&(a, b)).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Number of unordered pairs `{α, β}` with `α + β ∈ R`.
    pub fn nonzero_n(&self) -> usize {
        self.n.keys().filter(|(a, b)| a < b).count()
    }

    /// `(α, β, N_{αβ})` for `α < β`, sorted.
    pub fn n_table(&self) -> Vec<(usize, usize, Scalar)> {
        let mut v: Vec<_> = self.n.iter().filter(|((a, b), _)| a < b).map(|(&(a, b), x)| (a, b, x.clone())).collect();
        v.sort_by_key(|e| (e.0, e.1));
        v
    }

    /// `H_α` in `H_i` coordinates (padded to the full basis).
    pub fn h_alpha(&self, k: usize) -> Vector {
        let mut v = zero_vec(self.dim);
        for (i, &c) in self.rs().root(k).iter().enumerate() {
            v[i] = Scalar::from_int(c);
        }
        v
    }

    pub fn unit(&self, i: usize) -> Vector {
        crate::linalg::unit_vec(self.dim, i)
    }

    /// `α(h)` for `h` given in full-basis coordinates (root-space components ignored).
    pub fn root_value(&self, k: usize, h: &[Scalar]) -> Scalar {
        let rs = self.rs();
        let mut acc = Scalar::zero();
        for j in 0..self.rank {
            if h[j].is_zero() {
                continue;
            }
            let p = rs.pair(rs.root(k), &unit_root(self.rank, j));
            acc += &h[j] * &Scalar::from_rational(p);
        }
        acc
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.brackets.bracket(x, y)
    }

    /// Expected Killing matrix: `⟨αᵢ, αⱼ⟩` on the Cartan block, `1` on `(E_α, E_{−α})`.
    pub fn expected_killing(&self) -> Matrix {
        let rs = self.rs();
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.rank {
            for j in 0..self.rank {
                m[(i, j)] = Scalar::from_rational(rs.pairing[i][j].clone());
            }
        }
        for k in 0..rs.len() {
            m[(self.e(k), self.e(rs.neg(k)))] = Scalar::one();
        }
        m
    }

    pub fn killing_form(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.killing.bilinear(x, y)
    }

    /// Pairs `(α, β)` violating `N_{−α,−β} = −N_{αβ}` or reality.
    pub fn symmetry_violations(&self) -> Vec<(usize, usize)> {
        let rs = self.rs();
        self.n
            .iter()
            .filter(|(&(a, b), v)| !v.is_real() || self.n(rs.neg(a), rs.neg(b)) != -*v)
            .map(|(&k, _)| k)
            .collect()
    }

    /// Triples `α + β + γ = 0` where `N_{αβ} = N_{βγ} = N_{γα}` fails.
    pub fn cyclic_violations(&self) -> Vec<(usize, usize, usize)> {
        let rs = self.rs();
        let mut out = Vec::new();
        for (&(a, b), v) in &self.n {
            let c = rs.neg(rs.sum(a, b).unwrap());
            if &self.n(b, c) != v || &self.n(c, a) != v {
                out.push((a, b, c));
            }
        }
        out.sort();
        out
    }

    /// Checks `[E_α, E_{−α}] = H_α` on every root.
    pub fn coroot_violations(&self) -> Vec<usize> {
        let rs = self.rs();
        (0..rs.len())
            .filter(|&k| self.brackets.basis_bracket_vec(self.e(k), self.e(rs.neg(k))) != self.h_alpha(k))
            .collect()
    }
}

fn unit_root(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}
