//! Linear generalized complex structures on `V ⊕ V*`.
//!
//! Coordinates are `(X; ξ)` with `X` in the standard basis of `V` and `ξ` in the dual basis,
//! so `g_can((X;ξ), (Y;η)) = ½(ξ(Y) + η(X))` has Gram matrix `½[[0, I], [I, 0]]`.

pub mod bfield;
pub mod holo;
pub mod sample;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{LinalgError, Matrix, Vector};
use crate::scalar::Scalar;

pub use bfield::{bfield_decompose, BFieldNormalForm};
pub use holo::{holo_space_of, reconstruct_gcs, HoloData};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// `g_can(Jx, y) = g_can(x, Jy)`; τ is complex conjugation
    Symmetric,
    /// `g_can(Jx, y) = −g_can(x, Jy)`; τ is the identity
    Skew,
}

impl Kind {
    /// τ on complex scalars.
    pub fn tau(self, s: &Scalar) -> Scalar {
        match self {
            Kind::Symmetric => s.conj(),
            Kind::Skew => s.clone(),
        }
    }

    pub fn tau_vec(self, v: &[Scalar]) -> Vector {
        v.iter().map(|x| self.tau(x)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcsError {
    #[error("J_V does not square to -Id")]
    NotComplexStructure,
    #[error("metric is degenerate or not symmetric")]
    Degenerate,
    #[error("B is not skew-symmetric")]
    NotSkew,
    #[error("J does not square to -Id")]
    NotEigenSplit,
    #[error("alpha is ill-defined: J is not {0:?} with respect to g_can")]
    AlphaIllDefined(Kind),
    #[error("E + conj(E) is not all of V^C (dimension {found} of {expected})")]
    SumDeficient { found: usize, expected: usize },
    #[error("tau condition fails at E basis pair ({0}, {1})")]
    TauConditionViolated(usize, usize),
    #[error("Im(alpha|Delta) is degenerate; X + xi lies in L and conj(L)")]
    DegenerateImAlpha { x: Vector, xi: Vector },
    #[error("operation needs a {0:?} structure")]
    WrongKind(Kind),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Gram matrix of `g_can` on `V ⊕ V*`.
pub fn gcan(n: usize) -> Matrix {
    let half = Matrix::identity(n).scale(&Scalar::from_frac(1, 2));
    Matrix::block(&Matrix::zeros(n, n), &half, &half, &Matrix::zeros(n, n))
}

/// `exp(B)`, acting by `X + ξ ↦ X + i_X B + ξ`.
pub fn exp_b(b: &Matrix) -> Matrix {
    let n = b.rows();
    Matrix::block(&Matrix::identity(n), &Matrix::zeros(n, n), &b.transpose(), &Matrix::identity(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GCStructure {
    pub j: Matrix,
    pub kind: Kind,
}

impl GCStructure {
    /// Validates `J² = −Id` and the declared symmetry.
    pub fn new(j: Matrix, kind: Kind) -> Result<Self, GcsError> {
        if !j.is_square() || !j.rows().is_multiple_of(2) {
            return Err(GcsError::Shape("J must be 2n x 2n".into()));
        }
        if !j.is_real() {
            return Err(GcsError::Shape("J must be real".into()));
        }
        let s = GCStructure { j, kind };
        if s.j.mul(&s.j) != Matrix::identity(s.j.rows()).neg() {
            return Err(GcsError::NotEigenSplit);
        }
        if !s.has_symmetry(kind) {
            return Err(GcsError::AlphaIllDefined(kind));
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.j.rows() / 2
    }

    pub fn has_symmetry(&self, kind: Kind) -> bool {
        let g = gcan(self.n());
        let lhs = self.j.transpose().mul(&g);
        let rhs = g.mul(&self.j);
        match kind {
            Kind::Symmetric => lhs == rhs,
            Kind::Skew => lhs == rhs.neg(),
        }
    }

    /// `[[J, 0], [0, J*]]` (symmetric) from a complex structure on `V`.
    pub fn from_complex_structure(jv: &Matrix) -> Result<Self, GcsError> {
        Self::complex_type(jv, Kind::Symmetric)
    }

    /// `[[J, 0], [0, ±J*]]`, `+` for the symmetric and `−` for the skew kind.
    pub fn complex_type(jv: &Matrix, kind: Kind) -> Result<Self, GcsError> {
        if !jv.is_square() || jv.mul(jv) != Matrix::identity(jv.rows()).neg() {
            return Err(GcsError::NotComplexStructure);
        }
        let n = jv.rows();
        let dual = match kind {
            Kind::Symmetric => jv.transpose(),
            Kind::Skew => jv.transpose().neg(),
        };
        Self::new(Matrix::block(jv, &Matrix::zeros(n, n), &Matrix::zeros(n, n), &dual), kind)
    }

    /// `[[0, g⁻¹], [−g, 0]]` from a pseudo-Euclidean metric.
    pub fn from_metric(g: &Matrix) -> Result<Self, GcsError> {
        if !g.is_square() || *g != g.transpose() {
            return Err(GcsError::Degenerate);
        }
        let ginv = g.inverse().map_err(|_| GcsError::Degenerate)?;
        let n = g.rows();
        Self::new(Matrix::block(&Matrix::zeros(n, n), &ginv, &g.neg(), &Matrix::zeros(n, n)), Kind::Symmetric)
    }

    /// `[[0, −ω⁻¹], [ω, 0]]` (skew) from a symplectic form.
    pub fn from_symplectic(omega: &Matrix) -> Result<Self, GcsError> {
        if !omega.is_square() || *omega != omega.transpose().neg() {
            return Err(GcsError::NotSkew);
        }
        let inv = omega.inverse().map_err(|_| GcsError::Degenerate)?;
        let n = omega.rows();
        Self::new(Matrix::block(&Matrix::zeros(n, n), &inv.neg(), omega, &Matrix::zeros(n, n)), Kind::Skew)
    }

    /// `exp(B) ∘ J ∘ exp(−B)`.
    pub fn bfield_act(&self, b: &Matrix) -> Result<Self, GcsError> {
        if b.rows() != self.n() || !b.is_square() {
            return Err(GcsError::Shape("B must be n x n".into()));
        }
        if *b != b.transpose().neg() || !b.is_real() {
            return Err(GcsError::NotSkew);
        }
        let j = exp_b(b).mul(&self.j).mul(&exp_b(&b.neg()));
        Ok(GCStructure { j, kind: self.kind })
    }

    /// Conjugation by `diag(T, T⁻ᵀ)`, the change of basis of `V` by `T`.
    pub fn transport(&self, t: &Matrix) -> Result<Self, GcsError> {
        let n = self.n();
        let tinv = t.inverse()?;
        let z = Matrix::zeros(n, n);
        let fwd = Matrix::block(t, &z, &z, &tinv.transpose());
        let back = Matrix::block(&tinv, &z, &z, &t.transpose());
        Ok(GCStructure { j: fwd.mul(&self.j).mul(&back), kind: self.kind })
    }

    /// Block direct sum over `V₁ ⊕ V₂`, with coordinates `(X₁, X₂; ξ₁, ξ₂)`.
    pub fn direct_sum(&self, other: &GCStructure) -> Result<Self, GcsError> {
        if self.kind != other.kind {
            return Err(GcsError::WrongKind(self.kind));
        }
        let (n1, n2) = (self.n(), other.n());
        let n = n1 + n2;
        let mut j = Matrix::zeros(2 * n, 2 * n);
        let place = |j: &mut Matrix, src: &Matrix, m: usize, off: usize| {
            for r in 0..2 * m {
                for c in 0..2 * m {
                    let rr = if r < m { off + r } else { n + off + r - m };
                    let cc = if c < m { off + c } else { n + off + c - m };
                    j[(rr, cc)] = src[(r, c)].clone();
                }
            }
        };
        place(&mut j, &self.j, n1, 0);
        place(&mut j, &other.j, n2, n1);
        Ok(GCStructure { j, kind: self.kind })
    }
}
