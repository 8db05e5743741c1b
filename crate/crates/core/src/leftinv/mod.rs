//! Left-invariant connections and integrability of the lifted almost complex structure on `T*G`.
//!
//! Every routine works in a fixed basis of `𝔤` given by a [`StructureConstants`] table, with
//! vectors of `𝔤^ℂ` as complex coordinate vectors and covectors in the dual basis.

pub mod algebras;
pub mod courant;
pub mod d0;
pub mod mainthm;
pub mod special;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bracket::StructureConstants;
use crate::gcslin::{reconstruct_gcs, GCStructure, GcsError, HoloData, Kind};
use crate::linalg::{vec_add, vec_is_zero, vec_scale, vec_sub, zero_vec, Matrix, Vector};
use crate::scalar::Scalar;

pub use courant::{courant_check, non_integrability_witness, NonIntegrability};
pub use d0::{d0_connection, d0_weyl, dc_connection};
pub use mainthm::{ec_tensorial_violations, involutivity_oracle, mainthm_check};
pub use special::{omega_check, simple_ec_defect, special_complex_check, special_pm_check, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LeftInvError {
    #[error("connection is not real: D(b{0}, b{1}) leaves g")]
    RealityViolated(usize, usize),
    #[error("operation needs a {0:?} structure")]
    WrongKind(Kind),
    #[error("J does not square to -Id")]
    NotAlmostComplex,
    #[error("2-form is degenerate")]
    Degenerate,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Gcs(#[from] GcsError),
}

/// Bilinear map `D: 𝔤 × 𝔤 → 𝔤`, `table[i][j] = D_{bᵢ} bⱼ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connection {
    pub dim: usize,
    pub table: Vec<Vec<Vector>>,
}

impl Connection {
    pub fn zero(dim: usize) -> Self {
        Connection { dim, table: vec![vec![zero_vec(dim); dim]; dim] }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        Connection { dim, table: (0..dim).map(|i| (0..dim).map(|j| f(i, j)).collect()).collect() }
    }

    /// From operator matrices, `ops[i]` being `D_{bᵢ}`.
    pub fn from_operators(ops: &[Matrix]) -> Self {
        let dim = ops.len();
        Self::from_fn(dim, |i, j| ops[i].column(j))
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        self.table[i][j] = v;
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, v) in self.table[i][j].iter().enumerate() {
                    if !v.is_zero() {
                        out[k] += &c * v;
                    }
                }
            }
        }
        out
    }

    /// `D_x` as a matrix.
    pub fn operator(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> =
            (0..self.dim).map(|j| self.apply(x, &crate::linalg::unit_vec(self.dim, j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn is_real(&self) -> bool {
        self.table.iter().flatten().flatten().all(Scalar::is_real)
    }

    /// `R_{x,y} z = −D_x D_y z + D_y D_x z + D_{[x,y]} z`.
    pub fn curvature(&self, sc: &StructureConstants, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let a = self.apply(x, &self.apply(y, z));
        let b = self.apply(y, &self.apply(x, z));
        let c = self.apply(&sc.bracket(x, y), z);
        vec_add(&vec_sub(&b, &a), &c)
    }

    /// `T(x, y) = D_x y − D_y x − [x, y]`.
    pub fn torsion(&self, sc: &StructureConstants, x: &[Scalar], y: &[Scalar]) -> Vector {
        vec_sub(&vec_sub(&self.apply(x, y), &self.apply(y, x)), &sc.bracket(x, y))
    }

    /// Basis triples with `R_{bᵢ,bⱼ} b_k ≠ 0`, `i < j`.
    pub fn curvature_violations(&self, sc: &StructureConstants) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let e = |i| crate::linalg::unit_vec(n, i);
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    if !vec_is_zero(&self.curvature(sc, &e(i), &e(j), &e(k))) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    pub fn torsion_violations(&self, sc: &StructureConstants) -> Vec<(usize, usize)> {
        let n = self.dim;
        let e = |i| crate::linalg::unit_vec(n, i);
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !vec_is_zero(&self.torsion(sc, &e(i), &e(j))) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `(D_x J) = D_x ∘ J − J ∘ D_x`.
    pub fn covariant_of(&self, x: &[Scalar], j: &Matrix) -> Matrix {
        let d = self.operator(x);
        d.mul(j).sub(&j.mul(&d))
    }

    /// `D + t·(b_k ⊗ [i, j])`, a single-entry perturbation.
    pub fn perturbed(&self, i: usize, j: usize, k: usize, t: &Scalar) -> Self {
        let mut c = self.clone();
        c.table[i][j][k] += t.clone();
        c
    }

    pub fn scaled(&self, t: &Scalar) -> Self {
        Connection { dim: self.dim, table: self.table.iter().map(|r| r.iter().map(|v| vec_scale(v, t)).collect()).collect() }
    }
}

/// Fiber model of `J^{𝒥,D}` on `𝔤 ⊕ 𝔤*`.
#[derive(Debug, Clone, Serialize)]
pub struct LiftedStructure {
    pub j_double: GCStructure,
    pub holo: HoloData,
    pub connection: Connection,
}

/// Under the horizontal/vertical splitting the lifted structure is `𝒥` itself on each fiber.
pub fn lift_structure(h: &HoloData, d: &Connection) -> Result<LiftedStructure, LeftInvError> {
    if h.n != d.dim {
        return Err(LeftInvError::Shape(format!("holo data over dimension {}, connection over {}", h.n, d.dim)));
    }
    let j_double = reconstruct_gcs(h)?;
    Ok(LiftedStructure { j_double, holo: h.clone(), connection: d.clone() })
}
