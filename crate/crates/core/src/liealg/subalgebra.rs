//! Regular subalgebras `𝔨 = 𝔥_𝔨 + Σ_{α ∈ R₀} 𝔤_α` and their conjugates.

use serde::Serialize;

use super::{LieError, RealForm};
use crate::linalg::{zero_vec, Subspace, Vector};
use crate::rootsys::RootSubset;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Serialize)]
pub struct Subalgebra {
    /// Basis of `𝔥_𝔨` in `H_i` coordinates (length = rank).
    pub h_k: Vec<Vector>,
    pub r0: RootSubset,
    /// Basis of `𝔨` in Weyl coordinates: `𝔥_𝔨` first, then `E_α` for `α ∈ R₀`.
    pub basis: Vec<Vector>,
    #[serde(skip)]
    pub space: Subspace,
    /// `𝔨̄ = σ(𝔨)`.
    #[serde(skip)]
    pub conj_space: Subspace,
    #[serde(skip)]
    pub intersection: Subspace,
    /// `𝔨 + 𝔨̄ = 𝔤^ℂ`.
    pub spans_all: bool,
}

impl Subalgebra {
    /// Builds the subspace without checking closure.
    pub fn assemble(f: &RealForm, h_k: &[Vector], r0: &RootSubset) -> Self {
        let w = &f.algebra;
        let dim = w.dim;
        let h_space = Subspace::span(w.rank, h_k);
        let h_k: Vec<Vector> = h_space.basis().to_vec();
        let mut basis: Vec<Vector> = h_k
            .iter()
            .map(|h| {
                let mut v = zero_vec(dim);
                v[..w.rank].clone_from_slice(h);
                v
            })
            .collect();
        basis.extend(r0.members.iter().map(|&k| w.unit(w.e(k))));
        let space = Subspace::span(dim, &basis);
        let conj: Vec<Vector> = basis.iter().map(|v| f.sigma_vec(v)).collect();
        let conj_space = Subspace::span(dim, &conj);
        let intersection = space.intersection(&conj_space);
        let spans_all = space.sum(&conj_space).dim() == dim;
        Subalgebra { h_k, r0: r0.clone(), basis, space, conj_space, intersection, spans_all }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis pairs `(i, j)` with `[kᵢ, kⱼ] ∉ 𝔨`.
    pub fn closure_violations(&self, f: &RealForm) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                if !self.space.contains(&f.algebra.bracket(&self.basis[i], &self.basis[j])) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `σ(kᵢ)`, a basis of `𝔨̄` aligned with `basis`.
    pub fn conj_basis(&self, f: &RealForm) -> Vec<Vector> {
        self.basis.iter().map(|v| f.sigma_vec(v)).collect()
    }
}

/// `𝔨 = 𝔥_𝔨 + 𝔤(R₀)`, rejected when it is not a subalgebra.
pub fn regular_subalgebra(f: &RealForm, h_k: &[Vector], r0: &RootSubset) -> Result<Subalgebra, LieError> {
    let rs = f.algebra.rs();
    let violations = rs.closure_violations(&r0.members);
    if !violations.is_empty() {
        return Err(LieError::NotClosed(violations));
    }
    let h_space = Subspace::span(f.algebra.rank, h_k);
    for k in r0.symmetric_part(rs) {
        let h: Vec<Scalar> = rs.root(k).iter().map(|&c| Scalar::from_int(c)).collect();
        if !h_space.contains(&h) {
            return Err(LieError::CartanPartTooSmall(k));
        }
    }
    Ok(Subalgebra::assemble(f, h_k, r0))
}

/// Standard basis of `𝔥` in `H_i` coordinates.
pub fn full_cartan(rank: usize) -> Vec<Vector> {
    (0..rank).map(|k| crate::linalg::unit_vec(rank, k)).collect()
}
