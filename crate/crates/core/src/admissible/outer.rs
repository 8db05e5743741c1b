//! `ε₀` for `σ`-positive `R₀`: `i·Id` on a real basis of `𝔥_𝔨 ∩ 𝔥̄_𝔨`, zero on `𝒮` and a complement.

use serde::Serialize;

use super::gdelta::{gdelta_lemma, GDeltaReport};
use super::{nu_from_heights, sigma_real_basis, AdmissibleError, EpsilonParams};
use crate::liealg::{RealForm, Subalgebra};
use crate::linalg::{unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::rootsys::classify_subset;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Serialize)]
pub struct OuterEpsilon0 {
    pub epsilon0: Matrix,
    /// `g_Δ` for `μ = 0` and height-based `ν`.
    pub certificate: GDeltaReport,
}

/// Requires `R₀` to be `σ`-positive.
pub fn outer_epsilon0(f: &RealForm, k: &Subalgebra) -> Result<OuterEpsilon0, AdmissibleError> {
    let class = classify_subset(f.algebra.rs(), &k.r0, &f.sigma);
    if !class.sigma_positive {
        return Err(AdmissibleError::PreconditionFailed("R0 is not sigma-positive".into()));
    }
    let epsilon0 = split_epsilon0(f, k)?;
    let nu = nu_from_heights(f, &k.r0.symmetric_part(f.algebra.rs()))?;
    let params = EpsilonParams { epsilon0: epsilon0.clone(), mu: Default::default(), nu };
    let certificate = gdelta_lemma(f, k, &params)?;
    if !certificate.nondegenerate {
        return Err(AdmissibleError::DegenerateRestriction);
    }
    Ok(OuterEpsilon0 { epsilon0, certificate })
}

/// `ε₀` on `h_k` from the splitting `𝔥_𝔨 = (𝔥_𝔨 ∩ 𝔥̄_𝔨) ⊕ 𝒮 ⊕ 𝒲`, `𝒮 = ⟨H_α : α ∈ R₀ ∩ −R₀⟩`
/// and `𝒲` spanned greedily by standard vectors.
pub(crate) fn split_epsilon0(f: &RealForm, k: &Subalgebra) -> Result<Matrix, AdmissibleError> {
    let w = &f.algebra;
    let (rank, dim) = (w.rank, w.dim);
    let pad = |h: &[Scalar]| {
        let mut v = zero_vec(dim);
        v[..rank].clone_from_slice(h);
        v
    };
    let s_vecs: Vec<Vector> = k.r0.symmetric_part(w.rs()).iter().map(|&a| w.h_alpha(a)).collect();
    let s = Subspace::span(dim, &s_vecs);
    let s_bar = Subspace::span(dim, &s.basis().iter().map(|v| f.sigma_vec(v)).collect::<Vec<_>>());
    let meet = s.intersection(&s_bar).dim();
    if meet != 0 {
        return Err(AdmissibleError::NotTransverse(meet));
    }
    let hk = Subspace::span(dim, &k.h_k.iter().map(|h| pad(h)).collect::<Vec<_>>());
    let hk_bar = Subspace::span(dim, &hk.basis().iter().map(|v| f.sigma_vec(v)).collect::<Vec<_>>());
    let real = sigma_real_basis(f, &hk.intersection(&hk_bar));
    let mut adapted: Vec<Vector> = real.clone();
    adapted.extend(s.basis().iter().cloned());
    if Subspace::span(dim, &adapted).dim() != adapted.len() {
        return Err(AdmissibleError::PreconditionFailed("h_k ∩ conj(h_k) meets S".into()));
    }
    let mut span = Subspace::span(dim, &adapted);
    for i in 0..rank {
        let e = unit_vec(dim, i);
        if hk.contains(&e) && !span.contains(&e) {
            adapted.push(e.clone());
            span = span.sum(&Subspace::span(dim, &[e]));
        }
    }
    // complete inside h_k when no standard vector fits
    for h in hk.basis() {
        if !span.contains(h) {
            adapted.push(h.clone());
            span = span.sum(&Subspace::span(dim, std::slice::from_ref(h)));
        }
    }
    let m = k.h_k.len();
    if adapted.len() != m {
        return Err(AdmissibleError::PreconditionFailed("adapted basis of h_k has the wrong size".into()));
    }
    // rows of P: coordinates of the adapted vectors in the h_k basis
    let hk_cols: Vec<Vector> = k.h_k.iter().map(|h| pad(h)).collect();
    let basis = Matrix::from_columns(dim, &hk_cols);
    let rows: Vec<Vector> = adapted.iter().map(|v| basis.solve(v)).collect::<Result<_, _>>()?;
    let p = Matrix::from_rows(rows)?;
    let mut diag = vec![Scalar::zero(); m];
    for d in diag.iter_mut().take(real.len()) {
        *d = Scalar::i();
    }
    let target = Matrix::diagonal(&diag);
    let pinv = p.inverse()?;
    Ok(pinv.mul(&target).mul(&pinv.conj_transpose()))
}
