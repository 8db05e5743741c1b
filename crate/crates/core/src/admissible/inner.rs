//! Admissible triples `(𝔨, 𝒟⁰, ε)` over real forms of inner type, `R₀` a positive system.

use std::collections::BTreeMap;

use super::epsilon::{build_epsilon, epsilon_form, sigma_h};
use super::{sigma_real_basis, AdmissibleError, AdmissibleTriple, Coords, ConnectionSpec, EpsilonParams};
use crate::gcslin::Kind;
use crate::liealg::subalgebra::regular_subalgebra;
use crate::liealg::{RealForm, Subalgebra};
use crate::linalg::{zero_vec, Matrix, Subspace, Vector};
use crate::rootsys::RootSubset;
use crate::scalar::Scalar;

/// Which readings of `ε₀` an input satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Epsilon0Conventions {
    /// `ε₀(h_i, σh_j) + conj ε₀(h_j, σh_i) = 0`.
    pub skew_hermitian: bool,
    /// Complex-bilinear and skew on `𝔥_𝔨`; `None` when `𝔥_𝔨 ≠ 𝔥̄_𝔨`, so the reading has no meaning.
    pub exterior: Option<bool>,
}

pub fn epsilon0_conventions(f: &RealForm, k: &Subalgebra, eps0: &Matrix) -> Epsilon0Conventions {
    let skew_hermitian = eps0.add(&eps0.conj_transpose()).is_zero();
    let rank = f.algebra.rank;
    let bar: Vec<Vector> = k.h_k.iter().map(|h| sigma_h(f, h)).collect();
    let coords = Coords::new(rank, &bar);
    let exterior = if Subspace::span(rank, &k.h_k) == Subspace::span(rank, &bar) {
        // b(h_i, h_j) = ε₀(h_i, h_j) with h_j rewritten in the σ(h_k) basis
        let cols: Vec<Vector> = k.h_k.iter().map(|h| coords.of(h).expect("same span")).collect();
        let b = eps0.mul(&Matrix::from_columns(k.h_k.len(), &cols));
        Some(b.add(&b.transpose()).is_zero())
    } else {
        None
    };
    Epsilon0Conventions { skew_hermitian, exterior }
}

pub fn inner_admissible(
    f: &RealForm,
    h_k: &[Vector],
    rplus: &RootSubset,
    epsilon0: &Matrix,
    mu: BTreeMap<usize, Scalar>,
) -> Result<(AdmissibleTriple, EpsilonParams), AdmissibleError> {
    if !f.inner {
        return Err(AdmissibleError::NotInner);
    }
    let rs = f.algebra.rs();
    if !rs.closure_violations(&rplus.members).is_empty() {
        return Err(AdmissibleError::NotPositiveSystem("not closed".into()));
    }
    if let Some(a) = (0..rs.len()).find(|&a| rplus.contains(a) == rplus.contains(rs.neg(a))) {
        return Err(AdmissibleError::NotPositiveSystem(format!("root {a} and its negative are both in or both out")));
    }
    let k = regular_subalgebra(f, h_k, rplus)?;
    let rank = f.algebra.rank;
    let mut hs = k.h_k.clone();
    hs.extend(k.h_k.iter().map(|h| sigma_h(f, h)));
    let found = Subspace::span(rank, &hs).dim();
    if found != rank {
        return Err(AdmissibleError::CartanSumDeficient { found, expected: rank });
    }
    let params = EpsilonParams::new(epsilon0.clone(), mu, BTreeMap::new())?;

    // Im ε on the real points of 𝔥_𝔨 ∩ 𝔥̄_𝔨
    let pad = |h: &Vector| {
        let mut v = zero_vec(f.dim());
        v[..rank].clone_from_slice(h);
        v
    };
    let hk = Subspace::span(f.dim(), &k.h_k.iter().map(pad).collect::<Vec<_>>());
    let hk_bar = Subspace::span(f.dim(), &hk.basis().iter().map(|v| f.sigma_vec(v)).collect::<Vec<_>>());
    let real = sigma_real_basis(f, &hk.intersection(&hk_bar));
    let e0 = epsilon_form(f, &k, &EpsilonParams { epsilon0: epsilon0.clone(), mu: BTreeMap::new(), nu: BTreeMap::new() });
    if !real.is_empty() {
        let g = Matrix::from_rows(real.iter().map(|x| real.iter().map(|y| e0(x, y).im()).collect()).collect())?;
        if g.det().is_zero() {
            return Err(AdmissibleError::DegenerateRestriction);
        }
    }
    let epsilon = build_epsilon(f, &k, &params)?;
    Ok((AdmissibleTriple { k, connection: ConnectionSpec::D0, epsilon, kind: Kind::Symmetric }, params))
}
