//! Normal form of a symmetric structure: a B-field transform of `(Δ, g_Δ) ⊕ (N, J^N)`.

use serde::Serialize;

use super::{holo_space_of, GCStructure, GcsError, HoloData, Kind};
use crate::linalg::{unit_vec, vec_conj, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Serialize)]
pub struct BFieldNormalForm {
    /// Real 2-form with `exp(B)·J = (Δ, g_Δ) ⊕ (N, J^N)`.
    pub b: Matrix,
    pub delta: Vec<Vector>,
    pub g_delta: Matrix,
    /// Standard basis vectors completing `Δ`.
    pub n_indices: Vec<usize>,
    /// `J^N` in the basis `n_indices`.
    pub j_n: Matrix,
    /// Columns: basis of `Δ`, then of `N`.
    pub t: Matrix,
    pub adapted: GCStructure,
    /// Indices (0, 1, 2) of the three vanishing conditions that fail.
    pub failed_conditions: Vec<usize>,
    pub verified: bool,
}

pub fn bfield_decompose(s: &GCStructure) -> Result<BFieldNormalForm, GcsError> {
    if s.kind != Kind::Symmetric {
        return Err(GcsError::WrongKind(Kind::Symmetric));
    }
    let h = holo_space_of(s)?;
    let n = h.n;
    let delta = h.delta();
    let p = delta.len();
    let n_indices = Subspace::span(n, &delta).complement_indices();
    let n_vecs: Vec<Vector> = n_indices.iter().map(|&k| unit_vec(n, k)).collect();
    let mut t_cols = delta.clone();
    t_cols.extend(n_vecs.iter().cloned());
    let t = Matrix::from_columns(n, &t_cols);

    // E ∩ N^ℂ and the splitting Z = z + z̄
    let en = h.e_space().intersection(&Subspace::span(n, &n_vecs));
    let f = en.basis().to_vec();
    let m = f.len();
    debug_assert_eq!(2 * m, n - p);
    let mut fc = f.clone();
    fc.extend(f.iter().map(|v| vec_conj(v)));
    let split = if fc.is_empty() { None } else { Some(Matrix::from_columns(n, &fc)) };
    let zs: Vec<Vector> = n_vecs
        .iter()
        .map(|big| {
            let c = split.as_ref().unwrap().solve(big).expect("N^C = (E ∩ N^C) + conj");
            crate::linalg::combination(&c[..m], &f, n)
        })
        .collect();

    let alpha = |x: &[Scalar], z: &[Scalar]| h.eval(x, z).expect("argument outside E or conj(E)");
    let dim = p + n_vecs.len();
    let mut bt = Matrix::zeros(dim, dim);
    for i in 0..p {
        for j in 0..p {
            bt[(i, j)] = -alpha(&delta[i], &delta[j]).re();
        }
    }
    for (a, z) in zs.iter().enumerate() {
        for (b, w) in zs.iter().enumerate() {
            bt[(p + a, p + b)] = -(alpha(z, &vec_conj(w)).re() * Scalar::from_int(2));
        }
        for i in 0..p {
            let v = alpha(z, &delta[i]).re() * Scalar::from_int(2);
            bt[(i, p + a)] = v.clone();
            bt[(p + a, i)] = -v;
        }
    }
    let tinv = t.inverse()?;
    let b = tinv.transpose().mul(&bt).mul(&tinv);

    let g_delta = h.alpha_on_delta().map(Scalar::im);
    let j_n = if m == 0 {
        Matrix::zeros(0, 0)
    } else {
        let mut q_cols: Vec<Vector> = f.iter().map(|v| n_indices.iter().map(|&k| v[k].clone()).collect()).collect();
        q_cols.extend(q_cols.clone().iter().map(|v| vec_conj(v)));
        let q = Matrix::from_columns(2 * m, &q_cols);
        let mut d = vec![Scalar::i(); m];
        d.extend(vec![-Scalar::i(); m]);
        q.mul(&Matrix::diagonal(&d)).mul(&q.inverse()?)
    };
    let adapted = match (p, m) {
        (_, 0) => GCStructure::from_metric(&g_delta)?,
        (0, _) => GCStructure::from_complex_structure(&j_n)?,
        _ => GCStructure::from_metric(&g_delta)?.direct_sum(&GCStructure::from_complex_structure(&j_n)?)?,
    };

    let failed_conditions = condition_failures(&h, &b, &delta, &f);
    let verified = failed_conditions.is_empty() && s.bfield_act(&b)? == adapted.transport(&t)?;
    Ok(BFieldNormalForm { b, delta, g_delta, n_indices, j_n, t, adapted, failed_conditions, verified })
}

/// The three vanishing conditions on `α + B`: `Re` on `Δ⊗Δ`, on `(E∩N^ℂ)⊗Δ^ℂ`, on `E⊗(Ē∩N^ℂ)`.
fn condition_failures(h: &HoloData, b: &Matrix, delta: &[Vector], f: &[Vector]) -> Vec<usize> {
    let ab = |x: &[Scalar], z: &[Scalar]| h.eval(x, z).expect("argument outside E or conj(E)") + b.bilinear(x, z);
    let mut out = Vec::new();
    if delta.iter().any(|x| delta.iter().any(|y| !ab(x, y).re().is_zero())) {
        out.push(0);
    }
    if f.iter().any(|z| delta.iter().any(|x| !ab(z, x).is_zero())) {
        out.push(1);
    }
    if h.e.iter().any(|x| f.iter().any(|w| !ab(x, &vec_conj(w)).is_zero())) {
        out.push(2);
    }
    out
}
