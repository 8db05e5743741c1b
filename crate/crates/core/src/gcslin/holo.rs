//! Holomorphic data `L^τ(E, α)` of a generalized complex structure.

use serde::{Deserialize, Serialize};

use super::{GCStructure, GcsError, Kind};
use crate::linalg::{dot, vec_conj, vec_is_zero, zero_vec, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

/// `E ⊆ V^ℂ` with `α` stored as `alpha[a][b] = α(e_a, τ e_b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoloData {
    pub n: usize,
    #[serde(rename = "tau_kind")]
    pub kind: Kind,
    #[serde(rename = "E")]
    pub e: Vec<Vector>,
    pub alpha: Matrix,
}

impl HoloData {
    pub fn new(n: usize, kind: Kind, e: Vec<Vector>, alpha: Matrix) -> Self {
        HoloData { n, kind, e, alpha }
    }

    pub fn k(&self) -> usize {
        self.e.len()
    }

    pub fn e_space(&self) -> Subspace {
        Subspace::span(self.n, &self.e)
    }

    /// `τ e_b`, a basis of `τ(E)`.
    pub fn tau_basis(&self) -> Vec<Vector> {
        self.e.iter().map(|v| self.kind.tau_vec(v)).collect()
    }

    fn coords(basis: &[Vector], n: usize, x: &[Scalar]) -> Option<Vector> {
        if basis.is_empty() {
            return vec_is_zero(x).then(Vec::new);
        }
        Matrix::from_columns(n, basis).solve(x).ok()
    }

    /// Coordinates of `x ∈ E` in the `e` basis.
    pub fn e_coords(&self, x: &[Scalar]) -> Option<Vector> {
        Self::coords(&self.e, self.n, x)
    }

    /// `α(x, z)` for `x ∈ E`, `z ∈ τ(E)`.
    pub fn eval(&self, x: &[Scalar], z: &[Scalar]) -> Option<Scalar> {
        let cx = self.e_coords(x)?;
        let cz = Self::coords(&self.tau_basis(), self.n, z)?;
        Some(self.alpha.bilinear(&cx, &cz))
    }

    /// Real basis of `Δ` with `Δ^ℂ = E ∩ Ē`.
    pub fn delta(&self) -> Vec<Vector> {
        let e = self.e_space();
        e.intersection(&e.conj()).real_basis()
    }

    /// `α(dᵢ, dⱼ)` on the real basis of `Δ`.
    pub fn alpha_on_delta(&self) -> Matrix {
        let d = self.delta();
        let mut m = Matrix::zeros(d.len(), d.len());
        for i in 0..d.len() {
            for j in 0..d.len() {
                m[(i, j)] = self.eval(&d[i], &d[j]).expect("Delta lies in E and tau(E)");
            }
        }
        m
    }

    pub fn im_alpha_delta(&self) -> Matrix {
        self.alpha_on_delta().map(Scalar::im)
    }

    pub fn re_alpha_delta(&self) -> Matrix {
        self.alpha_on_delta().map(Scalar::re)
    }

    /// Basis of `L^τ(E, α)` as vectors `(X; ξ)` of length `2n`.
    pub fn holo_space(&self) -> Result<Vec<Vector>, GcsError> {
        let n = self.n;
        let tau = self.tau_basis();
        let mut out = Vec::with_capacity(n);
        let constraint = if tau.is_empty() { Matrix::zeros(0, n) } else { Matrix::from_rows(tau.clone())? };
        for a in 0..self.k() {
            let rhs: Vector = (0..self.k()).map(|b| self.alpha[(a, b)].clone()).collect();
            let xi = if tau.is_empty() { zero_vec(n) } else { constraint.solve(&rhs)? };
            let mut v = self.e[a].clone();
            v.extend(xi);
            out.push(v);
        }
        let ann = if tau.is_empty() { Subspace::full(n) } else { Subspace::span(n, &tau).annihilator() };
        for eta in ann.basis() {
            let mut v = zero_vec(n);
            v.extend(eta.iter().cloned());
            out.push(v);
        }
        Ok(out)
    }

    /// Checks the invariants: `E + Ē = V^ℂ`, the τ condition and non-degeneracy of `Im(α|Δ)`.
    pub fn validate(&self) -> Result<(), GcsError> {
        let n = self.n;
        if self.e.iter().any(|v| v.len() != n) || self.alpha.rows() != self.k() || self.alpha.cols() != self.k() {
            return Err(GcsError::Shape("E basis or alpha has the wrong size".into()));
        }
        let e = self.e_space();
        if e.dim() != self.k() {
            return Err(GcsError::Shape("E vectors are dependent".into()));
        }
        let sum = e.sum(&e.conj()).dim();
        if sum != n {
            return Err(GcsError::SumDeficient { found: sum, expected: n });
        }
        for a in 0..self.k() {
            for b in 0..self.k() {
                if !(&self.alpha[(a, b)] + &self.kind.tau(&self.alpha[(b, a)])).is_zero() {
                    return Err(GcsError::TauConditionViolated(a, b));
                }
            }
        }
        let g = self.im_alpha_delta();
        let kernel = g.nullspace();
        if let Some(c) = kernel.first() {
            let d = self.delta();
            let x = crate::linalg::combination(c, &d, n);
            let (x, xi) = self.degeneracy_witness(&x)?;
            return Err(GcsError::DegenerateImAlpha { x, xi });
        }
        Ok(())
    }

    /// Vector of `L ∩ L̄` over `X ∈ ker Im(α|Δ)`: `ξ` agrees with `i_X α` on `τ(E)` and with its conjugate partner on the other side.
    fn degeneracy_witness(&self, x: &[Scalar]) -> Result<(Vector, Vector), GcsError> {
        let n = self.n;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for z in &self.e {
            let zbar = vec_conj(z);
            match self.kind {
                Kind::Symmetric => {
                    let v = self.eval(x, &zbar).expect("conj(E) is tau(E)");
                    rows.push(z.clone());
                    rhs.push(v.conj());
                    rows.push(zbar);
                    rhs.push(v);
                }
                Kind::Skew => {
                    let v = self.eval(x, z).expect("E is tau(E)");
                    rows.push(z.clone());
                    rhs.push(v.clone());
                    rows.push(zbar);
                    rhs.push(v.conj());
                }
            }
        }
        let m = Matrix::from_rows(rows)?;
        if let Ok(xi) = m.solve(&rhs) {
            let mut w = x.to_vec();
            w.extend(xi.iter().cloned());
            if self.in_l_and_lbar(&w)? {
                return Ok((x.to_vec(), xi));
            }
        }
        // the formula needs Δ-compatible data; fall back to a direct basis vector of L ∩ L̄
        let l = Subspace::span(2 * n, &self.holo_space()?);
        let both = l.intersection(&l.conj());
        let w = both.basis().first().cloned().ok_or_else(|| GcsError::Shape("no witness found".into()))?;
        Ok((w[..n].to_vec(), w[n..].to_vec()))
    }

    fn in_l_and_lbar(&self, w: &[Scalar]) -> Result<bool, GcsError> {
        let l = Subspace::span(2 * self.n, &self.holo_space()?);
        Ok(!vec_is_zero(w) && l.contains(w) && l.contains(&vec_conj(w)))
    }

    /// Same data with `E` in reduced echelon basis.
    pub fn canonical(&self) -> HoloData {
        let e = self.e_space();
        let rows: Vec<Vector> = e.basis().iter().map(|r| self.e_coords(r).expect("echelon vector in E")).collect();
        if rows.is_empty() {
            return HoloData::new(self.n, self.kind, Vec::new(), Matrix::zeros(0, 0));
        }
        let m = Matrix::from_rows(rows).unwrap();
        let tm = m.map(|x| self.kind.tau(x));
        let alpha = m.mul(&self.alpha).mul(&tm.transpose());
        HoloData::new(self.n, self.kind, e.basis().to_vec(), alpha)
    }

    /// `(E, α + B|_{E ⊗ τE})`.
    pub fn shift(&self, b: &Matrix) -> HoloData {
        let tau = self.tau_basis();
        let mut alpha = self.alpha.clone();
        for a in 0..self.k() {
            for c in 0..self.k() {
                alpha[(a, c)] += b.bilinear(&self.e[a], &tau[c]);
            }
        }
        HoloData::new(self.n, self.kind, self.e.clone(), alpha)
    }
}

/// `HoloData` of `J`: `E = π₁(L)` for the `+i` eigenspace `L`, and `α` read off from lifts.
pub fn holo_space_of(s: &GCStructure) -> Result<HoloData, GcsError> {
    let n = s.n();
    let j = &s.j;
    if j.mul(j) != Matrix::identity(2 * n).neg() {
        return Err(GcsError::NotEigenSplit);
    }
    if !s.has_symmetry(s.kind) {
        return Err(GcsError::AlphaIllDefined(s.kind));
    }
    let shifted = j.sub(&Matrix::identity(2 * n).scale(&Scalar::i()));
    let l = shifted.nullspace();
    if l.len() != n {
        return Err(GcsError::NotEigenSplit);
    }
    let xs: Vec<Vector> = l.iter().map(|v| v[..n].to_vec()).collect();
    let xis: Vec<Vector> = l.iter().map(|v| v[n..].to_vec()).collect();
    let e = Subspace::span(n, &xs);
    let e_basis = e.basis().to_vec();
    let tau: Vec<Vector> = e_basis.iter().map(|v| s.kind.tau_vec(v)).collect();
    let proj = Matrix::from_columns(n, &xs);

    // elements (0; η) of L must vanish on τ(E)
    for c in proj.nullspace() {
        let eta = crate::linalg::combination(&c, &xis, n);
        if tau.iter().any(|t| !dot(&eta, t).is_zero()) {
            return Err(GcsError::AlphaIllDefined(s.kind));
        }
    }
    let k = e_basis.len();
    let mut alpha = Matrix::zeros(k, k);
    for (a, ea) in e_basis.iter().enumerate() {
        let c = proj.solve(ea)?;
        let xi = crate::linalg::combination(&c, &xis, n);
        for (b, tb) in tau.iter().enumerate() {
            alpha[(a, b)] = dot(&xi, tb);
        }
    }
    let h = HoloData::new(n, s.kind, e_basis, alpha);
    h.validate()?;
    Ok(h)
}

/// The unique real `J` with `+i` eigenspace `L^τ(E, α)`.
pub fn reconstruct_gcs(h: &HoloData) -> Result<GCStructure, GcsError> {
    h.validate()?;
    let n = h.n;
    let l = h.holo_space()?;
    let lbar: Vec<Vector> = l.iter().map(|v| vec_conj(v)).collect();
    let mut cols = l.clone();
    cols.extend(lbar);
    let p = Matrix::from_columns(2 * n, &cols);
    let pinv = p.inverse().map_err(|_| {
        let ls = Subspace::span(2 * n, &l);
        let w = ls.intersection(&ls.conj()).basis().first().cloned().unwrap_or_else(|| zero_vec(2 * n));
        GcsError::DegenerateImAlpha { x: w[..n].to_vec(), xi: w[n..].to_vec() }
    })?;
    let mut d = vec![Scalar::i(); n];
    d.extend(vec![-Scalar::i(); n]);
    let j = p.mul(&Matrix::diagonal(&d)).mul(&pinv);
    GCStructure::new(j, h.kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn complex_structure_example() {
        let jv = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
        let st = GCStructure::from_complex_structure(&jv).unwrap();
        let h = holo_space_of(&st).unwrap();
        assert_eq!(h.e, vec![vec![s("1"), s("-i")]]);
        assert!(h.alpha.is_zero());
        assert_eq!(reconstruct_gcs(&h).unwrap(), st);
    }

    #[test]
    fn metric_example() {
        let g = Matrix::from_ints(&[&[1]]);
        let st = GCStructure::from_metric(&g).unwrap();
        let h = holo_space_of(&st).unwrap();
        assert_eq!(h.e, vec![vec![s("1")]]);
        assert_eq!(h.alpha[(0, 0)], s("i"));
        assert_eq!(reconstruct_gcs(&h).unwrap(), st);

        let g = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
        let h = holo_space_of(&GCStructure::from_metric(&g).unwrap()).unwrap();
        assert_eq!(h.delta().len(), 2);
        assert_eq!(h.im_alpha_delta(), g);
    }

    #[test]
    fn shift_matches_bfield() {
        let g = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let st = GCStructure::from_metric(&g).unwrap();
        let b = Matrix::from_ints(&[&[0, 3], &[-3, 0]]);
        let moved = holo_space_of(&st.bfield_act(&b).unwrap()).unwrap().canonical();
        let shifted = holo_space_of(&st).unwrap().shift(&b).canonical();
        assert_eq!(moved, shifted);
    }

    #[test]
    fn degenerate_alpha_has_witness() {
        let h = HoloData::new(1, Kind::Symmetric, vec![vec![s("1")]], Matrix::from_rows(vec![vec![s("0")]]).unwrap());
        match h.validate() {
            Err(GcsError::DegenerateImAlpha { x, xi }) => {
                let mut w = x.clone();
                w.extend(xi);
                let l = Subspace::span(2, &h.holo_space().unwrap());
                assert!(l.contains(&w) && l.contains(&vec_conj(&w)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn validation_errors() {
        let i = Scalar::i();
        let h = HoloData::new(2, Kind::Symmetric, vec![vec![s("1"), s("0")]], Matrix::from_rows(vec![vec![i.clone()]]).unwrap());
        assert_eq!(h.validate(), Err(GcsError::SumDeficient { found: 1, expected: 2 }));
        let h = HoloData::new(1, Kind::Symmetric, vec![vec![s("1")]], Matrix::from_rows(vec![vec![s("1")]]).unwrap());
        assert_eq!(h.validate(), Err(GcsError::TauConditionViolated(0, 0)));
        let h = HoloData::new(1, Kind::Skew, vec![vec![s("1")]], Matrix::from_rows(vec![vec![i]]).unwrap());
        assert_eq!(h.validate(), Err(GcsError::TauConditionViolated(0, 0)));
    }
}
