//! The forms `ε ∈ 𝔨* ⊗ 𝔨̄*` built from `(ε₀, μ, ν)` and height-based `ν`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{AdmissibleError, Coords};
use crate::certificate::{Certificate, Witness};
use crate::liealg::{RealForm, Subalgebra};
use crate::linalg::{zero_vec, Matrix, Vector};
use crate::scalar::Scalar;

pub const DOMAIN: &str = "ii.domain";
pub const MU_REAL: &str = "ii.mu_real";
pub const NU_REAL: &str = "ii.nu_real";
pub const EPS0_SKEW_HERMITIAN: &str = "ii.epsilon0_skew_hermitian";
pub const AD_NU: &str = "ii.ad_nu";
pub const SUPLIMENTARA: &str = "ii.suplimentara";
pub const E3: &str = "iii.e3";

/// `epsilon0[i][j] = ε₀(h_i, σ h_j)` on the basis `h_k` of `𝔥_𝔨`; `mu` keyed by roots of `R₀`,
/// `nu` by roots of `R₀ ∩ −R₀`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonParams {
    pub epsilon0: Matrix,
    #[serde(default)]
    pub mu: BTreeMap<usize, Scalar>,
    #[serde(default)]
    pub nu: BTreeMap<usize, Scalar>,
}

impl EpsilonParams {
    /// Rejects non-real `μ`, `ν` and a non-skew-Hermitian `ε₀`.
    pub fn new(epsilon0: Matrix, mu: BTreeMap<usize, Scalar>, nu: BTreeMap<usize, Scalar>) -> Result<Self, AdmissibleError> {
        let p = EpsilonParams { epsilon0, mu, nu };
        if let Some((id, w)) = p.intrinsic_violation() {
            return Err(AdmissibleError::ParamConstraintViolated(id, w));
        }
        Ok(p)
    }

    pub fn zero(m: usize) -> Self {
        EpsilonParams { epsilon0: Matrix::zeros(m, m), mu: BTreeMap::new(), nu: BTreeMap::new() }
    }

    fn mu(&self, k: usize) -> Scalar {
        self.mu.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    fn nu(&self, k: usize) -> Scalar {
        self.nu.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    fn intrinsic_violation(&self) -> Option<(&'static str, String)> {
        if let Some((k, v)) = self.mu.iter().find(|(_, v)| !v.is_real()) {
            return Some((MU_REAL, format!("mu[{k}] = {v}")));
        }
        if let Some((k, v)) = self.nu.iter().find(|(_, v)| !v.is_real()) {
            return Some((NU_REAL, format!("nu[{k}] = {v}")));
        }
        if !self.epsilon0.is_square() || self.epsilon0.add(&self.epsilon0.conj_transpose()) != Matrix::zeros(self.epsilon0.rows(), self.epsilon0.rows()) {
            return Some((EPS0_SKEW_HERMITIAN, "epsilon0 + epsilon0^H != 0".into()));
        }
        None
    }

    /// Records one clause per constraint on the parameters relative to `(F, 𝔨)`.
    pub fn record_constraints(&self, f: &RealForm, k: &Subalgebra, cert: &mut Certificate) {
        let rs = f.algebra.rs();
        let r0 = &k.r0.members;
        let sym = k.r0.symmetric_part(rs);

        let stray_mu = self.mu.keys().find(|a| !r0.contains(a));
        let stray_nu = self.nu.keys().find(|a| !sym.contains(a));
        let w = match (stray_mu, stray_nu) {
            (Some(&a), _) => Some(Witness::at(&[a]).with_note("mu outside R0")),
            (_, Some(&a)) => Some(Witness::at(&[a]).with_note("nu outside the symmetric part of R0")),
            _ => None,
        };
        cert.record(DOMAIN, self.mu.len() + self.nu.len(), w);

        let w = self.mu.iter().find(|(_, v)| !v.is_real()).map(|(&a, v)| Witness::at(&[a]).with_value(v.clone()));
        cert.record(MU_REAL, self.mu.len(), w);
        let w = self.nu.iter().find(|(_, v)| !v.is_real()).map(|(&a, v)| Witness::at(&[a]).with_value(v.clone()));
        cert.record(NU_REAL, self.nu.len(), w);

        let m = self.epsilon0.rows();
        let mut w = None;
        if self.epsilon0.cols() != m || m != k.h_k.len() {
            w = Some(Witness::default().with_note(format!("epsilon0 must be {0}x{0}", k.h_k.len())));
        } else {
            'h: for i in 0..m {
                for j in i..m {
                    let v = &self.epsilon0[(i, j)] + &self.epsilon0[(j, i)].conj();
                    if !v.is_zero() {
                        w = Some(Witness::at(&[i, j]).with_value(v));
                        break 'h;
                    }
                }
            }
        }
        let shape_ok = w.as_ref().is_none_or(|w| !w.indices.is_empty());
        cert.record(EPS0_SKEW_HERMITIAN, m * m, w);

        let w = sym.iter().find_map(|&a| {
            let v = self.nu(a) + self.nu(rs.neg(a));
            (!v.is_zero()).then(|| Witness::at(&[a, rs.neg(a)]).with_value(v))
        });
        cert.record(AD_NU, sym.len(), w);

        let triples = zero_sum_triples(f, &sym);
        let w = triples.iter().find_map(|&(a, b, c)| {
            let s = |x: usize| Scalar::from_int(f.a[x]) * self.nu(x);
            let v = s(a) + s(b) + s(c);
            (!v.is_zero()).then(|| Witness::at(&[a, b, c]).with_value(v))
        });
        cert.record(SUPLIMENTARA, triples.len(), w);

        if shape_ok {
            let (checked, w) = e3_witness(f, k, &self.epsilon0);
            cert.record(E3, checked, w);
        } else {
            cert.skip(E3, "epsilon0 has the wrong shape");
        }
    }

    /// First constraint violation relative to `(F, 𝔨)`.
    pub fn validate(&self, f: &RealForm, k: &Subalgebra) -> Result<(), AdmissibleError> {
        let mut cert = Certificate::new("epsilon parameters");
        self.record_constraints(f, k, &mut cert);
        match cert.clauses.iter().find(|c| c.status == crate::certificate::Status::Fail) {
            None => Ok(()),
            Some(c) => {
                let id = [DOMAIN, MU_REAL, NU_REAL, EPS0_SKEW_HERMITIAN, AD_NU, SUPLIMENTARA, E3]
                    .into_iter()
                    .find(|id| *id == c.id)
                    .expect("known clause id");
                Err(AdmissibleError::ParamConstraintViolated(id, format!("{:?}", c.witness)))
            }
        }
    }
}

/// Unordered triples `{α, β, γ} ⊆ S` with `α + β + γ = 0`, each listed once with `α < β < γ`.
pub(crate) fn zero_sum_triples(f: &RealForm, s: &BTreeSet<usize>) -> Vec<(usize, usize, usize)> {
    let rs = f.algebra.rs();
    let mut out = Vec::new();
    for &a in s {
        for &b in s.range(a + 1..) {
            if let Some(c) = rs.sum(a, b).map(|g| rs.neg(g)) {
                if c > b && s.contains(&c) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// `ε₀(H, H_{σα})` on basis vectors `H` of `𝔥_𝔨`, for `α` in the symmetric part of `R₀`.
fn e3_witness(f: &RealForm, k: &Subalgebra, eps0: &Matrix) -> (usize, Option<Witness>) {
    let w = &f.algebra;
    let rs = w.rs();
    let rank = w.rank;
    let hk_bar: Vec<Vector> = k.h_k.iter().map(|h| sigma_h(f, h)).collect();
    let coords = Coords::new(rank, &hk_bar);
    let mut checked = 0;
    for a in k.r0.symmetric_part(rs) {
        let h_sa = w.h_alpha(f.sigma.apply(a))[..rank].to_vec();
        let Some(c) = coords.of(&h_sa) else {
            return (checked + 1, Some(Witness::at(&[a]).with_note("H_{sigma(alpha)} outside conj(h_k)")));
        };
        for i in 0..k.h_k.len() {
            checked += 1;
            let v: Scalar = (0..c.len()).map(|j| &eps0[(i, j)] * &c[j]).fold(Scalar::zero(), |s, x| s + x);
            if !v.is_zero() {
                return (checked, Some(Witness::at(&[i, a]).with_value(v)));
            }
        }
    }
    (checked, None)
}

/// `σ` on a Cartan element given in `H_i` coordinates.
pub(crate) fn sigma_h(f: &RealForm, h: &[Scalar]) -> Vector {
    let rank = f.algebra.rank;
    let mut v = zero_vec(f.dim());
    v[..rank].clone_from_slice(h);
    f.sigma_vec(&v)[..rank].to_vec()
}

/// `ε(x, y)` for `x ∈ 𝔨`, `y ∈ 𝔨̄` (Weyl coordinates) from the tensor expression
/// `ε₀ + Σ μ_α(α⊗ω_{σα} + a_α ω_α⊗σα) − Σ a_α μ_{α+β} N_{σα σβ} ω_α⊗ω_{σβ} + Σ ν_γ ω_γ⊗ω_{−σγ}`.
pub fn epsilon_form(f: &RealForm, k: &Subalgebra, p: &EpsilonParams) -> impl Fn(&[Scalar], &[Scalar]) -> Scalar {
    let w = f.algebra.clone();
    let rank = w.rank;
    let sig = f.sigma.clone();
    let a = f.a.clone();
    let r0 = k.r0.members.clone();
    let sym = k.r0.symmetric_part(w.rs());
    let hk = Coords::new(rank, &k.h_k);
    let hk_bar_basis: Vec<Vector> = k.h_k.iter().map(|h| sigma_h(f, h)).collect();
    let hk_bar = Coords::new(rank, &hk_bar_basis);
    let p = p.clone();
    move |x: &[Scalar], y: &[Scalar]| {
        let rs = w.rs();
        let mut acc = Scalar::zero();
        let (xh, yh) = (&x[..rank], &y[..rank]);
        if xh.iter().any(|s| !s.is_zero()) && yh.iter().any(|s| !s.is_zero()) {
            let c = hk.of(xh).expect("Cartan part of x outside h_k");
            let d = hk_bar.of(yh).expect("Cartan part of y outside conj(h_k)");
            acc += p.epsilon0.bilinear(&c, &d);
        }
        for &al in &r0 {
            let mu = p.mu(al);
            if mu.is_zero() {
                continue;
            }
            let s = sig.apply(al);
            let t1 = w.root_value(al, x) * &y[w.e(s)];
            let t2 = Scalar::from_int(a[al]) * &x[w.e(al)] * w.root_value(s, y);
            acc += mu * (t1 + t2);
        }
        for &al in &r0 {
            if x[w.e(al)].is_zero() {
                continue;
            }
            for &be in &r0 {
                let Some(g) = rs.sum(al, be) else { continue };
                if !r0.contains(&g) {
                    continue;
                }
                let yv = &y[w.e(sig.apply(be))];
                if yv.is_zero() {
                    continue;
                }
                let n = w.n(sig.apply(al), sig.apply(be));
                acc -= Scalar::from_int(a[al]) * p.mu(g) * n * &x[w.e(al)] * yv;
            }
        }
        for &g in &sym {
            let partner = rs.neg(sig.apply(g));
            acc += p.nu(g) * &x[w.e(g)] * &y[w.e(partner)];
        }
        acc
    }
}

/// `ε(k_a, σ k_b)` without checking the parameter constraints.
pub fn build_epsilon_unchecked(f: &RealForm, k: &Subalgebra, p: &EpsilonParams) -> Result<Matrix, AdmissibleError> {
    let m = k.h_k.len();
    if p.epsilon0.rows() != m || p.epsilon0.cols() != m {
        return Err(AdmissibleError::Shape(format!("epsilon0 must be {m}x{m}")));
    }
    let form = epsilon_form(f, k, p);
    let conj = k.conj_basis(f);
    let rows = k.basis.iter().map(|x| conj.iter().map(|y| form(x, y)).collect()).collect();
    Ok(Matrix::from_rows(rows).unwrap_or_else(|_| Matrix::zeros(0, 0)))
}

/// As [`build_epsilon_unchecked`], after validating every parameter constraint.
pub fn build_epsilon(f: &RealForm, k: &Subalgebra, p: &EpsilonParams) -> Result<Matrix, AdmissibleError> {
    p.validate(f, k)?;
    build_epsilon_unchecked(f, k, p)
}

/// `ν_α = a_α n(α)`, with heights taken over the simple system of `R₀^sym ∩ R⁺`.
pub fn nu_from_heights(f: &RealForm, sym: &BTreeSet<usize>) -> Result<BTreeMap<usize, Scalar>, AdmissibleError> {
    let rs = f.algebra.rs();
    let symmetric = sym.iter().all(|&a| sym.contains(&rs.neg(a)));
    if !symmetric || !rs.closure_violations(sym).is_empty() {
        return Err(AdmissibleError::NotSymmetricClosed);
    }
    if sym.is_empty() {
        return Ok(BTreeMap::new());
    }
    let simple = rs.simple_system(sym);
    let mut out = BTreeMap::new();
    for &a in sym {
        let n = rs.height_in(rs.root(a), &simple).map_err(|_| AdmissibleError::NotSymmetricClosed)?;
        out.insert(a, Scalar::from_int(f.a[a] * n));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::subalgebra::{full_cartan, regular_subalgebra};
    use crate::liealg::{VoganDiagram, WeylAlgebra};
    use crate::rootsys::RootSubset;

    pub(crate) fn form(t: &str, theta: Option<&[usize]>, painted: &[usize]) -> RealForm {
        let w = WeylAlgebra::from_type_str(t).unwrap();
        let v = match theta {
            None => VoganDiagram::inner(t, painted).unwrap(),
            Some(th) => VoganDiagram::new(t, th, painted).unwrap(),
        };
        RealForm::build(&w, &v).unwrap()
    }

    #[test]
    fn zero_params_give_zero() {
        let f = form("A2", None, &[]);
        let k = regular_subalgebra(&f, &full_cartan(2), &RootSubset::positive(f.algebra.rs())).unwrap();
        let e = build_epsilon(&f, &k, &EpsilonParams::zero(2)).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn su2_borel_entries() {
        // ε = ε₀ + μ(α ⊗ ω_{−α} − a ω_α ⊗ α)
        for painted in [vec![], vec![0]] {
            let f = form("A1", None, &painted);
            let w = &f.algebra;
            let k = regular_subalgebra(&f, &full_cartan(1), &RootSubset::new([0])).unwrap();
            let mu = Scalar::from_int(3);
            let p = EpsilonParams::new(Matrix::from_rows(vec![vec![Scalar::i()]]).unwrap(), BTreeMap::from([(0, mu.clone())]), BTreeMap::new()).unwrap();
            let e = build_epsilon(&f, &k, &p).unwrap();
            let h = w.unit(0);
            let alpha_h = w.root_value(0, &h);
            let sigma_h0 = f.sigma_vec(&h);
            let sigma_e = f.sigma_vec(&w.unit(w.e(0)));
            let a = Scalar::from_int(f.a[0]);
            // σE_α = −a E_{−α}, so ε(H, σE_α) = −a μ α(H) and ε(E_α, σH) = a μ (−α)(σH)
            assert_eq!(e[(0, 1)], alpha_h.clone() * &mu * &sigma_e[w.e(1)]);
            assert_eq!(e[(1, 0)], -(a * &mu * w.root_value(0, &sigma_h0)));
            assert_eq!(e[(1, 1)], Scalar::zero());
            assert_eq!(e.add(&e.conj_transpose()), Matrix::zeros(2, 2));
        }
    }

    #[test]
    fn e1_and_e2_entries() {
        let f = form("A2", None, &[0]);
        let w = &f.algebra;
        let rs = w.rs();
        let k = regular_subalgebra(&f, &full_cartan(2), &RootSubset::positive(rs)).unwrap();
        let mu: BTreeMap<usize, Scalar> = (0..3).map(|a| (a, Scalar::from_int(a as i64 + 2))).collect();
        let p = EpsilonParams { epsilon0: Matrix::zeros(2, 2), mu: mu.clone(), nu: BTreeMap::new() };
        let form = epsilon_form(&f, &k, &p);
        for al in 0..3 {
            let s = f.sigma.apply(al);
            for hi in 0..2 {
                let h = w.unit(hi);
                assert_eq!(form(&h, &w.unit(w.e(s))), &mu[&al] * &w.root_value(al, &h));
            }
            for be in 0..3 {
                let expected = match rs.sum(al, be) {
                    Some(g) => -(Scalar::from_int(f.a[al]) * &mu[&g] * w.n(f.sigma.apply(al), f.sigma.apply(be))),
                    None => Scalar::zero(),
                };
                assert_eq!(form(&w.unit(w.e(al)), &w.unit(w.e(f.sigma.apply(be)))), expected);
            }
        }
        // exactly one cross summand on A2
        let pairs = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).filter(|&(a, b)| rs.sum(a, b).is_some()).count();
        assert_eq!(pairs, 2);
    }

    #[test]
    fn nu_heights() {
        let f = form("A1", None, &[]);
        assert!(nu_from_heights(&f, &BTreeSet::new()).unwrap().is_empty());
        let nu = nu_from_heights(&f, &BTreeSet::from([0, 1])).unwrap();
        assert_eq!(nu[&0], Scalar::one());
        assert_eq!(nu[&1], Scalar::from_int(-1));
        let f = form("A2", None, &[]);
        let all: BTreeSet<usize> = (0..6).collect();
        let nu = nu_from_heights(&f, &all).unwrap();
        let heights: Vec<i64> = (0..6).map(|k| nu[&k].to_rational().unwrap().to_integer().try_into().unwrap()).collect();
        let mut sorted = heights.clone();
        sorted.sort();
        assert_eq!(sorted, vec![-2, -1, -1, 1, 1, 2]);
        let triples = zero_sum_triples(&f, &all);
        assert_eq!(triples.len(), 2);
        assert!(nu_from_heights(&f, &BTreeSet::from([0])).is_err());
    }

    #[test]
    fn rejected_params() {
        let bad_mu = EpsilonParams::new(Matrix::zeros(1, 1), BTreeMap::from([(0, Scalar::i())]), BTreeMap::new());
        assert!(matches!(bad_mu, Err(AdmissibleError::ParamConstraintViolated(MU_REAL, _))));
        let bad_eps0 = EpsilonParams::new(Matrix::identity(1), BTreeMap::new(), BTreeMap::new());
        assert!(matches!(bad_eps0, Err(AdmissibleError::ParamConstraintViolated(EPS0_SKEW_HERMITIAN, _))));
        let f = form("A1", None, &[]);
        let k = regular_subalgebra(&f, &full_cartan(1), &RootSubset::all(f.algebra.rs())).unwrap();
        let p = EpsilonParams { epsilon0: Matrix::zeros(1, 1), mu: BTreeMap::new(), nu: BTreeMap::from([(0, Scalar::one())]) };
        assert!(matches!(build_epsilon(&f, &k, &p), Err(AdmissibleError::ParamConstraintViolated(AD_NU, _))));
        let p = EpsilonParams { epsilon0: Matrix::from_rows(vec![vec![Scalar::i()]]).unwrap(), mu: BTreeMap::new(), nu: BTreeMap::new() };
        assert!(matches!(build_epsilon(&f, &k, &p), Err(AdmissibleError::ParamConstraintViolated(E3, _))));
    }
}
