//! Integrability of `J^{𝒥,D}` for left-invariant data: the three-condition check and a
//! brute-force bracket oracle over sections of `π*L`.

use super::Connection;
use crate::bracket::StructureConstants;
use crate::certificate::{Certificate, Witness};
use crate::gcslin::HoloData;
use crate::linalg::{unit_vec, vec_add, vec_is_zero, vec_sub, zero_vec, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

pub const K_SUBALGEBRA: &str = "k subalgebra";
pub const D_PRESERVES: &str = "D_k tau(k) in tau(k)";
pub const CURVATURE: &str = "R|kxk tau(k) = 0";
pub const EPSILON_EQUATION: &str = "epsilon equation";
pub const ORACLE: &str = "pi*L involutive";

/// First basis pair `(a, b)` of `E` with `[e_a, e_b] ∉ E`.
pub(crate) fn subalgebra_witness(sc: &StructureConstants, h: &HoloData, e: &Subspace) -> (usize, Option<Witness>) {
    let k = h.k();
    let mut checked = 0;
    for a in 0..k {
        for b in a + 1..k {
            checked += 1;
            if !e.contains(&sc.bracket(&h.e[a], &h.e[b])) {
                return (checked, Some(Witness::at(&[a, b]).with_note("bracket leaves k")));
            }
        }
    }
    (checked, None)
}

/// Checks, on basis vectors of `𝔨 = E`: `[𝔨,𝔨] ⊆ 𝔨`; `D_𝔨 τ(𝔨) ⊆ τ(𝔨)` and `R|_{𝔨×𝔨} τ(𝔨) = 0`;
/// `ε(X, D_Y τZ) − ε(Y, D_X τZ) = ε([X,Y], τZ)`.
pub fn mainthm_check(sc: &StructureConstants, h: &HoloData, d: &Connection) -> Certificate {
    let mut cert = Certificate::new("integrability of J^{J,D}");
    let e = h.e_space();
    let tau = h.tau_basis();
    let tau_space = Subspace::span(h.n, &tau);
    let k = h.k();

    let (checked, w) = subalgebra_witness(sc, h, &e);
    let closed = w.is_none();
    cert.record(K_SUBALGEBRA, checked, w);

    let mut preserved = None;
    let mut checked = 0;
    'outer: for a in 0..k {
        for (b, t) in tau.iter().enumerate() {
            checked += 1;
            if !tau_space.contains(&d.apply(&h.e[a], t)) {
                preserved = Some(Witness::at(&[a, b]).with_note("D_{e_a} tau(e_b) leaves tau(k)"));
                break 'outer;
            }
        }
    }
    let preserves = preserved.is_none();
    cert.record(D_PRESERVES, checked, preserved);

    let mut flat = None;
    let mut checked = 0;
    'outer2: for a in 0..k {
        for b in a + 1..k {
            for (c, t) in tau.iter().enumerate() {
                checked += 1;
                let r = d.curvature(sc, &h.e[a], &h.e[b], t);
                if !vec_is_zero(&r) {
                    let idx = r.iter().position(|x| !x.is_zero()).unwrap();
                    flat = Some(Witness::at(&[a, b, c]).with_value(r[idx].clone()));
                    break 'outer2;
                }
            }
        }
    }
    cert.record(CURVATURE, checked, flat);

    if !(closed && preserves) {
        cert.skip(EPSILON_EQUATION, "needs [k,k] in k and D_k tau(k) in tau(k)");
        return cert;
    }
    let mut bad = None;
    let mut checked = 0;
    'outer3: for a in 0..k {
        for b in a + 1..k {
            for (c, t) in tau.iter().enumerate() {
                checked += 1;
                let v = epsilon_defect(sc, h, d, &h.e[a], &h.e[b], t);
                if !v.is_zero() {
                    bad = Some(Witness::at(&[a, b, c]).with_value(v));
                    break 'outer3;
                }
            }
        }
    }
    cert.record(EPSILON_EQUATION, checked, bad);
    cert
}

/// `ε(X, D_Y τZ) − ε(Y, D_X τZ) − ε([X,Y], τZ)`; assumes the arguments stay in `𝔨`, `τ(𝔨)`.
fn epsilon_defect(sc: &StructureConstants, h: &HoloData, d: &Connection, x: &[Scalar], y: &[Scalar], tz: &[Scalar]) -> Scalar {
    let ev = |p: &[Scalar], q: &[Scalar]| h.eval(p, q).expect("argument outside k or tau(k)");
    ev(x, &d.apply(y, tz)) - ev(y, &d.apply(x, tz)) - ev(&sc.bracket(x, y), tz)
}

/// `α` extended to `V^ℂ × τ(E)` by zero on a standard complement of `E`.
fn alpha_extended(h: &HoloData) -> impl Fn(&[Scalar], &[Scalar]) -> Scalar + '_ {
    let n = h.n;
    let comp = h.e_space().complement_indices();
    let mut cols = h.e.clone();
    cols.extend(comp.iter().map(|&i| unit_vec(n, i)));
    let m = Matrix::from_columns(n, &cols);
    let k = h.k();
    move |v: &[Scalar], w: &[Scalar]| {
        let c = m.solve(v).expect("basis of V");
        let proj = crate::linalg::combination(&c[..k], &h.e, n);
        h.eval(&proj, w).expect("second argument outside tau(k)")
    }
}

/// Basis triples where `(D_Xα)(Y,τZ) − (D_Yα)(X,τZ) + α(T_X Y, τZ) ≠ 0`, with `α` constant and
/// extended arbitrarily off `E`; needs `D_𝔨 τ(𝔨) ⊆ τ(𝔨)`.
pub fn ec_tensorial_violations(sc: &StructureConstants, h: &HoloData, d: &Connection) -> Vec<(usize, usize, usize)> {
    let al = alpha_extended(h);
    let tau = h.tau_basis();
    let dal = |x: &[Scalar], y: &[Scalar], w: &[Scalar]| -al(&d.apply(x, y), w) - al(y, &d.apply(x, w));
    let mut out = Vec::new();
    for a in 0..h.k() {
        for b in 0..h.k() {
            for (c, t) in tau.iter().enumerate() {
                let (x, y) = (&h.e[a], &h.e[b]);
                let v = dal(x, y, t) - dal(y, x, t) + al(&d.torsion(sc, x, y), t);
                if !v.is_zero() {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// `D_X η = −η ∘ D_X` on constant covectors.
fn d_covector(d: &Connection, x: &[Scalar], eta: &[Scalar]) -> Vector {
    d.operator(x).transpose().mul_vec(eta).into_iter().map(|s| -s).collect()
}

/// Brute-force involutivity of `π*L`: brackets of a spanning set of sections of `L`,
/// `[X̃+ξ, Ỹ+η](γ) = [X,Y]~ + R_{X,Y}(γ) + D_X η − D_Y ξ`, tested at `γ = 0` and every dual basis covector.
pub fn involutivity_oracle(sc: &StructureConstants, h: &HoloData, d: &Connection) -> Certificate {
    let mut cert = Certificate::new("involutivity oracle");
    let n = h.n;
    let sections = match h.holo_space() {
        Ok(s) => s,
        Err(e) => {
            cert.inconclusive(ORACLE, None, e.to_string());
            return cert;
        }
    };
    let l = Subspace::span(2 * n, &sections);
    let gammas: Vec<Vector> = std::iter::once(zero_vec(n)).chain((0..n).map(|j| unit_vec(n, j))).collect();
    let mut checked = 0;
    for (a, u) in sections.iter().enumerate() {
        for (b, v) in sections.iter().enumerate().skip(a + 1) {
            let (x, xi) = (&u[..n], &u[n..]);
            let (y, eta) = (&v[..n], &v[n..]);
            let horizontal = sc.bracket(x, y);
            let base = vec_sub(&d_covector(d, x, eta), &d_covector(d, y, xi));
            let curv = curvature_on_covectors(sc, d, x, y);
            for (g, gamma) in gammas.iter().enumerate() {
                checked += 1;
                // R_{X,Y}(γ) = −γ ∘ R_{X,Y}
                let rg: Vector = curv.transpose().mul_vec(gamma).into_iter().map(|s| -s).collect();
                let mut w = horizontal.clone();
                w.extend(vec_add(&base, &rg));
                if !l.contains(&w) {
                    let note = if g == 0 { "gamma = 0".to_string() } else { format!("gamma = dual basis {}", g - 1) };
                    cert.record(ORACLE, checked, Some(Witness::at(&[a, b, g]).with_note(note)));
                    return cert;
                }
            }
        }
    }
    cert.record(ORACLE, checked, None);
    cert
}

/// `R_{x,y}` as a matrix.
fn curvature_on_covectors(sc: &StructureConstants, d: &Connection, x: &[Scalar], y: &[Scalar]) -> Matrix {
    let n = d.dim;
    let cols: Vec<Vector> = (0..n).map(|j| d.curvature(sc, x, y, &unit_vec(n, j))).collect();
    Matrix::from_columns(n, &cols)
}
