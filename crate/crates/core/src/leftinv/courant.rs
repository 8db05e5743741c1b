//! Courant integrability of left-invariant structures.

use serde::Serialize;

use super::mainthm::{subalgebra_witness, K_SUBALGEBRA};
use super::LeftInvError;
use crate::bracket::StructureConstants;
use crate::certificate::{Certificate, Witness};
use crate::gcslin::{gcan, HoloData, Kind};
use crate::linalg::{vec_sub, Subspace, Vector};
use crate::scalar::Scalar;

pub const D_E_ALPHA: &str = "d_E alpha = 0";

/// Skew structures: `E` involutive and `d_E α(X,Y,Z) = α(X,[Y,Z]) + α(Z,[X,Y]) + α(Y,[Z,X]) = 0`.
pub fn courant_check(sc: &StructureConstants, h: &HoloData) -> Result<Certificate, LeftInvError> {
    if h.kind != Kind::Skew {
        return Err(LeftInvError::WrongKind(Kind::Skew));
    }
    let mut cert = Certificate::new("Courant integrability");
    let e = h.e_space();
    let (checked, w) = subalgebra_witness(sc, h, &e);
    let closed = w.is_none();
    cert.record(K_SUBALGEBRA, checked, w);
    if !closed {
        cert.skip(D_E_ALPHA, "needs [k,k] in k");
        return Ok(cert);
    }
    let ev = |x: &[Scalar], y: &[Scalar]| h.eval(x, y).expect("argument outside E");
    let k = h.k();
    let mut checked = 0;
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                checked += 1;
                let (x, y, z) = (&h.e[a], &h.e[b], &h.e[c]);
                let v = ev(x, &sc.bracket(y, z)) + ev(z, &sc.bracket(x, y)) + ev(y, &sc.bracket(z, x));
                if !v.is_zero() {
                    cert.record(D_E_ALPHA, checked, Some(Witness::at(&[a, b, c]).with_value(v)));
                    return Ok(cert);
                }
            }
        }
    }
    cert.record(D_E_ALPHA, checked, None);
    Ok(cert)
}

/// Why a symmetric structure fails Courant integrability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonIntegrability {
    /// Sections `u, v` of `L` whose Courant bracket leaves `L`.
    BracketLeavesL { u: Vector, v: Vector, bracket: Vector },
    /// `g_can(u, v) ≠ 0` for `u, v ∈ L`, while `L ⊥ L̄` and `L ≠ (Δ ⊕ V*)^ℂ`.
    NotIsotropic { u: Vector, v: Vector, value: Scalar },
}

/// `L_X η = −η ∘ ad_X` on left-invariant forms.
fn lie_derivative(sc: &StructureConstants, x: &[Scalar], eta: &[Scalar]) -> Vector {
    sc.ad(x).transpose().mul_vec(eta).into_iter().map(|s| -s).collect()
}

/// Courant bracket of left-invariant sections; the function term is constant and drops out.
pub fn courant_bracket(sc: &StructureConstants, u: &[Scalar], v: &[Scalar]) -> Vector {
    let n = sc.dim();
    let (x, xi) = (&u[..n], &u[n..]);
    let (y, eta) = (&v[..n], &v[n..]);
    let mut w = sc.bracket(x, y);
    w.extend(vec_sub(&lie_derivative(sc, x, eta), &lie_derivative(sc, y, xi)));
    w
}

pub fn non_integrability_witness(sc: &StructureConstants, h: &HoloData) -> Result<NonIntegrability, LeftInvError> {
    if h.kind != Kind::Symmetric {
        return Err(LeftInvError::WrongKind(Kind::Symmetric));
    }
    let n = h.n;
    let sections = h.holo_space()?;
    let l = Subspace::span(2 * n, &sections);
    for (a, u) in sections.iter().enumerate() {
        for v in sections.iter().skip(a + 1) {
            let w = courant_bracket(sc, u, v);
            if !l.contains(&w) {
                return Ok(NonIntegrability::BracketLeavesL { u: u.clone(), v: v.clone(), bracket: w });
            }
        }
    }
    let g = gcan(n);
    for u in &sections {
        for v in &sections {
            let value = g.bilinear(u, v);
            if !value.is_zero() {
                return Ok(NonIntegrability::NotIsotropic { u: u.clone(), v: v.clone(), value });
            }
        }
    }
    Err(LeftInvError::Shape("holomorphic space is isotropic; input is not a symmetric structure".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcslin::{holo_space_of, GCStructure};
    use crate::leftinv::{algebras, dc_connection, mainthm_check};
    use crate::linalg::Matrix;

    #[test]
    fn metric_on_su2_not_integrable() {
        let sc = algebras::so(3);
        let h = holo_space_of(&GCStructure::from_metric(&Matrix::identity(3)).unwrap()).unwrap();
        assert!(non_integrability_witness(&sc, &h).is_ok());
    }

    #[test]
    fn complex_structure_lift_not_isotropic() {
        let sc = algebras::abelian(2);
        let jv = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
        let h = holo_space_of(&GCStructure::from_complex_structure(&jv).unwrap()).unwrap();
        match non_integrability_witness(&sc, &h).unwrap() {
            NonIntegrability::NotIsotropic { value, .. } => assert!(!value.is_zero()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn skew_symplectic_on_so4() {
        let sc = algebras::so(4);
        let omega = crate::gcslin::sample::standard_complex(6).neg();
        let h = holo_space_of(&GCStructure::from_symplectic(&omega).unwrap()).unwrap();
        let c = courant_check(&sc, &h).unwrap();
        let m = mainthm_check(&sc, &h, &dc_connection(&sc));
        assert_eq!(c.passed(), m.passed());
        assert_eq!(courant_check(&sc, &holo_space_of(&GCStructure::from_metric(&Matrix::identity(6)).unwrap()).unwrap()).unwrap_err(), LeftInvError::WrongKind(Kind::Skew));
    }
}
