//! Lifts of `𝒥^± = diag(J, ±J*)` and `𝒥^ω`, special complex connections.

use serde::{Deserialize, Serialize};

use super::{Connection, LeftInvError};
use crate::bracket::StructureConstants;
use crate::certificate::{Certificate, Witness};
use crate::linalg::{unit_vec, vec_add, vec_is_zero, vec_scale, vec_sub, Matrix, Vector};
use crate::scalar::Scalar;

pub const NIJENHUIS: &str = "J integrable";
pub const CURV_PART: &str = "curvature part";
pub const FLAT: &str = "D flat";
pub const TORSION_FREE: &str = "D torsion-free";
pub const DD_J: &str = "d^D J = 0";
pub const OMEGA_IDENTITY: &str = "omega identity";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn scalar(self) -> Scalar {
        match self {
            Sign::Plus => Scalar::one(),
            Sign::Minus => Scalar::from_int(-1),
        }
    }

    pub fn dj_clause(self) -> &'static str {
        match self {
            Sign::Plus => "D_X J = +J D_JX J",
            Sign::Minus => "D_X J = -J D_JX J",
        }
    }
}

fn basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| unit_vec(n, i)).collect()
}

/// `N(X,Y) = [JX,JY] − J[JX,Y] − J[X,JY] − [X,Y]`.
pub fn nijenhuis(sc: &StructureConstants, j: &Matrix, x: &[Scalar], y: &[Scalar]) -> Vector {
    let (jx, jy) = (j.mul_vec(x), j.mul_vec(y));
    let a = sc.bracket(&jx, &jy);
    let b = j.mul_vec(&sc.bracket(&jx, y));
    let c = j.mul_vec(&sc.bracket(x, &jy));
    vec_sub(&vec_sub(&vec_sub(&a, &b), &c), &sc.bracket(x, y))
}

fn nijenhuis_witness(sc: &StructureConstants, j: &Matrix) -> (usize, Option<Witness>) {
    let e = basis(sc.dim());
    let mut checked = 0;
    for a in 0..e.len() {
        for b in a + 1..e.len() {
            checked += 1;
            let v = nijenhuis(sc, j, &e[a], &e[b]);
            if let Some(p) = v.iter().position(|s| !s.is_zero()) {
                return (checked, Some(Witness::at(&[a, b]).with_value(v[p].clone())));
            }
        }
    }
    (checked, None)
}

fn check_almost_complex(j: &Matrix, n: usize) -> Result<(), LeftInvError> {
    if j.rows() != n || !j.is_square() {
        return Err(LeftInvError::Shape("J has the wrong size".into()));
    }
    if j.mul(j) != Matrix::identity(n).neg() {
        return Err(LeftInvError::NotAlmostComplex);
    }
    Ok(())
}

fn first_nonzero(v: &[Scalar]) -> Option<Scalar> {
    v.iter().find(|s| !s.is_zero()).cloned()
}

/// Integrability of the lift of `diag(J, ±J*)`: `J` integrable, `D_X(J) = ±J D_{JX}(J)` and
/// `(R_{X,Y} − R_{JX,JY})Z ± (R_{JX,Y} + R_{X,JY})JZ = 0`.
pub fn special_pm_check(sc: &StructureConstants, j: &Matrix, d: &Connection, sign: Sign) -> Result<Certificate, LeftInvError> {
    let n = sc.dim();
    check_almost_complex(j, n)?;
    let s = sign.scalar();
    let mut cert = Certificate::new(format!("lift of diag(J, {}J*)", if sign == Sign::Plus { "+" } else { "-" }));
    let (checked, w) = nijenhuis_witness(sc, j);
    cert.record(NIJENHUIS, checked, w);

    let e = basis(n);
    let mut bad = None;
    for (a, x) in e.iter().enumerate() {
        let lhs = d.covariant_of(x, j);
        let rhs = j.mul(&d.covariant_of(&j.mul_vec(x), j)).scale(&s);
        let diff = lhs.sub(&rhs);
        if !diff.is_zero() {
            let v = diff.to_rows().into_iter().flatten().find(|x| !x.is_zero()).unwrap();
            bad = Some(Witness::at(&[a]).with_value(v));
            break;
        }
    }
    cert.record(sign.dj_clause(), n, bad);

    let mut bad = None;
    let mut checked = 0;
    'outer: for a in 0..n {
        for b in a + 1..n {
            for c in 0..n {
                checked += 1;
                let (x, y, z) = (&e[a], &e[b], &e[c]);
                let (jx, jy, jz) = (j.mul_vec(x), j.mul_vec(y), j.mul_vec(z));
                let first = vec_sub(&d.curvature(sc, x, y, z), &d.curvature(sc, &jx, &jy, z));
                let second = vec_add(&d.curvature(sc, &jx, y, &jz), &d.curvature(sc, x, &jy, &jz));
                let v = vec_add(&first, &vec_scale(&second, &s));
                if let Some(val) = first_nonzero(&v) {
                    bad = Some(Witness::at(&[a, b, c]).with_value(val));
                    break 'outer;
                }
            }
        }
    }
    cert.record(CURV_PART, checked, bad);
    Ok(cert)
}

/// Special complex pair: `J` integrable, `D` flat and torsion-free, `d^D J = 0`.
pub fn special_complex_check(sc: &StructureConstants, j: &Matrix, d: &Connection) -> Result<Certificate, LeftInvError> {
    let n = sc.dim();
    check_almost_complex(j, n)?;
    let mut cert = Certificate::new("special complex structure");
    let (checked, w) = nijenhuis_witness(sc, j);
    cert.record(NIJENHUIS, checked, w);
    let curv = d.curvature_violations(sc);
    cert.record(FLAT, n * n * n, curv.first().map(|&(a, b, c)| Witness::at(&[a, b, c])));
    let tors = d.torsion_violations(sc);
    cert.record(TORSION_FREE, n * n, tors.first().map(|&(a, b)| Witness::at(&[a, b])));
    let e = basis(n);
    let mut bad = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            let v = vec_sub(&d.covariant_of(&e[a], j).mul_vec(&e[b]), &d.covariant_of(&e[b], j).mul_vec(&e[a]));
            if !vec_is_zero(&v) {
                bad = Some(Witness::at(&[a, b]).with_value(first_nonzero(&v).unwrap()));
                break 'outer;
            }
        }
    }
    cert.record(DD_J, n * (n - 1) / 2, bad);
    Ok(cert)
}

/// `dβ(X,Y,Z) = −β([X,Y],Z) + β([X,Z],Y) − β([Y,Z],X)` for constant `β`.
pub fn d_form(sc: &StructureConstants, beta: &Matrix, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Scalar {
    -beta.bilinear(&sc.bracket(x, y), z) + beta.bilinear(&sc.bracket(x, z), y) - beta.bilinear(&sc.bracket(y, z), x)
}

/// `(D_Z β)(X, Y) = −β(D_Z X, Y) − β(X, D_Z Y)` for constant `β`.
pub fn cov_form(d: &Connection, beta: &Matrix, z: &[Scalar], x: &[Scalar], y: &[Scalar]) -> Scalar {
    -beta.bilinear(&d.apply(z, x), y) - beta.bilinear(x, &d.apply(z, y))
}

/// `(D_Zβ)(X,Y) + β(T_Z X, Y) + β(X, T_Z Y)`.
fn rel2(sc: &StructureConstants, d: &Connection, beta: &Matrix, z: &[Scalar], x: &[Scalar], y: &[Scalar]) -> Scalar {
    cov_form(d, beta, z, x, y) + beta.bilinear(&d.torsion(sc, z, x), y) + beta.bilinear(x, &d.torsion(sc, z, y))
}

/// Left side minus right side of the identity
/// `(D_Xβ)(Y,Z) − (D_Yβ)(X,Z) + β(T_X Y, Z) = dβ(X,Y,Z) − ((D_Zβ)(X,Y) + β(T_Z X,Y) + β(X,T_Z Y))`.
pub fn simple_ec_defect(sc: &StructureConstants, beta: &Matrix, d: &Connection, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Scalar {
    let lhs = cov_form(d, beta, x, y, z) - cov_form(d, beta, y, x, z) + beta.bilinear(&d.torsion(sc, x, y), z);
    let rhs = d_form(sc, beta, x, y, z) - rel2(sc, d, beta, z, x, y);
    lhs - rhs
}

/// Integrability of the lift of `𝒥^ω`: `D` flat and `dω(X,Y,Z) − (D_Zω)(X,Y) − ω(T_Z X,Y) − ω(X,T_Z Y) = 0`.
pub fn omega_check(sc: &StructureConstants, omega: &Matrix, d: &Connection) -> Result<Certificate, LeftInvError> {
    let n = sc.dim();
    if omega.rows() != n || !omega.is_square() {
        return Err(LeftInvError::Shape("omega has the wrong size".into()));
    }
    if *omega != omega.transpose().neg() || omega.det().is_zero() {
        return Err(LeftInvError::Degenerate);
    }
    let mut cert = Certificate::new("lift of J^omega");
    let curv = d.curvature_violations(sc);
    cert.record(FLAT, n * n * n, curv.first().map(|&(a, b, c)| Witness::at(&[a, b, c])));
    let e = basis(n);
    let mut bad = None;
    let mut checked = 0;
    'outer: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                checked += 1;
                let v = d_form(sc, omega, &e[a], &e[b], &e[c]) - rel2(sc, d, omega, &e[c], &e[a], &e[b]);
                if !v.is_zero() {
                    bad = Some(Witness::at(&[a, b, c]).with_value(v));
                    break 'outer;
                }
            }
        }
    }
    cert.record(OMEGA_IDENTITY, checked, bad);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcslin::sample::standard_complex;
    use crate::gcslin::{holo_space_of, GCStructure, Kind};
    use crate::leftinv::{algebras, dc_connection, mainthm_check};

    /// `aff` with `D_{e₀} = Id`, `D_{e₁} = 0`.
    fn aff_special() -> (StructureConstants, Matrix, Connection) {
        let sc = algebras::aff();
        let j = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
        let d = Connection::from_operators(&[Matrix::identity(2), Matrix::zeros(2, 2)]);
        (sc, j, d)
    }

    #[test]
    fn flat_kaehler_both_signs() {
        let sc = algebras::abelian(4);
        let j = standard_complex(4);
        for s in [Sign::Plus, Sign::Minus] {
            assert!(special_pm_check(&sc, &j, &Connection::zero(4), s).unwrap().passed());
        }
    }

    #[test]
    fn special_complex_on_aff() {
        let (sc, j, d) = aff_special();
        assert!(special_complex_check(&sc, &j, &d).unwrap().passed());
        assert!(special_pm_check(&sc, &j, &d, Sign::Plus).unwrap().passed());
    }

    #[test]
    fn agrees_with_mainthm() {
        let (sc, j, d) = aff_special();
        for (s, kind) in [(Sign::Plus, Kind::Symmetric), (Sign::Minus, Kind::Skew)] {
            let h = holo_space_of(&GCStructure::complex_type(&j, kind).unwrap()).unwrap();
            let a = special_pm_check(&sc, &j, &d, s).unwrap().passed();
            assert_eq!(a, mainthm_check(&sc, &h, &d).passed());
            let dc = dc_connection(&sc);
            assert_eq!(special_pm_check(&sc, &j, &dc, s).unwrap().passed(), mainthm_check(&sc, &h, &dc).passed());
        }
    }

    #[test]
    fn non_integrable_j_detected() {
        let sc = algebras::so(4);
        let mut j = Matrix::zeros(6, 6);
        // J pairs (0,5), (1,4), (2,3)
        for (p, q) in [(0, 5), (1, 4), (2, 3)] {
            j[(q, p)] = Scalar::one();
            j[(p, q)] = Scalar::from_int(-1);
        }
        let c = special_pm_check(&sc, &j, &Connection::zero(6), Sign::Plus).unwrap();
        let integrable = (0..6).all(|a| (0..6).all(|b| vec_is_zero(&nijenhuis(&sc, &j, &unit_vec(6, a), &unit_vec(6, b)))));
        assert_eq!(c.status_of(NIJENHUIS) == Some(crate::certificate::Status::Pass), integrable);
    }

    #[test]
    fn omega_with_mainthm() {
        let sc = algebras::aff();
        let omega = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        let h = holo_space_of(&GCStructure::from_symplectic(&omega).unwrap()).unwrap();
        let (_, _, d) = aff_special();
        for conn in [d, dc_connection(&sc), Connection::zero(2)] {
            let a = omega_check(&sc, &omega, &conn).unwrap().passed();
            assert_eq!(a, mainthm_check(&sc, &h, &conn).passed());
        }
        let ab = algebras::abelian(2);
        assert!(omega_check(&ab, &omega, &Connection::zero(2)).unwrap().passed());
    }

    #[test]
    fn simple_ec_on_basis() {
        let sc = algebras::so(3);
        let beta = Matrix::from_ints(&[&[0, 1, 2], &[-1, 0, -3], &[-2, 3, 0]]);
        let d = Connection::from_fn(3, |i, j| {
            let mut v = vec![Scalar::zero(); 3];
            v[(2 * i + j) % 3] = Scalar::from_int(i as i64 + j as i64 - 1);
            v
        });
        let e = basis(3);
        for x in &e {
            for y in &e {
                for z in &e {
                    assert!(simple_ec_defect(&sc, &beta, &d, x, y, z).is_zero());
                }
            }
        }
    }
}
