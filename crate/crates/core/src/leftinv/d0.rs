//! The flat connection `𝒟⁰` attached to a real form, and `D^c_X Y = [X, Y]`.

use super::{Connection, LeftInvError};
use crate::bracket::StructureConstants;
use crate::liealg::RealForm;
use crate::linalg::{vec_scale, zero_vec, Vector};
use crate::scalar::Scalar;

/// `𝒟⁰` on the Weyl basis of `𝔤^ℂ`, from its four defining formulas.
pub fn d0_weyl(f: &RealForm) -> Connection {
    let w = &f.algebra;
    let rank = w.rank;
    let dim = w.dim;
    let sig = |k: usize| f.sigma.apply(k);
    Connection::from_fn(dim, |i, j| match (w.root_of(i), w.root_of(j)) {
        // 𝒟⁰_{E_α} E_β = −a_α [E_{σα}, E_β]
        (Some(a), Some(_)) => {
            let br = w.bracket(&w.unit(w.e(sig(a))), &w.unit(j));
            vec_scale(&br, &Scalar::from_int(-f.a[a]))
        }
        // 𝒟⁰_H E_β = σ(β)(H) E_β
        (None, Some(b)) => {
            let mut v = zero_vec(dim);
            v[j] = w.root_value(sig(b), &w.unit(i));
            v
        }
        // 𝒟⁰_{E_β} H = σ(β)(H) a_β E_{σβ}
        (Some(b), None) => {
            let mut v = zero_vec(dim);
            v[w.e(sig(b))] = w.root_value(sig(b), &w.unit(j)) * Scalar::from_int(f.a[b]);
            v
        }
        (None, None) => {
            debug_assert!(i < rank && j < rank);
            zero_vec(dim)
        }
    })
}

/// `𝒟⁰` restricted to `𝔤`, in the real basis of `f`.
pub fn d0_connection(f: &RealForm) -> Result<Connection, LeftInvError> {
    let dw = d0_weyl(f);
    let dim = f.dim();
    let mut table = vec![vec![Vector::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let v = f.to_real_coords(&dw.apply(&f.real_basis[i], &f.real_basis[j]));
            if !v.iter().all(Scalar::is_real) {
                return Err(LeftInvError::RealityViolated(i, j));
            }
            table[i][j] = v;
        }
    }
    Ok(Connection { dim, table })
}

/// `D^c_X Y = [X, Y]`.
pub fn dc_connection(sc: &StructureConstants) -> Connection {
    Connection::from_fn(sc.dim(), |i, j| sc.basis_bracket_vec(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{RealBasisKind, VoganDiagram, WeylAlgebra};

    fn form(t: &str, painted: &[usize]) -> RealForm {
        let w = WeylAlgebra::from_type_str(t).unwrap();
        RealForm::build(&w, &VoganDiagram::inner(t, painted).unwrap()).unwrap()
    }

    #[test]
    fn d0_is_bracket_with_linear_sigma() {
        for f in [form("A1", &[]), form("A1", &[0]), form("A2", &[0]), form("B2", &[1])] {
            let d = d0_weyl(&f);
            let w = &f.algebra;
            for i in 0..w.dim {
                for j in 0..w.dim {
                    let expected = w.bracket(&f.sigma_linear(&w.unit(i)), &w.unit(j));
                    assert_eq!(d.table[i][j], expected, "entry ({i}, {j})");
                }
            }
        }
    }

    #[test]
    fn d0_real_and_flat() {
        for f in [form("A1", &[]), form("A1", &[0]), form("A2", &[]), form("A2", &[0])] {
            let d = d0_connection(&f).unwrap();
            assert!(d.curvature_violations(&f.real_brackets).is_empty());
        }
    }

    #[test]
    fn su2_table_entry() {
        // 𝒟⁰_{A_α}(H) = iα(H) a_α B_{σα} for H ∈ 𝔥⁺
        let f = form("A1", &[]);
        let w = &f.algebra;
        let d = d0_weyl(&f);
        let h = &f.h_plus[0];
        let a_alpha = f.real_basis[f.kinds.iter().position(|k| *k == RealBasisKind::A(0)).unwrap()].clone();
        let lhs = d.apply(&a_alpha, h);
        let sa = f.sigma.apply(0);
        let mut b_sigma = zero_vec(w.dim);
        b_sigma[w.e(sa)] = Scalar::i();
        b_sigma[w.e(f.sigma.apply(sa))] = Scalar::i() * Scalar::from_int(f.a[sa]);
        let rhs = vec_scale(&b_sigma, &(Scalar::i() * w.root_value(0, h) * Scalar::from_int(f.a[0])));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dc_is_flat_with_bracket_torsion() {
        let f = form("A1", &[]);
        let sc = &f.real_brackets;
        let d = dc_connection(sc);
        assert!(d.curvature_violations(sc).is_empty());
        let e = |i| crate::linalg::unit_vec(3, i);
        assert_eq!(d.torsion(sc, &e(0), &e(1)), sc.bracket(&e(0), &e(1)));
        assert_eq!(dc_connection(&StructureConstants::abelian(2)), Connection::zero(2));
    }
}
