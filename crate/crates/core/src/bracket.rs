//! Sparse structure constants of a finite-dimensional Lie algebra.

use serde::Serialize;

use crate::linalg::{zero_vec, Matrix, Vector};
use crate::scalar::Scalar;

/// `[bᵢ, bⱼ] = Σₖ cᵢⱼᵏ bₖ`, stored as sparse `(k, cᵢⱼᵏ)` lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureConstants {
    dim: usize,
    table: Vec<Vec<(usize, Scalar)>>,
}

impl StructureConstants {
    pub fn abelian(dim: usize) -> Self {
        StructureConstants { dim, table: vec![Vec::new(); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `[bᵢ, bⱼ]` and `[bⱼ, bᵢ] = −[bᵢ, bⱼ]`.
    pub fn set(&mut self, i: usize, j: usize, value: &[Scalar]) {
        let entries: Vec<(usize, Scalar)> =
            value.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
        let negated = entries.iter().map(|(k, c)| (*k, -c)).collect();
        self.table[i * self.dim + j] = entries;
        self.table[j * self.dim + i] = negated;
    }

    /// Sets a single-term bracket `[bᵢ, bⱼ] = c bₖ`.
    pub fn set_term(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let mut v = zero_vec(self.dim);
        v[k] = c;
        self.set(i, j, &v);
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn basis_bracket_vec(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vec(self.dim);
        for (k, c) in self.basis_bracket(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let entries = self.basis_bracket(i, j);
                if entries.is_empty() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, c) in entries {
                    out[*k] += &coeff * c;
                }
            }
        }
        out
    }

    /// Matrix of `ad x`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|m| {
                let mut e = zero_vec(self.dim);
                e[m] = Scalar::one();
                self.bracket(x, &e)
            })
            .collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Trace form `tr(ad bᵢ ad bⱼ)` on the basis.
    pub fn killing_matrix(&self) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                // Σ_m Σ_k c_{j m}^k c_{i k}^m
                let mut acc = Scalar::zero();
                for col in 0..n {
                    for (k, c) in self.basis_bracket(j, col) {
                        for (row, d) in self.basis_bracket(i, *k) {
                            if *row == col {
                                acc += c * d;
                            }
                        }
                    }
                }
                m[(i, j)] = acc.clone();
                m[(j, i)] = acc;
            }
        }
        m
    }

    /// Basis triples violating the Jacobi identity.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let mut out = Vec::new();
        let unit = |k: usize| {
            let mut e = zero_vec(n);
            e[k] = Scalar::one();
            e
        };
        for i in 0..n {
            for j in i + 1..n {
                let bij = self.basis_bracket_vec(i, j);
                for k in j + 1..n {
                    let ek = unit(k);
                    let t1 = self.bracket(&bij, &ek);
                    let t2 = self.bracket(&self.basis_bracket_vec(j, k), &unit(i));
                    let t3 = self.bracket(&self.basis_bracket_vec(k, i), &unit(j));
                    if t1.iter().zip(&t2).zip(&t3).any(|((a, b), c)| !(a + b + c).is_zero()) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// Structure constants after the change of basis whose columns are `basis` (must be invertible).
    pub fn in_basis(&self, basis: &[Vector]) -> Option<StructureConstants> {
        let p = Matrix::from_columns(self.dim, basis);
        let pinv = p.inverse().ok()?;
        let mut out = StructureConstants::abelian(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = pinv.mul_vec(&self.bracket(&basis[i], &basis[j]));
                out.set(i, j, &v);
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sl2() -> StructureConstants {
        // basis h, e, f
        let mut c = StructureConstants::abelian(3);
        c.set_term(0, 1, 1, Scalar::from_int(2));
        c.set_term(0, 2, 2, Scalar::from_int(-2));
        c.set_term(1, 2, 0, Scalar::one());
        c
    }

    #[test]
    fn sl2_trace_form() {
        let k = sl2().killing_matrix();
        assert_eq!(k, Matrix::from_ints(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
        assert!(sl2().jacobi_violations().is_empty());
    }

    #[test]
    fn trace_form_matches_dense_ad() {
        let c = sl2();
        let basis: Vec<Vector> = (0..3).map(|k| crate::linalg::unit_vec(3, k)).collect();
        for i in 0..3 {
            for j in 0..3 {
                let dense = c.ad(&basis[i]).mul(&c.ad(&basis[j]));
                let tr: Scalar = (0..3).map(|k| dense[(k, k)].clone()).sum();
                assert_eq!(tr, c.killing_matrix()[(i, j)]);
            }
        }
    }

    #[test]
    fn broken_jacobi_is_detected() {
        let mut c = StructureConstants::abelian(3);
        c.set_term(0, 1, 2, Scalar::one());
        c.set_term(1, 2, 0, Scalar::one());
        c.set_term(2, 0, 2, Scalar::one());
        assert!(!c.jacobi_violations().is_empty());
    }
}
