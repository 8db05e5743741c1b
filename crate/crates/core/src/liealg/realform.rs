//! Real forms from Vogan diagrams: the constants `a_α`, the involution σ and a real basis.

use serde::{Deserialize, Serialize};

use super::{LieError, WeylAlgebra};
use crate::bracket::StructureConstants;
use crate::linalg::{vec_conj, vec_scale, vec_sub, zero_vec, Matrix, Subspace, Vector};
use crate::rootsys::{CartanType, RootError, SigmaAction};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VoganDiagram {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub theta: Vec<usize>,
    #[serde(default)]
    pub painted: Vec<usize>,
}

impl VoganDiagram {
    /// Diagram with `θ = Id`.
    pub fn inner(t: &str, painted: &[usize]) -> Result<Self, LieError> {
        let cartan_type: CartanType = t.parse()?;
        let theta = (0..cartan_type.rank()).collect();
        Ok(VoganDiagram { cartan_type, theta, painted: painted.to_vec() })
    }

    pub fn new(t: &str, theta: &[usize], painted: &[usize]) -> Result<Self, LieError> {
        Ok(VoganDiagram { cartan_type: t.parse()?, theta: theta.to_vec(), painted: painted.to_vec() })
    }
}

/// Kind of a real basis vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RealBasisKind {
    /// element of `𝔥^+ = ⟨i(H_α − H_{σα})⟩`
    HPlus,
    /// element of `𝔥^- = ⟨H_α + H_{σα}⟩`
    HMinus,
    /// `A_α = E_α − a_α E_{σα}`
    A(usize),
    /// `B_α = i(E_α + a_α E_{σα})`
    B(usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct RealForm {
    pub algebra: WeylAlgebra,
    pub vogan: VoganDiagram,
    pub sigma: SigmaAction,
    /// `a_α ∈ {±1}` for every root.
    pub a: Vec<i64>,
    pub inner: bool,
    pub h_plus: Vec<Vector>,
    pub h_minus: Vec<Vector>,
    /// Complex coordinates of the real basis vectors.
    pub real_basis: Vec<Vector>,
    pub kinds: Vec<RealBasisKind>,
    /// Structure constants of `𝔤` in the real basis.
    pub real_brackets: StructureConstants,
    #[serde(skip)]
    sigma_matrix: Matrix,
    #[serde(skip)]
    to_real: Matrix,
    #[serde(skip)]
    from_real: Matrix,
}

impl RealForm {
    pub fn build(algebra: &WeylAlgebra, vogan: &VoganDiagram) -> Result<Self, LieError> {
        let rs = algebra.rs();
        if vogan.cartan_type != rs.cartan_type {
            return Err(LieError::TypeMismatch {
                diagram: vogan.cartan_type.to_string(),
                algebra: rs.cartan_type.to_string(),
            });
        }
        let sigma = SigmaAction::from_theta(rs, &vogan.theta).map_err(|e| match e {
            RootError::BadTheta(m) => LieError::ThetaNotAutomorphism(m),
            other => LieError::Root(other),
        })?;
        for &p in &vogan.painted {
            if p >= rs.rank || vogan.theta[p] != p {
                return Err(LieError::PaintedNotFixed(p));
            }
        }
        let a = extend_a(algebra, &sigma, &vogan.painted)?;
        let inner = sigma.is_inner();
        let dim = algebra.dim;
        let rank = algebra.rank;

        // σ(v) = S · conj(v)
        let mut s = Matrix::zeros(dim, dim);
        for i in 0..rank {
            s[(vogan.theta[i], i)] = Scalar::from_int(-1);
        }
        for k in 0..rs.len() {
            s[(algebra.e(sigma.apply(k)), algebra.e(k))] = Scalar::from_int(-a[k]);
        }

        let apply = |v: &[Scalar]| s.mul_vec(&vec_conj(v));
        let i = Scalar::i();
        let mut h_plus = Vec::new();
        let mut h_minus = Vec::new();
        for k in 0..rank {
            let h = algebra.unit(k);
            let sh = apply(&h);
            h_minus.push(crate::linalg::vec_add(&h, &sh));
            h_plus.push(vec_scale(&vec_sub(&h, &sh), &i));
        }
        let h_minus = independent(dim, h_minus);
        let h_plus = independent(dim, h_plus);

        let mut real_basis = Vec::with_capacity(dim);
        let mut kinds = Vec::with_capacity(dim);
        for v in &h_plus {
            real_basis.push(v.clone());
            kinds.push(RealBasisKind::HPlus);
        }
        for v in &h_minus {
            real_basis.push(v.clone());
            kinds.push(RealBasisKind::HMinus);
        }
        let npos = rs.num_positive();
        for k in 0..npos {
            let mut v = zero_vec(dim);
            v[algebra.e(k)] += Scalar::one();
            v[algebra.e(sigma.apply(k))] -= Scalar::from_int(a[k]);
            real_basis.push(v);
            kinds.push(RealBasisKind::A(k));
        }
        for k in 0..npos {
            let mut v = zero_vec(dim);
            v[algebra.e(k)] += i.clone();
            v[algebra.e(sigma.apply(k))] += &i * &Scalar::from_int(a[k]);
            real_basis.push(v);
            kinds.push(RealBasisKind::B(k));
        }
        let from_real = Matrix::from_columns(dim, &real_basis);
        let to_real = from_real
            .inverse()
            .map_err(|_| LieError::Internal("real basis is not a basis of g^C".into()))?;
        let real_brackets = algebra
            .brackets
            .in_basis(&real_basis)
            .ok_or_else(|| LieError::Internal("real basis change failed".into()))?;

        Ok(RealForm {
            algebra: algebra.clone(),
            vogan: vogan.clone(),
            sigma,
            a,
            inner,
            h_plus,
            h_minus,
            real_basis,
            kinds,
            real_brackets,
            sigma_matrix: s,
            to_real,
            from_real,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// Antilinear involution `σ`.
    pub fn sigma_vec(&self, v: &[Scalar]) -> Vector {
        self.sigma_matrix.mul_vec(&vec_conj(v))
    }

    /// Complex-linear map agreeing with `σ` on the Weyl basis.
    pub fn sigma_linear(&self, v: &[Scalar]) -> Vector {
        self.sigma_matrix.mul_vec(v)
    }

    pub fn sigma_matrix(&self) -> &Matrix {
        &self.sigma_matrix
    }

    /// Real-basis coordinates of a vector of `𝔤^ℂ` (complex in general).
    pub fn to_real_coords(&self, v: &[Scalar]) -> Vector {
        self.to_real.mul_vec(v)
    }

    pub fn from_real_coords(&self, c: &[Scalar]) -> Vector {
        self.from_real.mul_vec(c)
    }

    /// Columns are the real basis in Weyl coordinates.
    pub fn real_to_weyl(&self) -> &Matrix {
        &self.from_real
    }

    pub fn weyl_to_real(&self) -> &Matrix {
        &self.to_real
    }

    /// Basis indices `(i, j)` where `σ[bᵢ, bⱼ] ≠ [σbᵢ, σbⱼ]`.
    pub fn automorphism_violations(&self) -> Vec<(usize, usize)> {
        let w = &self.algebra;
        let mut out = Vec::new();
        for i in 0..w.dim {
            for j in i + 1..w.dim {
                let lhs = self.sigma_vec(&w.brackets.basis_bracket_vec(i, j));
                let rhs = w.bracket(&self.sigma_vec(&w.unit(i)), &self.sigma_vec(&w.unit(j)));
                if lhs != rhs {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `σ² = Id` and antilinearity on `i·bₖ`.
    pub fn involution_violations(&self) -> Vec<usize> {
        let w = &self.algebra;
        (0..w.dim)
            .filter(|&k| {
                let e = w.unit(k);
                let ie = vec_scale(&e, &Scalar::i());
                self.sigma_vec(&self.sigma_vec(&e)) != e
                    || self.sigma_vec(&ie) != vec_scale(&self.sigma_vec(&e), &-Scalar::i())
            })
            .collect()
    }

    /// Roots where `a_α = a_{−α} = a_{σα} ∈ {±1}` fails.
    pub fn sim1_violations(&self) -> Vec<usize> {
        let rs = self.algebra.rs();
        (0..rs.len())
            .filter(|&k| {
                self.a[k].abs() != 1 || self.a[k] != self.a[rs.neg(k)] || self.a[k] != self.a[self.sigma.apply(k)]
            })
            .collect()
    }

    /// Pairs where `a_{α+β} = −a_α a_β N_{σα σβ} / N_{αβ}` fails.
    pub fn sim2_violations(&self) -> Vec<(usize, usize)> {
        let rs = self.algebra.rs();
        let mut out = Vec::new();
        for x in 0..rs.len() {
            for y in 0..rs.len() {
                if let Some(s) = rs.sum(x, y) {
                    if sim2_value(&self.algebra, &self.sigma, &self.a, x, y) != Some(self.a[s]) {
                        out.push((x, y));
                    }
                }
            }
        }
        out
    }

    /// Real basis pairs whose bracket has non-real coordinates.
    pub fn real_closure_violations(&self) -> Vec<(usize, usize)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                if self.real_brackets.basis_bracket(i, j).iter().any(|(_, c)| !c.is_real()) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Real basis vectors that are not σ-fixed.
    pub fn fixed_point_violations(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.sigma_vec(&self.real_basis[k]) != self.real_basis[k]).collect()
    }

    /// Killing form on the real basis.
    pub fn real_killing(&self) -> Matrix {
        let p = &self.from_real;
        p.transpose().mul(&self.algebra.killing).mul(p)
    }
}

fn independent(dim: usize, candidates: Vec<Vector>) -> Vec<Vector> {
    let mut chosen: Vec<Vector> = Vec::new();
    for c in candidates {
        let mut trial = chosen.clone();
        trial.push(c.clone());
        if Subspace::span(dim, &trial).dim() == trial.len() {
            chosen = trial;
        }
    }
    chosen
}

/// `−a_α a_β N_{σα σβ} / N_{αβ}` if it is `±1`.
fn sim2_value(w: &WeylAlgebra, sigma: &SigmaAction, a: &[i64], x: usize, y: usize) -> Option<i64> {
    let ratio = w.n(sigma.apply(x), sigma.apply(y)).checked_div(&w.n(x, y)).ok()?;
    let r = ratio.to_rational()?;
    let v = -a[x] * a[y] * num_traits::ToPrimitive::to_i64(&r.to_integer())?;
    (r.is_integer() && v.abs() == 1).then_some(v)
}

fn extend_a(w: &WeylAlgebra, sigma: &SigmaAction, painted: &[usize]) -> Result<Vec<i64>, LieError> {
    let rs = w.rs();
    let npos = rs.num_positive();
    let mut a = vec![0i64; rs.len()];
    for i in 0..rs.rank {
        a[i] = if painted.contains(&i) { -1 } else { 1 };
        a[rs.neg(i)] = a[i];
    }
    for xi in rs.rank..npos {
        let (alpha, beta) = (0..rs.rank)
            .find_map(|i| {
                let mut rest = rs.root(xi).to_vec();
                rest[i] -= 1;
                rs.index_of(&rest).filter(|&b| rs.is_positive(b)).map(|b| (i, b))
            })
            .expect("non-simple positive root has a simple summand");
        let v = sim2_value(w, sigma, &a, alpha, beta).ok_or_else(|| LieError::InconsistentExtension {
            root: xi,
            detail: "N ratio is not ±1".into(),
        })?;
        a[xi] = v;
        a[rs.neg(xi)] = v;
    }
    for x in 0..rs.len() {
        if a[sigma.apply(x)] != a[x] {
            return Err(LieError::InconsistentExtension { root: x, detail: "a_sigma(alpha) differs".into() });
        }
        for y in 0..rs.len() {
            if let Some(s) = rs.sum(x, y) {
                if sim2_value(w, sigma, &a, x, y) != Some(a[s]) {
                    return Err(LieError::InconsistentExtension {
                        root: s,
                        detail: format!("decomposition as roots {x} + {y} disagrees"),
                    });
                }
            }
        }
    }
    Ok(a)
}
