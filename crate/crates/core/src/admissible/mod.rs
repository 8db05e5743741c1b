//! Admissible triples `(𝔨, 𝒟, ε)` over a real form: verification, the ε family attached to
//! `𝒟⁰`, the `g_Δ` basis and the inner-type recipe.

pub mod epsilon;
pub mod gdelta;
pub mod inner;
pub mod mainapplic;
pub mod outer;
pub mod io;
pub mod search;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{Certificate, Witness};
use crate::gcslin::{GcsError, HoloData, Kind};
use crate::leftinv::{d0_connection, d0_weyl, dc_connection, mainthm_check, Connection, LeftInvError};
use crate::liealg::{LieError, RealForm, Subalgebra};
use crate::linalg::{vec_is_zero, LinalgError, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

pub use epsilon::{build_epsilon, build_epsilon_unchecked, epsilon_form, nu_from_heights, EpsilonParams};
pub use gdelta::{gdelta_lemma, GDeltaBasis, GDeltaReport};
pub use inner::inner_admissible;
pub use mainapplic::check_mainapplic;
pub use outer::{outer_epsilon0, OuterEpsilon0};
pub use io::TripleSpec;
pub use search::{search, MuTemplate, SearchHit, SearchOptions, SearchReport};

pub const K_PLUS_KBAR: &str = "k + kbar = g^C";
pub const K_SUBALGEBRA: &str = crate::leftinv::mainthm::K_SUBALGEBRA;
pub const D_PRESERVES: &str = crate::leftinv::mainthm::D_PRESERVES;
pub const CURVATURE: &str = crate::leftinv::mainthm::CURVATURE;
pub const EPS_TAU_SKEW: &str = "epsilon tau-skew";
pub const EPSILON_EQUATION: &str = crate::leftinv::mainthm::EPSILON_EQUATION;
pub const G_DELTA: &str = "g_Delta nondegenerate";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdmissibleError {
    #[error("parameter constraint {0} violated: {1}")]
    ParamConstraintViolated(&'static str, String),
    #[error("R0 symmetric part is not closed and symmetric")]
    NotSymmetricClosed,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("S and its conjugate intersect in dimension {0}")]
    NotTransverse(usize),
    #[error("real form is not of inner type")]
    NotInner,
    #[error("R0 is not a positive system: {0}")]
    NotPositiveSystem(String),
    #[error("h_k + conj(h_k) has dimension {found}, expected {expected}")]
    CartanSumDeficient { found: usize, expected: usize },
    #[error("Im(epsilon) is degenerate on the real points of h_k")]
    DegenerateRestriction,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    LeftInv(#[from] LeftInvError),
    #[error(transparent)]
    Gcs(#[from] GcsError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Which connection a triple carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConnectionSpec {
    D0,
    Dc,
    /// Explicit table in the real basis of the form.
    #[serde(rename = "table")]
    Table(Connection),
}

impl ConnectionSpec {
    /// Complex-bilinear extension on the Weyl basis.
    pub fn weyl(&self, f: &RealForm) -> Result<Connection, AdmissibleError> {
        let w = &f.algebra;
        Ok(match self {
            ConnectionSpec::D0 => d0_weyl(f),
            ConnectionSpec::Dc => Connection::from_fn(w.dim, |i, j| w.brackets.basis_bracket_vec(i, j)),
            ConnectionSpec::Table(c) => {
                check_dim(c, w.dim)?;
                Connection::from_fn(w.dim, |i, j| {
                    let x = f.to_real_coords(&w.unit(i));
                    let y = f.to_real_coords(&w.unit(j));
                    f.from_real_coords(&c.apply(&x, &y))
                })
            }
        })
    }

    /// Table in the real basis.
    pub fn real(&self, f: &RealForm) -> Result<Connection, AdmissibleError> {
        Ok(match self {
            ConnectionSpec::D0 => d0_connection(f)?,
            ConnectionSpec::Dc => dc_connection(&f.real_brackets),
            ConnectionSpec::Table(c) => {
                check_dim(c, f.dim())?;
                c.clone()
            }
        })
    }
}

fn check_dim(c: &Connection, dim: usize) -> Result<(), AdmissibleError> {
    let ok = c.dim == dim && c.table.len() == dim && c.table.iter().all(|r| r.len() == dim && r.iter().all(|v| v.len() == dim));
    if ok {
        Ok(())
    } else {
        Err(AdmissibleError::Shape(format!("connection table is not {dim}x{dim}x{dim}")))
    }
}

/// `ε` is stored as `epsilon[a][b] = ε(k_a, τ k_b)` on the basis of `k`.
#[derive(Debug, Clone, Serialize)]
pub struct AdmissibleTriple {
    pub k: Subalgebra,
    pub connection: ConnectionSpec,
    pub epsilon: Matrix,
    pub kind: Kind,
}

impl AdmissibleTriple {
    /// `τ k_b` in Weyl coordinates.
    pub fn tau_basis(&self, f: &RealForm) -> Vec<Vector> {
        match self.kind {
            Kind::Symmetric => self.k.conj_basis(f),
            Kind::Skew => self.k.basis.clone(),
        }
    }

    /// The same data as holomorphic data over the real basis of `𝔤`.
    pub fn to_holo(&self, f: &RealForm) -> HoloData {
        let e = self.k.basis.iter().map(|v| f.to_real_coords(v)).collect();
        HoloData::new(f.dim(), self.kind, e, self.epsilon.clone())
    }
}

/// Real basis (Weyl coordinates) of the `σ`-fixed points of a `σ`-stable subspace.
pub(crate) fn sigma_real_basis(f: &RealForm, space: &Subspace) -> Vec<Vector> {
    let real: Vec<Vector> = space.basis().iter().map(|v| f.to_real_coords(v)).collect();
    Subspace::span(f.dim(), &real).real_basis().iter().map(|c| f.from_real_coords(c)).collect()
}

/// Coordinates in a basis (columns), `None` if outside the span.
pub(crate) struct Coords {
    m: Option<Matrix>,
    dim: usize,
}

impl Coords {
    pub(crate) fn new(dim: usize, basis: &[Vector]) -> Self {
        Coords { m: (!basis.is_empty()).then(|| Matrix::from_columns(dim, basis)), dim }
    }

    pub(crate) fn of(&self, v: &[Scalar]) -> Option<Vector> {
        debug_assert_eq!(v.len(), self.dim);
        match &self.m {
            None => vec_is_zero(v).then(Vec::new),
            Some(m) => m.solve(v).ok(),
        }
    }
}

/// One clause per admissibility condition, computed on the Weyl basis.
pub fn check_admissible(f: &RealForm, t: &AdmissibleTriple) -> Result<Certificate, AdmissibleError> {
    let w = &f.algebra;
    let kdim = t.k.dim();
    if t.epsilon.rows() != kdim || t.epsilon.cols() != kdim {
        return Err(AdmissibleError::Shape(format!("epsilon must be {kdim}x{kdim}")));
    }
    let d = t.connection.weyl(f)?;
    let kb = &t.k.basis;
    let tb = t.tau_basis(f);
    let tau_space = Subspace::span(w.dim, &tb);
    let kc = Coords::new(w.dim, kb);
    let tc = Coords::new(w.dim, &tb);
    let eps = |x: &[Scalar], z: &[Scalar]| -> Option<Scalar> { Some(t.epsilon.bilinear(&kc.of(x)?, &tc.of(z)?)) };
    let mut cert = Certificate::new("admissible triple");

    let sum = t.k.space.sum(&t.k.conj_space).dim();
    let w0 = (sum != w.dim).then(|| Witness::default().with_note(format!("dimension {sum} of {}", w.dim)));
    cert.record(K_PLUS_KBAR, 1, w0);

    let mut checked = 0;
    let mut bad = None;
    'sub: for a in 0..kdim {
        for b in a + 1..kdim {
            checked += 1;
            if !t.k.space.contains(&w.bracket(&kb[a], &kb[b])) {
                bad = Some(Witness::at(&[a, b]).with_note("bracket leaves k"));
                break 'sub;
            }
        }
    }
    let closed = bad.is_none();
    cert.record(K_SUBALGEBRA, checked, bad);

    let mut checked = 0;
    let mut bad = None;
    'pres: for a in 0..kdim {
        for (b, z) in tb.iter().enumerate() {
            checked += 1;
            if !tau_space.contains(&d.apply(&kb[a], z)) {
                bad = Some(Witness::at(&[a, b]).with_note("D_{k_a} tau(k_b) leaves tau(k)"));
                break 'pres;
            }
        }
    }
    let preserves = bad.is_none();
    cert.record(D_PRESERVES, checked, bad);

    let mut checked = 0;
    let mut bad = None;
    'curv: for a in 0..kdim {
        for b in a + 1..kdim {
            for (c, z) in tb.iter().enumerate() {
                checked += 1;
                let r = d.curvature(&w.brackets, &kb[a], &kb[b], z);
                if let Some(v) = r.iter().find(|x| !x.is_zero()) {
                    bad = Some(Witness::at(&[a, b, c]).with_value(v.clone()));
                    break 'curv;
                }
            }
        }
    }
    cert.record(CURVATURE, checked, bad);

    let mut checked = 0;
    let mut bad = None;
    'skew: for a in 0..kdim {
        for b in a..kdim {
            checked += 1;
            let (x, y) = (&t.epsilon[(a, b)], &t.epsilon[(b, a)]);
            let v = x + &t.kind.tau(y);
            if !v.is_zero() {
                bad = Some(Witness::at(&[a, b]).with_value(v));
                break 'skew;
            }
        }
    }
    cert.record(EPS_TAU_SKEW, checked, bad);

    if closed && preserves {
        let mut checked = 0;
        let mut bad = None;
        'eq: for a in 0..kdim {
            for b in a + 1..kdim {
                for (c, z) in tb.iter().enumerate() {
                    checked += 1;
                    let (x, y) = (&kb[a], &kb[b]);
                    let v = eps(x, &d.apply(y, z)).expect("D preserves tau(k)")
                        - eps(y, &d.apply(x, z)).expect("D preserves tau(k)")
                        - eps(&w.bracket(x, y), z).expect("k is closed");
                    if !v.is_zero() {
                        bad = Some(Witness::at(&[a, b, c]).with_value(v));
                        break 'eq;
                    }
                }
            }
        }
        cert.record(EPSILON_EQUATION, checked, bad);
    } else {
        cert.skip(EPSILON_EQUATION, "needs [k,k] in k and D_k tau(k) in tau(k)");
    }

    let delta = sigma_real_basis(f, &t.k.intersection);
    let g = Matrix::from_rows(
        delta
            .iter()
            .map(|x| delta.iter().map(|y| eps(x, y).expect("Delta lies in k and tau(k)").im()).collect())
            .collect(),
    );
    let degenerate = match g {
        Ok(g) => g.det().is_zero(),
        Err(_) => false,
    };
    let w7 = degenerate.then(|| Witness::default().with_note(format!("dim Delta = {}", delta.len())));
    cert.record(G_DELTA, delta.len(), w7);
    Ok(cert)
}

/// The same verdict through the real-coordinate machinery: validated holomorphic data, then the
/// three-condition integrability check.
pub fn admissible_via_mainthm(f: &RealForm, t: &AdmissibleTriple) -> Result<Certificate, AdmissibleError> {
    let h = t.to_holo(f);
    let d = t.connection.real(f)?;
    let mut cert = Certificate::new("admissible triple via holomorphic data");
    match h.validate() {
        Ok(()) => cert.record("holomorphic data valid", 1, None),
        Err(e) => cert.record("holomorphic data valid", 1, Some(Witness::default().with_note(e.to_string()))),
    }
    cert.extend(mainthm_check(&f.real_brackets, &h, &d));
    Ok(cert)
}
