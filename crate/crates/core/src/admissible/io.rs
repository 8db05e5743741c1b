//! JSON form of a triple: Vogan diagram, `𝔥_𝔨`, `R₀`, connection and either `ε` parameters or `ε` itself.

use serde::{Deserialize, Serialize};

use super::{
    build_epsilon_unchecked, check_admissible, check_mainapplic, AdmissibleError, AdmissibleTriple, ConnectionSpec,
    EpsilonParams, SearchHit,
};
use crate::certificate::Certificate;
use crate::gcslin::Kind;
use crate::liealg::subalgebra::{full_cartan, regular_subalgebra};
use crate::liealg::{RealForm, Subalgebra, VoganDiagram, WeylAlgebra};
use crate::linalg::{Matrix, Vector};
use crate::rootsys::{RootSubset, RootSystem};

fn d0() -> ConnectionSpec {
    ConnectionSpec::D0
}

fn symmetric() -> Kind {
    Kind::Symmetric
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleSpec {
    pub vogan: VoganDiagram,
    /// Basis of `𝔥_𝔨` in the coordinates `H₁ … H_r`; all of `𝔥` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_k: Option<Vec<Vector>>,
    #[serde(rename = "R0")]
    pub r0: RootSubset,
    #[serde(default = "d0")]
    pub connection: ConnectionSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<EpsilonParams>,
    /// `ε(k_a, τ k_b)` on the basis of `𝔨`, instead of `params`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Matrix>,
    #[serde(default = "symmetric")]
    pub kind: Kind,
}

impl TripleSpec {
    pub fn from_hit(f: &RealForm, hit: &SearchHit) -> Self {
        TripleSpec {
            vogan: f.vogan.clone(),
            h_k: None,
            r0: hit.r0.clone(),
            connection: ConnectionSpec::D0,
            params: Some(hit.params.clone()),
            epsilon: None,
            kind: Kind::Symmetric,
        }
    }

    pub fn resolve(&self) -> Result<(RealForm, Subalgebra), AdmissibleError> {
        let rs = RootSystem::build(&self.vogan.cartan_type).map_err(|e| AdmissibleError::Lie(e.into()))?;
        let w = WeylAlgebra::build(&rs)?;
        let f = RealForm::build(&w, &self.vogan)?;
        if let Some(&bad) = self.r0.members.iter().find(|&&a| a >= rs.len()) {
            return Err(AdmissibleError::Shape(format!("root index {bad} out of range")));
        }
        let h_k = self.h_k.clone().unwrap_or_else(|| full_cartan(w.rank));
        if h_k.iter().any(|h| h.len() != w.rank) {
            return Err(AdmissibleError::Shape(format!("h_k vectors must have length {}", w.rank)));
        }
        let k = regular_subalgebra(&f, &h_k, &self.r0)?;
        Ok((f, k))
    }

    /// `(𝔨, 𝒟⁰, ε(params))` goes through the parameter conditions; anything else through the
    /// admissibility clauses alone.
    pub fn verify(&self) -> Result<Certificate, AdmissibleError> {
        let (f, k) = self.resolve()?;
        let epsilon = match (&self.params, &self.epsilon) {
            (Some(p), None) => {
                if self.connection == ConnectionSpec::D0 && self.kind == Kind::Symmetric {
                    return check_mainapplic(&f, &k, p);
                }
                build_epsilon_unchecked(&f, &k, p)?
            }
            (None, Some(e)) => e.clone(),
            _ => return Err(AdmissibleError::Shape("give exactly one of params and epsilon".into())),
        };
        let t = AdmissibleTriple { k, connection: self.connection.clone(), epsilon, kind: self.kind };
        check_admissible(&f, &t)
    }
}
