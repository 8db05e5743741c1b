//! Enumerates `σ`-parabolic `R₀` with `𝔥_𝔨 = 𝔥`, assembles `ε` from fixed templates and keeps
//! the triples that verify.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::outer::split_epsilon0;
use super::{check_mainapplic, nu_from_heights, AdmissibleError, EpsilonParams};
use crate::certificate::Status;
use crate::liealg::subalgebra::{full_cartan, regular_subalgebra};
use crate::liealg::RealForm;
use crate::rootsys::{enumerate_sigma_parabolic, EnumerateOptions, RootSubset};
use crate::scalar::Scalar;

/// How `μ` is filled in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MuTemplate {
    /// `μ = 0`.
    Zero,
    /// `μ_α` = height of `α` in the global simple system.
    Height,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub templates: Vec<MuTemplate>,
    pub sigma_positive_only: bool,
    pub budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { templates: vec![MuTemplate::Zero], sigma_positive_only: false, budget: 5_000_000 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchHit {
    pub r0: RootSubset,
    pub template: MuTemplate,
    pub params: EpsilonParams,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub candidates: usize,
    pub verified: Vec<SearchHit>,
    /// `(R₀, reason)` for candidates without a verified triple.
    pub rejected: Vec<(RootSubset, String)>,
}

pub fn params_for(f: &RealForm, r0: &RootSubset, template: MuTemplate) -> Result<EpsilonParams, AdmissibleError> {
    let rs = f.algebra.rs();
    let k = regular_subalgebra(f, &full_cartan(f.algebra.rank), r0)?;
    let epsilon0 = split_epsilon0(f, &k)?;
    let nu = nu_from_heights(f, &r0.symmetric_part(rs))?;
    let mu: BTreeMap<usize, Scalar> = match template {
        MuTemplate::Zero => BTreeMap::new(),
        MuTemplate::Height => r0.members.iter().map(|&a| (a, Scalar::from_int(rs.height(a)))).collect(),
    };
    Ok(EpsilonParams { epsilon0, mu, nu })
}

pub fn search(f: &RealForm, opts: &SearchOptions) -> Result<SearchReport, AdmissibleError> {
    let rs = f.algebra.rs();
    let eopts = EnumerateOptions { sigma_positive_only: opts.sigma_positive_only, max_results: None, budget: opts.budget };
    let sets = enumerate_sigma_parabolic(rs, &f.sigma, eopts).map_err(|e| AdmissibleError::Lie(e.into()))?;
    let mut report = SearchReport { candidates: sets.len(), verified: Vec::new(), rejected: Vec::new() };
    for r0 in sets {
        let mut reasons = Vec::new();
        for &template in &opts.templates {
            let params = match params_for(f, &r0, template) {
                Ok(p) => p,
                Err(e) => {
                    reasons.push(format!("{template:?}: {e}"));
                    continue;
                }
            };
            let k = regular_subalgebra(f, &full_cartan(f.algebra.rank), &r0)?;
            let cert = check_mainapplic(f, &k, &params)?;
            if cert.status() == Status::Pass {
                report.verified.push(SearchHit { r0: r0.clone(), template, params });
            } else {
                reasons.push(format!("{template:?}: {} ({})", cert.status(), cert.failing().join(", ")));
            }
        }
        if !reasons.is_empty() {
            report.rejected.push((r0, reasons.join("; ")));
        }
    }
    Ok(report)
}
