//! Conditions on `(𝔨, ε₀, μ, ν)` for `(𝔨, 𝒟⁰, ε)` to be admissible, checked alongside the
//! admissibility of the assembled triple.

use super::epsilon::{build_epsilon_unchecked, sigma_h};
use super::{check_admissible, AdmissibleError, AdmissibleTriple, ConnectionSpec, EpsilonParams};
use crate::certificate::{Certificate, Witness};
use crate::gcslin::Kind;
use crate::liealg::{RealForm, Subalgebra};
use crate::linalg::{Subspace, Vector};
use crate::scalar::Scalar;

pub const ASSUMPTION: &str = "assumption-not";
pub const SIGMA_PARABOLIC: &str = "i.sigma_parabolic";
pub const CARTAN_SUM: &str = "i.cartan_sum";
pub const G_DELTA_III: &str = "iii.g_delta";

/// First pair `(α, β)`, `α, β ∈ R₀ ∪ {0}`, `α + β ≠ 0`, with `(α + β)|_{𝔥_𝔨} = 0`; `None` stands for `0`.
fn assumption_witness(f: &RealForm, k: &Subalgebra) -> (usize, Option<(Option<usize>, Option<usize>)>) {
    let w = &f.algebra;
    let rs = w.rs();
    let rank = w.rank;
    let pad = |h: &Vector| {
        let mut v = crate::linalg::zero_vec(w.dim);
        v[..rank].clone_from_slice(h);
        v
    };
    let hs: Vec<Vector> = k.h_k.iter().map(pad).collect();
    let value = |x: Option<usize>, h: &Vector| x.map_or_else(Scalar::zero, |a| w.root_value(a, h));
    let cands: Vec<Option<usize>> = std::iter::once(None).chain(k.r0.members.iter().map(|&a| Some(a))).collect();
    let mut checked = 0;
    for (i, &x) in cands.iter().enumerate() {
        for &y in &cands[i..] {
            let zero_sum = match (x, y) {
                (None, None) => true,
                (Some(a), Some(b)) => rs.neg(a) == b,
                _ => false,
            };
            if zero_sum {
                continue;
            }
            checked += 1;
            if hs.iter().all(|h| (value(x, h) + value(y, h)).is_zero()) {
                return (checked, Some((x, y)));
            }
        }
    }
    (checked, None)
}

/// Hypothesis, conditions i)–iii), then the assembled triple with `𝒟⁰`.
pub fn check_mainapplic(f: &RealForm, k: &Subalgebra, p: &EpsilonParams) -> Result<Certificate, AdmissibleError> {
    let w = &f.algebra;
    let rs = w.rs();
    let mut cert = Certificate::new("epsilon family for D0");

    let (checked, bad) = assumption_witness(f, k);
    match bad {
        None => cert.record(ASSUMPTION, checked, None),
        Some((x, y)) => {
            let idx: Vec<usize> = [x, y].iter().flatten().copied().collect();
            cert.inconclusive(ASSUMPTION, Some(Witness::at(&idx)), "a nonzero sum of roots from R0 ∪ {0} vanishes on h_k");
        }
    }

    let closure = rs.closure_violations(&k.r0.members);
    let image = f.sigma.image(&k.r0.members);
    let missing = (0..rs.len()).find(|a| !k.r0.contains(*a) && !image.contains(a));
    let w1 = match (closure.first(), missing) {
        (Some(&(a, b, c)), _) => Some(Witness::at(&[a, b, c]).with_note("R0 not closed")),
        (_, Some(a)) => Some(Witness::at(&[a]).with_note("root outside R0 ∪ σ(R0)")),
        _ => None,
    };
    cert.record(SIGMA_PARABOLIC, rs.len(), w1);

    let rank = w.rank;
    let mut hs: Vec<Vector> = k.h_k.clone();
    hs.extend(k.h_k.iter().map(|h| sigma_h(f, h)));
    let found = Subspace::span(rank, &hs).dim();
    let w2 = (found != rank).then(|| Witness::default().with_note(format!("dimension {found} of {rank}")));
    cert.record(CARTAN_SUM, 1, w2);

    p.record_constraints(f, k, &mut cert);

    let epsilon = build_epsilon_unchecked(f, k, p)?;
    let triple = AdmissibleTriple { k: k.clone(), connection: ConnectionSpec::D0, epsilon, kind: Kind::Symmetric };
    let adm = check_admissible(f, &triple)?;
    let g = adm.clause(super::G_DELTA).expect("admissibility certificate has a g_Delta clause");
    cert.push(G_DELTA_III, g.status, g.checked, g.witness.clone(), g.detail.clone());
    cert.extend(adm);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::admissible::epsilon::{MU_REAL, SUPLIMENTARA};
    use crate::certificate::Status;
    use crate::liealg::subalgebra::{full_cartan, regular_subalgebra};
    use crate::liealg::{VoganDiagram, WeylAlgebra};
    use crate::linalg::Matrix;
    use crate::rootsys::RootSubset;

    fn form(t: &str) -> RealForm {
        let w = WeylAlgebra::from_type_str(t).unwrap();
        RealForm::build(&w, &VoganDiagram::inner(t, &[]).unwrap()).unwrap()
    }

    fn params(m: usize, mu: BTreeMap<usize, Scalar>, nu: BTreeMap<usize, Scalar>) -> EpsilonParams {
        EpsilonParams { epsilon0: Matrix::identity(m).scale(&Scalar::i()), mu, nu }
    }

    fn fails_on(c: &Certificate, id: &str) -> bool {
        c.status() != Status::Pass && c.failing().contains(&id)
    }

    #[test]
    fn borel_instances_pass() {
        for t in ["A1", "A2"] {
            let f = form(t);
            let rs = f.algebra.rs();
            let rank = f.algebra.rank;
            let k = regular_subalgebra(&f, &full_cartan(rank), &RootSubset::positive(rs)).unwrap();
            let mu = (0..rs.len()).filter(|&a| rs.is_positive(a)).map(|a| (a, Scalar::from_int(a as i64 + 1))).collect();
            let c = check_mainapplic(&f, &k, &params(rank, mu, BTreeMap::new())).unwrap();
            assert!(c.passed(), "{}", c.render_text());
        }
    }

    #[test]
    fn single_mutations_fail_with_their_clause() {
        let f = form("A2");
        let rs = f.algebra.rs();
        let rp = RootSubset::positive(rs);
        let k = regular_subalgebra(&f, &full_cartan(2), &rp).unwrap();

        let mu = BTreeMap::from([(0, Scalar::i())]);
        assert!(fails_on(&check_mainapplic(&f, &k, &params(2, mu, BTreeMap::new())).unwrap(), MU_REAL));

        let zero = EpsilonParams::zero(2);
        assert!(fails_on(&check_mainapplic(&f, &k, &zero).unwrap(), G_DELTA_III));

        let small = regular_subalgebra(&f, &[vec![Scalar::one(), Scalar::zero()]], &rp).unwrap();
        assert!(fails_on(&check_mainapplic(&f, &small, &params(1, BTreeMap::new(), BTreeMap::new())).unwrap(), CARTAN_SUM));

        // R0 = {α1} misses α2 and −α2 under σ = −1
        let r0 = RootSubset::new([0]);
        let k1 = regular_subalgebra(&f, &full_cartan(2), &r0).unwrap();
        assert!(fails_on(&check_mainapplic(&f, &k1, &params(2, BTreeMap::new(), BTreeMap::new())).unwrap(), SIGMA_PARABOLIC));

        // ν_α = 1 on every positive root breaks a_α ν_α + a_β ν_β + a_γ ν_γ = 0
        let all = RootSubset::all(rs);
        let kall = regular_subalgebra(&f, &full_cartan(2), &all).unwrap();
        let nu = (0..rs.len()).map(|a| (a, Scalar::from_int(if rs.is_positive(a) { 1 } else { -1 }))).collect();
        assert!(fails_on(&check_mainapplic(&f, &kall, &params(2, BTreeMap::new(), nu)).unwrap(), SUPLIMENTARA));
    }

    #[test]
    fn vanishing_sum_is_inconclusive() {
        // a root of R0 vanishing on h_k pairs with 0
        let f = form("A2");
        let rs = f.algebra.rs();
        let h = vec![Scalar::one(), Scalar::from_int(-1)];
        let kernel_root = (0..rs.len()).find(|&a| f.algebra.root_value(a, &{
            let mut v = crate::linalg::zero_vec(f.algebra.dim);
            v[..2].clone_from_slice(&h);
            v
        }).is_zero());
        let Some(g) = kernel_root else { panic!("no root vanishes on h") };
        let k = regular_subalgebra(&f, &[h], &RootSubset::new([g])).unwrap();
        let c = check_mainapplic(&f, &k, &params(1, BTreeMap::new(), BTreeMap::new())).unwrap();
        assert_eq!(c.status(), Status::Inconclusive);
        assert_eq!(c.clause(ASSUMPTION).unwrap().status, Status::Inconclusive);
    }
}
