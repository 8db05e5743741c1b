//! Root systems in simple-root coordinates, closed subsets and the σ-action.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("unknown root system type {0}")]
    UnknownType(String),
    #[error("root {0:?} is not in the subsystem spanned by the chosen simple roots")]
    NotInSubsystem(Vec<i64>),
    #[error("search budget of {budget} nodes exceeded after {found} results")]
    SearchBudgetExceeded { budget: u64, found: usize },
    #[error("invalid diagram automorphism: {0}")]
    BadTheta(String),
    #[error("exhaustive enumeration needs at most 128 roots, got {0}")]
    TooManyRoots(usize),
}

/// One simple component, e.g. `("A", 2)`. Serializes as `["A", 2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleType(pub char, pub usize);

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

impl SimpleType {
    pub fn validate(self) -> Result<Self, RootError> {
        let SimpleType(family, rank) = self;
        let ok = match family {
            'A' => rank >= 1,
            'B' => rank >= 2,
            'C' => rank >= 3,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if ok {
            Ok(self)
        } else {
            Err(RootError::UnknownType(self.to_string()))
        }
    }

    /// Symmetrized Cartan matrix, with the long roots of simply laced types of squared length 2.
    fn gram(self) -> Vec<Vec<BigRational>> {
        let SimpleType(family, n) = self;
        let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        let mut g = vec![vec![BigRational::zero(); n]; n];
        let bond = |g: &mut Vec<Vec<BigRational>>, i: usize, j: usize, v: BigRational| {
            g[i][j] = v.clone();
            g[j][i] = v;
        };
        for (i, row) in g.iter_mut().enumerate().take(n) {
            row[i] = q(2, 1);
        }
        match family {
            'A' => (0..n.saturating_sub(1)).for_each(|i| bond(&mut g, i, i + 1, q(-1, 1))),
            'B' => {
                (0..n - 1).for_each(|i| bond(&mut g, i, i + 1, q(-1, 1)));
                g[n - 1][n - 1] = q(1, 1);
            }
            'C' => {
                (0..n - 2).for_each(|i| bond(&mut g, i, i + 1, q(-1, 1)));
                bond(&mut g, n - 2, n - 1, q(-2, 1));
                g[n - 1][n - 1] = q(4, 1);
            }
            'D' => {
                (0..n - 2).for_each(|i| bond(&mut g, i, i + 1, q(-1, 1)));
                bond(&mut g, n - 3, n - 1, q(-1, 1));
            }
            'E' => {
                // Bourbaki: 1-3-4-5-6(-7-8), 2 attached to 4
                bond(&mut g, 0, 2, q(-1, 1));
                bond(&mut g, 1, 3, q(-1, 1));
                (2..n - 1).for_each(|i| bond(&mut g, i, i + 1, q(-1, 1)));
            }
            'F' => {
                bond(&mut g, 0, 1, q(-1, 1));
                bond(&mut g, 1, 2, q(-1, 1));
                bond(&mut g, 2, 3, q(-1, 2));
                g[2][2] = q(1, 1);
                g[3][3] = q(1, 1);
            }
            'G' => {
                g[1][1] = q(6, 1);
                bond(&mut g, 0, 1, q(-3, 1));
            }
            _ => unreachable!("validated family"),
        }
        g
    }

    /// Number of roots from the classification.
    pub fn root_count(self) -> usize {
        let SimpleType(f, n) = self;
        match f {
            'A' => n * (n + 1),
            'B' | 'C' => 2 * n * n,
            'D' => 2 * n * (n - 1),
            'E' => [72, 126, 240][n - 6],
            'F' => 48,
            'G' => 12,
            _ => 0,
        }
    }
}

/// A finite direct sum of simple types, written e.g. `A2` or `A1+A1`; serializes as that string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CartanType(pub Vec<SimpleType>);

impl TryFrom<String> for CartanType {
    type Error = RootError;
    fn try_from(s: String) -> Result<Self, RootError> {
        s.parse()
    }
}

impl From<CartanType> for String {
    fn from(t: CartanType) -> String {
        t.to_string()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for CartanType {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, RootError> {
        let mut parts = Vec::new();
        for piece in s.split(['+', 'x']) {
            let piece = piece.trim();
            let mut chars = piece.chars();
            let family = chars.next().ok_or_else(|| RootError::UnknownType(s.to_string()))?;
            let rank: usize = chars.as_str().parse().map_err(|_| RootError::UnknownType(s.to_string()))?;
            parts.push(SimpleType(family.to_ascii_uppercase(), rank).validate()?);
        }
        Ok(CartanType(parts))
    }
}

impl CartanType {
    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.1).sum()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RootSystem {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub rank: usize,
    /// Positive roots first (by height), then their negatives in the same order.
    pub roots: Vec<Vec<i64>>,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Killing pairing of the simple roots.
    #[serde(serialize_with = "serialize_rational_matrix")]
    pub pairing: Vec<Vec<BigRational>>,
    /// Simple component of each simple root.
    pub component: Vec<usize>,
    #[serde(skip)]
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn build(cartan_type: &CartanType) -> Result<Self, RootError> {
        if cartan_type.0.is_empty() {
            return Err(RootError::UnknownType(String::new()));
        }
        let rank = cartan_type.rank();
        let mut gram = vec![vec![BigRational::zero(); rank]; rank];
        let mut component = Vec::with_capacity(rank);
        let mut offset = 0;
        for (c, t) in cartan_type.0.iter().enumerate() {
            let t = t.validate()?;
            let g = t.gram();
            for i in 0..t.1 {
                component.push(c);
                for j in 0..t.1 {
                    gram[offset + i][offset + j] = g[i][j].clone();
                }
            }
            offset += t.1;
        }
        let cartan_matrix: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = BigRational::from_integer(2.into()) * &gram[i][j] / &gram[j][j];
                        assert!(v.is_integer());
                        v.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();
        let positives = positive_roots(&cartan_matrix);

        // Killing pairing: per component, (λ, μ)_K = (λ, μ) / c with c = Σ_β (β, α)² / (α, α)
        let mut pairing = gram.clone();
        for c in 0..cartan_type.0.len() {
            let first = component.iter().position(|&x| x == c).unwrap();
            let norm = &gram[first][first];
            let mut total = BigRational::zero();
            for beta in &positives {
                let ip: BigRational =
                    (0..rank).map(|j| &gram[j][first] * BigRational::from_integer(beta[j].into())).sum();
                total += &ip * &ip * BigRational::from_integer(2.into());
            }
            let scale = total / norm;
            for i in 0..rank {
                for j in 0..rank {
                    if component[i] == c && component[j] == c {
                        pairing[i][j] = &gram[i][j] / &scale;
                    }
                }
            }
        }

        let mut roots = positives.clone();
        roots.extend(positives.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let index = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        Ok(RootSystem { cartan_type: cartan_type.clone(), rank, roots, cartan_matrix, pairing, component, index })
    }

    pub fn from_type_str(s: &str) -> Result<Self, RootError> {
        Self::build(&s.parse()?)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn root(&self, k: usize) -> &[i64] {
        &self.roots[k]
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.num_positive()
    }

    pub fn neg(&self, k: usize) -> usize {
        let n = self.num_positive();
        if k < n {
            k + n
        } else {
            k - n
        }
    }

    /// Index of `α + β` if it is a root.
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.index_of(&s)
    }

    /// Height with respect to the global simple system.
    pub fn height(&self, k: usize) -> i64 {
        self.roots[k].iter().sum()
    }

    /// Killing pairing of two vectors given in simple-root coordinates.
    pub fn pair(&self, x: &[i64], y: &[i64]) -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if y[j] != 0 {
                    acc += &self.pairing[i][j] * BigRational::from_integer((x[i] * y[j]).into());
                }
            }
        }
        acc
    }

    pub fn pair_roots(&self, a: usize, b: usize) -> BigRational {
        self.pair(&self.roots[a], &self.roots[b])
    }

    /// `2⟨α, β⟩ / ⟨β, β⟩`.
    pub fn cartan_pairing(&self, a: usize, b: usize) -> i64 {
        let v = BigRational::from_integer(2.into()) * self.pair_roots(a, b) / self.pair_roots(b, b);
        v.to_integer().to_i64().unwrap()
    }

    /// Whether the sum of every pair of members that is a root is again a member.
    pub fn closure_violations(&self, members: &BTreeSet<usize>) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for &a in members {
            for &b in members {
                if a < b {
                    if let Some(c) = self.sum(a, b) {
                        if !members.contains(&c) {
                            out.push((a, b, c));
                        }
                    }
                }
            }
        }
        out
    }

    /// Deterministic simple system of the symmetric closed subsystem `sym`:
    /// the indecomposable members of `sym ∩ R⁺`.
    pub fn simple_system(&self, sym: &BTreeSet<usize>) -> Vec<usize> {
        let positive: Vec<usize> = sym.iter().copied().filter(|&k| self.is_positive(k)).collect();
        positive
            .iter()
            .copied()
            .filter(|&g| {
                !positive
                    .iter()
                    .any(|&a| positive.iter().any(|&b| a <= b && self.sum(a, b) == Some(g)))
            })
            .collect()
    }

    /// Height of `coords` relative to the simple system `simple` (root indices).
    pub fn height_in(&self, coords: &[i64], simple: &[usize]) -> Result<i64, RootError> {
        let fail = || RootError::NotInSubsystem(coords.to_vec());
        if simple.is_empty() {
            return Err(fail());
        }
        use crate::linalg::Matrix;
        use crate::scalar::Scalar;
        let cols: Vec<Vec<Scalar>> =
            simple.iter().map(|&s| self.roots[s].iter().map(|&x| Scalar::from_int(x)).collect()).collect();
        let m = Matrix::from_columns(self.rank, &cols);
        let rhs: Vec<Scalar> = coords.iter().map(|&x| Scalar::from_int(x)).collect();
        let x = m.solve(&rhs).map_err(|_| fail())?;
        let mut n = Vec::new();
        for c in x {
            let q = c.to_rational().ok_or_else(fail)?;
            if !q.is_integer() {
                return Err(fail());
            }
            n.push(q.to_integer().to_i64().unwrap());
        }
        if n.iter().any(|&v| v > 0) && n.iter().any(|&v| v < 0) {
            return Err(fail());
        }
        Ok(n.iter().sum())
    }
}

fn serialize_rational_matrix<S: serde::Serializer>(m: &[Vec<BigRational>], s: S) -> Result<S::Ok, S::Error> {
    let strings: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|q| q.to_string()).collect()).collect();
    strings.serialize(s)
}

/// Positive roots from the Cartan matrix by root strings, sorted by height, simple roots first.
fn positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = a.len();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut v = vec![0; rank];
            v[i] = 1;
            v
        })
        .collect();
    all.extend(layer.iter().cloned());
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..rank {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..rank).map(|j| beta[j] * a[j][i]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !all.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    let mut roots: Vec<Vec<i64>> = all.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
    roots
}

/// σ on roots, induced by a diagram involution θ as σ = −θ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaAction {
    pub theta: Vec<usize>,
    pub perm: Vec<usize>,
}

impl SigmaAction {
    pub fn from_theta(rs: &RootSystem, theta: &[usize]) -> Result<Self, RootError> {
        let n = rs.rank;
        if theta.len() != n || theta.iter().any(|&t| t >= n) {
            return Err(RootError::BadTheta("wrong length or out-of-range node".into()));
        }
        for i in 0..n {
            if theta[theta[i]] != i {
                return Err(RootError::BadTheta(format!("not an involution at node {i}")));
            }
            for j in 0..n {
                if rs.cartan_matrix[theta[i]][theta[j]] != rs.cartan_matrix[i][j] {
                    return Err(RootError::BadTheta(format!("does not preserve the bond {i}-{j}")));
                }
            }
        }
        let mut perm = Vec::with_capacity(rs.len());
        for r in &rs.roots {
            let mut image = vec![0i64; n];
            for i in 0..n {
                image[theta[i]] -= r[i];
            }
            perm.push(rs.index_of(&image).ok_or_else(|| RootError::BadTheta("image is not a root".into()))?);
        }
        Ok(SigmaAction { theta: theta.to_vec(), perm })
    }

    pub fn minus_identity(rs: &RootSystem) -> Self {
        Self::from_theta(rs, &(0..rs.rank).collect::<Vec<_>>()).expect("identity is an automorphism")
    }

    pub fn apply(&self, k: usize) -> usize {
        self.perm[k]
    }

    pub fn is_inner(&self) -> bool {
        self.theta.iter().enumerate().all(|(i, &t)| i == t)
    }

    pub fn image(&self, members: &BTreeSet<usize>) -> BTreeSet<usize> {
        members.iter().map(|&k| self.perm[k]).collect()
    }
}

/// A subset R₀ of roots, as sorted root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootSubset {
    pub members: BTreeSet<usize>,
}

impl RootSubset {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        RootSubset { members: members.into_iter().collect() }
    }

    pub fn all(rs: &RootSystem) -> Self {
        Self::new(0..rs.len())
    }

    pub fn positive(rs: &RootSystem) -> Self {
        Self::new(0..rs.num_positive())
    }

    pub fn contains(&self, k: usize) -> bool {
        self.members.contains(&k)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn mask(&self) -> u128 {
        self.members.iter().fold(0u128, |m, &k| m | (1u128 << k))
    }

    pub fn symmetric_part(&self, rs: &RootSystem) -> BTreeSet<usize> {
        self.members.iter().copied().filter(|&k| self.members.contains(&rs.neg(k))).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetClass {
    pub closed: bool,
    pub closure_violations: Vec<(usize, usize, usize)>,
    pub sigma_parabolic: bool,
    pub sigma_positive: bool,
    pub symmetric_part: BTreeSet<usize>,
}

pub fn classify_subset(rs: &RootSystem, r0: &RootSubset, sigma: &SigmaAction) -> SubsetClass {
    let closure_violations = rs.closure_violations(&r0.members);
    let closed = closure_violations.is_empty();
    let image = sigma.image(&r0.members);
    let covers = r0.members.union(&image).count() == rs.len();
    let sigma_parabolic = closed && covers;
    let sigma_positive = sigma_parabolic && r0.members.is_disjoint(&image);
    SubsetClass { closed, closure_violations, sigma_parabolic, sigma_positive, symmetric_part: r0.symmetric_part(rs) }
}

#[derive(Debug, Clone, Copy)]
pub struct EnumerateOptions {
    pub sigma_positive_only: bool,
    pub max_results: Option<usize>,
    /// Maximum number of search nodes.
    pub budget: u64,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { sigma_positive_only: false, max_results: None, budget: 5_000_000 }
    }
}

/// All closed σ-parabolic subsets, sorted by membership bitmask.
pub fn enumerate_sigma_parabolic(
    rs: &RootSystem,
    sigma: &SigmaAction,
    opts: EnumerateOptions,
) -> Result<Vec<RootSubset>, RootError> {
    if rs.len() > 128 {
        return Err(RootError::TooManyRoots(rs.len()));
    }
    // σ has no fixed roots, so roots split into orbit pairs {α, σα}
    let mut pairs = Vec::new();
    let mut seen = vec![false; rs.len()];
    for k in 0..rs.len() {
        if !seen[k] {
            let s = sigma.apply(k);
            seen[k] = true;
            seen[s] = true;
            pairs.push((k, s));
        }
    }
    let sums: Vec<Vec<Option<usize>>> =
        (0..rs.len()).map(|a| (0..rs.len()).map(|b| rs.sum(a, b)).collect()).collect();
    let mut decided = vec![false; rs.len()];
    let mut chosen = vec![false; rs.len()];
    let mut out = Vec::new();
    let mut nodes = 0u64;
    let mut state = Search { rs, pairs: &pairs, sums: &sums, opts, nodes: &mut nodes, out: &mut out };
    let complete = state.recurse(0, &mut decided, &mut chosen)?;
    let mut result: Vec<RootSubset> = out;
    result.sort_by_key(RootSubset::mask);
    if !complete && opts.max_results.is_none() {
        return Err(RootError::SearchBudgetExceeded { budget: opts.budget, found: result.len() });
    }
    Ok(result)
}

struct Search<'a> {
    rs: &'a RootSystem,
    pairs: &'a [(usize, usize)],
    sums: &'a [Vec<Option<usize>>],
    opts: EnumerateOptions,
    nodes: &'a mut u64,
    out: &'a mut Vec<RootSubset>,
}

impl Search<'_> {
    fn consistent(&self, decided: &[bool], chosen: &[bool], new: &[usize]) -> bool {
        let n = self.rs.len();
        for &a in new {
            for b in 0..n {
                if !chosen[b] {
                    continue;
                }
                if let Some(c) = self.sums[a][b] {
                    if decided[c] && !chosen[c] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Returns `Ok(false)` when stopped early by the budget or result cap.
    fn recurse(&mut self, depth: usize, decided: &mut Vec<bool>, chosen: &mut Vec<bool>) -> Result<bool, RootError> {
        *self.nodes += 1;
        if *self.nodes > self.opts.budget {
            return if self.opts.max_results.is_some() {
                Ok(false)
            } else {
                Err(RootError::SearchBudgetExceeded { budget: self.opts.budget, found: self.out.len() })
            };
        }
        if depth == self.pairs.len() {
            self.out.push(RootSubset::new((0..self.rs.len()).filter(|&k| chosen[k])));
            return Ok(self.opts.max_results.is_none_or(|m| self.out.len() < m));
        }
        let (a, s) = self.pairs[depth];
        let mut options: Vec<(bool, bool)> = vec![(true, false), (false, true)];
        if !self.opts.sigma_positive_only {
            options.push((true, true));
        }
        decided[a] = true;
        decided[s] = true;
        for (ca, cs) in options {
            chosen[a] = ca;
            chosen[s] = cs;
            let new: Vec<usize> = [(a, ca), (s, cs)].iter().filter(|x| x.1).map(|x| x.0).collect();
            // newly added members must be closed against each other and against the chosen set,
            // and newly decided exclusions must not be sums of chosen members
            let mut ok = self.consistent(decided, chosen, &new);
            if ok {
                for &(x, cx) in &[(a, ca), (s, cs)] {
                    if cx {
                        continue;
                    }
                    let blocked = (0..self.rs.len())
                        .filter(|&p| chosen[p])
                        .any(|p| (0..self.rs.len()).any(|q| chosen[q] && self.sums[p][q] == Some(x)));
                    if blocked {
                        ok = false;
                    }
                }
            }
            if ok && !self.recurse(depth + 1, decided, chosen)? {
                chosen[a] = false;
                chosen[s] = false;
                decided[a] = false;
                decided[s] = false;
                return Ok(false);
            }
        }
        chosen[a] = false;
        chosen[s] = false;
        decided[a] = false;
        decided[s] = false;
        Ok(true)
    }
}

/// Brute-force oracle: every subset of roots checked directly (small systems only).
pub fn brute_force_sigma_parabolic(rs: &RootSystem, sigma: &SigmaAction, positive_only: bool) -> Vec<RootSubset> {
    assert!(rs.len() <= 20, "brute force only for tiny systems");
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << rs.len()) {
        let r0 = RootSubset::new((0..rs.len()).filter(|k| mask >> k & 1 == 1));
        let c = classify_subset(rs, &r0, sigma);
        if c.sigma_parabolic && (!positive_only || c.sigma_positive) {
            out.push(r0);
        }
    }
    out.sort_by_key(RootSubset::mask);
    out
}

/// Checks 2⟨α,β⟩/⟨β,β⟩ is an integer for all root pairs and the pairing is positive definite.
pub fn pairing_is_crystallographic(rs: &RootSystem) -> bool {
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            let v = BigRational::from_integer(2.into()) * rs.pair_roots(a, b) / rs.pair_roots(b, b);
            if !v.is_integer() {
                return false;
            }
        }
    }
    // leading principal minors of the pairing
    use crate::linalg::Matrix;
    use crate::scalar::Scalar;
    (1..=rs.rank).all(|k| {
        let rows = (0..k).map(|i| (0..k).map(|j| Scalar::from_rational(rs.pairing[i][j].clone())).collect()).collect();
        let d = Matrix::from_rows(rows).unwrap().det().to_rational().unwrap();
        d.is_positive()
    })
}
