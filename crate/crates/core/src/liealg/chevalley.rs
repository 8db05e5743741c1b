//! Integer Chevalley structure constants by the extraspecial-pair algorithm.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::rootsys::RootSystem;

/// `N_{αβ}` for every ordered pair of roots with `α + β ∈ R`.
pub type ChevalleyTable = HashMap<(usize, usize), i64>;

/// Largest `p` with `β − pα ∈ R`.
pub fn string_down(rs: &RootSystem, a: usize, b: usize) -> i64 {
    let mut p = 0;
    let mut cur: Vec<i64> = rs.root(b).to_vec();
    loop {
        for (c, x) in cur.iter_mut().zip(rs.root(a)) {
            *c -= x;
        }
        if rs.index_of(&cur).is_some() {
            p += 1;
        } else {
            return p;
        }
    }
}

struct Builder<'a> {
    rs: &'a RootSystem,
    /// positive pairs `(a, b)` with `a < b`
    special: HashMap<(usize, usize), BigRational>,
}

impl Builder<'_> {
    fn norm(&self, k: usize) -> BigRational {
        self.rs.pair_roots(k, k)
    }

    fn n(&self, x: usize, y: usize) -> BigRational {
        let rs = self.rs;
        let Some(s) = rs.sum(x, y) else {
            return BigRational::zero();
        };
        let (px, py) = (rs.is_positive(x), rs.is_positive(y));
        if px && py {
            return if x < y { self.special[&(x, y)].clone() } else { -self.special[&(y, x)].clone() };
        }
        if !px && !py {
            return -self.n(rs.neg(x), rs.neg(y));
        }
        // x + y + z = 0: N_xy / (z,z) = N_yz / (x,x) = N_zx / (y,y)
        let z = rs.neg(s);
        if rs.is_positive(y) == rs.is_positive(z) {
            self.norm(z) / self.norm(x) * self.n(y, z)
        } else {
            self.norm(z) / self.norm(y) * self.n(z, x)
        }
    }
}

/// Chevalley constants with every extraspecial pair given the sign `+`.
pub fn chevalley_table(rs: &RootSystem) -> ChevalleyTable {
    let npos = rs.num_positive();
    let mut b = Builder { rs, special: HashMap::new() };
    for xi in 0..npos {
        let mut pairs: Vec<(usize, usize)> = (0..npos)
            .flat_map(|a| (a + 1..npos).map(move |c| (a, c)))
            .filter(|&(a, c)| rs.sum(a, c) == Some(xi))
            .collect();
        if pairs.is_empty() {
            continue;
        }
        pairs.sort();
        let (alpha, beta) = pairs[0];
        let extra = BigRational::from_integer((string_down(rs, alpha, beta) + 1).into());
        b.special.insert((alpha, beta), extra.clone());
        for &(gamma, delta) in &pairs[1..] {
            // four-term relation on (α, β, −γ, −δ)
            let (ng, nd) = (rs.neg(gamma), rs.neg(delta));
            let mut rhs = BigRational::zero();
            if let Some(s) = rs.sum(beta, ng) {
                rhs += b.n(beta, ng) * b.n(alpha, nd) / b.norm(s);
            }
            if let Some(s) = rs.sum(alpha, ng) {
                rhs += b.n(ng, alpha) * b.n(beta, nd) / b.norm(s);
            }
            let value = b.norm(xi) / &extra * rhs;
            b.special.insert((gamma, delta), value);
        }
    }
    let mut table = ChevalleyTable::new();
    for x in 0..rs.len() {
        for y in 0..rs.len() {
            if rs.sum(x, y).is_some() {
                let v = b.n(x, y);
                assert!(v.is_integer(), "non-integral Chevalley constant");
                table.insert((x, y), v.to_integer().to_i64().unwrap());
            }
        }
    }
    table
}
