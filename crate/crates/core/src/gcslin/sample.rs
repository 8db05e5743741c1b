//! Seeded random structures with known normal form.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{GCStructure, Kind};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn int_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            m[(r, c)] = Scalar::from_int(rng.gen_range(-bound..=bound));
        }
    }
    m
}

pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let m = int_matrix(rng, n, 2);
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn random_skew<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for r in 0..n {
        for c in r + 1..n {
            let v = Scalar::from_int(rng.gen_range(-3..=3));
            m[(c, r)] = -v.clone();
            m[(r, c)] = v;
        }
    }
    m
}

/// Standard `J₀` with `J₀ e_{2k} = e_{2k+1}`.
pub fn standard_complex(n: usize) -> Matrix {
    assert!(n.is_multiple_of(2));
    let mut j = Matrix::zeros(n, n);
    for k in 0..n / 2 {
        j[(2 * k + 1, 2 * k)] = Scalar::one();
        j[(2 * k, 2 * k + 1)] = -Scalar::one();
    }
    j
}

fn signs<R: Rng>(rng: &mut R, p: usize) -> Matrix {
    let d: Vec<Scalar> = (0..p).map(|_| Scalar::from_int(if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
    Matrix::diagonal(&d)
}

/// Symmetric structure with `dim Δ = p`: `metric ⊕ complex`, moved by a random basis change and B-field.
pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize, p: usize) -> GCStructure {
    assert!(p <= n && (n - p).is_multiple_of(2));
    let base = match (p, n - p) {
        (_, 0) => GCStructure::from_metric(&signs(rng, p)).unwrap(),
        (0, m) => GCStructure::from_complex_structure(&standard_complex(m)).unwrap(),
        (_, m) => GCStructure::from_metric(&signs(rng, p))
            .unwrap()
            .direct_sum(&GCStructure::from_complex_structure(&standard_complex(m)).unwrap())
            .unwrap(),
    };
    let t = random_invertible(rng, n);
    let b = random_skew(rng, n);
    base.transport(&t).unwrap().bfield_act(&b).unwrap()
}

/// Skew structure on even `n`: symplectic `⊕` skew complex type with `2q` complex directions.
pub fn random_skew_structure<R: Rng>(rng: &mut R, n: usize, q: usize) -> GCStructure {
    assert!(n.is_multiple_of(2) && 2 * q <= n);
    let sym = n - 2 * q;
    let omega = standard_complex(sym).neg();
    let base = match (sym, q) {
        (_, 0) => GCStructure::from_symplectic(&omega).unwrap(),
        (0, _) => GCStructure::complex_type(&standard_complex(2 * q), Kind::Skew).unwrap(),
        _ => GCStructure::from_symplectic(&omega)
            .unwrap()
            .direct_sum(&GCStructure::complex_type(&standard_complex(2 * q), Kind::Skew).unwrap())
            .unwrap(),
    };
    let t = random_invertible(rng, n);
    let b = random_skew(rng, n);
    base.transport(&t).unwrap().bfield_act(&b).unwrap()
}

/// A random valid structure of either kind with `n ≤ max_n`.
pub fn random_structure<R: Rng>(rng: &mut R, max_n: usize) -> GCStructure {
    if rng.gen_bool(0.5) {
        let n = rng.gen_range(1..=max_n);
        let p = n % 2 + 2 * rng.gen_range(0..=(n - n % 2) / 2);
        random_symmetric(rng, n, p)
    } else {
        let n = 2 * rng.gen_range(1..=max_n / 2);
        let q = rng.gen_range(0..=n / 2);
        random_skew_structure(rng, n, q)
    }
}
