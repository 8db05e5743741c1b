//! Small real Lie algebras in explicit bases.

use crate::bracket::StructureConstants;
use crate::scalar::Scalar;

/// `𝔰𝔬(n)` in the basis `M_{ab} = E_{ab} − E_{ba}`, `a < b`, ordered lexicographically.
pub fn so(n: usize) -> StructureConstants {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a, b)).unwrap();
    let mat = |(a, b): (usize, usize)| {
        let mut m = vec![vec![0i64; n]; n];
        m[a][b] = 1;
        m[b][a] = -1;
        m
    };
    let mut sc = StructureConstants::abelian(pairs.len());
    for (i, &p) in pairs.iter().enumerate() {
        for (j, &q) in pairs.iter().enumerate().skip(i + 1) {
            let (x, y) = (mat(p), mat(q));
            let mut v = vec![Scalar::zero(); pairs.len()];
            for a in 0..n {
                for b in a + 1..n {
                    let c: i64 = (0..n).map(|k| x[a][k] * y[k][b] - y[a][k] * x[k][b]).sum();
                    if c != 0 {
                        v[index(a, b)] = Scalar::from_int(c);
                    }
                }
            }
            sc.set(i, j, &v);
        }
    }
    sc
}

/// Two-dimensional non-abelian algebra, `[e₀, e₁] = e₁`.
pub fn aff() -> StructureConstants {
    let mut sc = StructureConstants::abelian(2);
    sc.set_term(0, 1, 1, Scalar::one());
    sc
}

pub fn abelian(n: usize) -> StructureConstants {
    StructureConstants::abelian(n)
}
