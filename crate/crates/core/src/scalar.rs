//! Exact arithmetic in the multi-quadratic field `Q(i)(√d₁, √d₂, …)`.
//!
//! A [`Scalar`] is a finite sum of terms `q · i^e · √d` with `q` rational,
//! `e ∈ {0, 1}` and `d` a squarefree positive integer. Every element of the
//! field has exactly one such representation once like terms are merged and
//! zero coefficients dropped, so equality is structural.
//!
//! Arithmetic on bare `Scalar`s never fails: the type behaves as the union of
//! all multi-quadratic towers over `Q(i)`. A [`FieldSpec`] names a declared
//! finite tower and offers checked arithmetic that rejects results leaving it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("result needs sqrt({0}), which is not a declared radicand")]
    RadicandMissing(u64),
    #[error("invalid radicand {0}: radicands must be squarefree integers >= 2")]
    InvalidRadicand(u64),
    #[error("duplicate radicand {0}")]
    DuplicateRadicand(u64),
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Basis monomial `i^imag · √radical`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub radical: u64,
    pub imag: bool,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.radical, self.imag).cmp(&(other.radical, other.imag))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial { radical: 1, imag: false };
    pub const I: Monomial = Monomial { radical: 1, imag: true };

    /// Product of two monomials as `(sign · integer factor, monomial)`.
    fn mul(self, other: Monomial) -> (BigInt, Monomial) {
        let g = self.radical.gcd(&other.radical);
        let radical = (self.radical / g) * (other.radical / g);
        let mut factor = BigInt::from(g);
        if self.imag && other.imag {
            factor = -factor;
        }
        (factor, Monomial { radical, imag: self.imag ^ other.imag })
    }
}

/// An element of `Q(i)(√d₁, …)` in canonical form (terms sorted, merged, nonzero).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: Vec<(Monomial, BigRational)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Scalar { terms: vec![(Monomial::I, BigRational::one())] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::from_term(Monomial::ONE, q)
    }

    pub fn from_term(m: Monomial, q: BigRational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            Scalar { terms: vec![(m, q)] }
        }
    }

    /// `√d` for a positive integer `d` (not necessarily squarefree).
    pub fn sqrt_int(d: u64) -> Self {
        assert!(d > 0, "sqrt of zero requested as radical");
        let (square, free) = squarefree_split(d);
        Self::from_term(
            Monomial { radical: free, imag: false },
            BigRational::from_integer(BigInt::from(square)),
        )
    }

    /// Positive square root of a positive rational `p/q`, as `√(pq)/q`.
    pub fn sqrt_rational(r: &BigRational) -> Self {
        assert!(r.is_positive(), "sqrt_rational needs a positive argument");
        let p = r.numer().to_u64().expect("radicand numerator too large");
        let q = r.denom().to_u64().expect("radicand denominator too large");
        Self::sqrt_int(p * q) * Scalar::from_rational(BigRational::new(BigInt::one(), BigInt::from(q)))
    }

    fn from_unsorted(mut terms: Vec<(Monomial, BigRational)>) -> Self {
        terms.sort_by_key(|a| a.0);
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(terms.len());
        for (m, q) in terms {
            match out.last_mut() {
                Some((lm, lq)) if *lm == m => *lq += q,
                _ => out.push((m, q)),
            }
        }
        out.retain(|(_, q)| !q.is_zero());
        Scalar { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    /// Fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(m, _)| !m.imag)
    }

    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == Monomial::ONE)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(m, q)] if *m == Monomial::ONE => Some(q.clone()),
            _ => None,
        }
    }

    /// Complex conjugation: `i ↦ −i`, radicals fixed.
    pub fn conj(&self) -> Self {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (*m, if m.imag { -q.clone() } else { q.clone() }))
                .collect(),
        }
    }

    /// `(re, im)` with `self = re + i·im` and both parts real.
    pub fn real_imag(&self) -> (Scalar, Scalar) {
        let mut re = Vec::new();
        let mut im = Vec::new();
        for (m, q) in &self.terms {
            let base = Monomial { radical: m.radical, imag: false };
            if m.imag {
                im.push((base, q.clone()));
            } else {
                re.push((base, q.clone()));
            }
        }
        (Scalar { terms: re }, Scalar { terms: im })
    }

    pub fn re(&self) -> Scalar {
        self.real_imag().0
    }

    pub fn im(&self) -> Scalar {
        self.real_imag().1
    }

    /// Squarefree radicals `d > 1` occurring in the canonical form.
    pub fn radicals(&self) -> Vec<u64> {
        let mut r: Vec<u64> = self.terms.iter().map(|(m, _)| m.radical).filter(|&d| d > 1).collect();
        r.dedup();
        r
    }

    pub fn mul_i(&self) -> Scalar {
        self * &Scalar::i()
    }

    pub fn scale(&self, q: &BigRational) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect() }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let prime = self.terms.iter().filter_map(|(m, _)| largest_prime_factor(m.radical)).max();
        match prime {
            None => {
                // a + bi with a, b rational
                let a = self.re().to_rational().unwrap();
                let b = self.im().to_rational().unwrap();
                let norm = &a * &a + &b * &b;
                Some(self.conj().scale(&norm.recip()))
            }
            Some(p) => {
                // self = u + v√p with u, v free of p
                let mut u = Vec::new();
                let mut v = Vec::new();
                for (m, q) in &self.terms {
                    if m.radical % p == 0 {
                        v.push((Monomial { radical: m.radical / p, imag: m.imag }, q.clone()));
                    } else {
                        u.push((*m, q.clone()));
                    }
                }
                let u = Scalar { terms: u };
                let v = Scalar { terms: v };
                let sqrt_p = Scalar::sqrt_int(p);
                let conjugate = &u - &(&v * &sqrt_p);
                let norm = &(&u * &u) - &(&(&v * &v) * &Scalar::from_int(p as i64));
                Some(&conjugate * &norm.inv()?)
            }
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        other.inv().map(|inv| self * &inv).ok_or(ScalarError::DivisionByZero)
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Sign of a real scalar, if it is rational (radical signs need no ordering here).
    pub fn rational_sign(&self) -> Option<i8> {
        self.to_rational().map(|q| {
            if q.is_zero() {
                0
            } else if q.is_positive() {
                1
            } else {
                -1
            }
        })
    }
}

fn squarefree_split(mut d: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p * p <= d {
        let mut count = 0;
        while d.is_multiple_of(p) {
            d /= p;
            count += 1;
        }
        square *= p.pow(count / 2);
        if count % 2 == 1 {
            free *= p;
        }
        p += 1;
    }
    free *= d;
    (square, free)
}

pub(crate) fn is_squarefree(d: u64) -> bool {
    d >= 1 && squarefree_split(d).0 == 1
}

fn largest_prime_factor(mut d: u64) -> Option<u64> {
    if d <= 1 {
        return None;
    }
    let mut largest = 1;
    let mut p = 2u64;
    while p * p <= d {
        while d.is_multiple_of(p) {
            d /= p;
            largest = p;
        }
        p += 1;
    }
    Some(if d > 1 { d } else { largest })
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders `q`, `q*i`, `q*sqrt(d)`, `q*i*sqrt(d)` terms joined by ` + ` / ` - `.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, q)) in self.terms.iter().enumerate() {
            let magnitude = q.abs();
            if k == 0 {
                if q.is_negative() {
                    write!(f, "-")?;
                }
            } else if q.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{magnitude}")?;
            if m.imag {
                write!(f, "*i")?;
            }
            if m.radical > 1 {
                write!(f, "*sqrt({})", m.radical)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ScalarError::Parse { input: input.to_string(), reason: reason.to_string() };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty"));
        }
        // split into signed terms at top-level '+'/'-' (not inside parentheses)
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut depth = 0i32;
        for (idx, c) in compact.chars().enumerate() {
            match c {
                '(' => {
                    depth += 1;
                    current.push(c);
                }
                ')' => {
                    depth -= 1;
                    current.push(c);
                }
                '+' | '-' if depth == 0 => {
                    let after_operator = current.ends_with('*') || current.ends_with('^');
                    if after_operator {
                        return Err(err("sign inside a term"));
                    }
                    if idx != 0 || !current.is_empty() {
                        if current.is_empty() {
                            return Err(err("dangling operator"));
                        }
                        pieces.push((negative, std::mem::take(&mut current)));
                    }
                    negative = c == '-';
                }
                _ => current.push(c),
            }
        }
        if current.is_empty() {
            return Err(err("dangling operator"));
        }
        pieces.push((negative, current));

        let mut terms = Vec::new();
        for (neg, piece) in pieces {
            let mut coeff = BigRational::one();
            let mut monomial = Monomial::ONE;
            for factor in piece.split('*') {
                let (base, exponent) = match factor.rsplit_once('^') {
                    Some((b, e)) if !b.ends_with('(') => {
                        (b, e.parse::<u32>().map_err(|_| err("bad exponent"))?)
                    }
                    _ => (factor, 1),
                };
                if base == "i" {
                    for _ in 0..exponent {
                        let (s, m) = monomial.mul(Monomial::I);
                        coeff *= BigRational::from_integer(s);
                        monomial = m;
                    }
                } else if let Some(inner) = base.strip_prefix("sqrt(").and_then(|s| s.strip_suffix(')')) {
                    let d: u64 = inner.parse().map_err(|_| err("bad radicand"))?;
                    if d == 0 {
                        if exponent > 0 {
                            coeff = BigRational::zero();
                        }
                        continue;
                    }
                    let (square, free) = squarefree_split(d);
                    for _ in 0..exponent {
                        coeff *= BigRational::from_integer(BigInt::from(square));
                        let (s, m) = monomial.mul(Monomial { radical: free, imag: false });
                        coeff *= BigRational::from_integer(s);
                        monomial = m;
                    }
                } else {
                    let q = parse_rational(base).ok_or_else(|| err("bad rational coefficient"))?;
                    coeff *= num_traits::pow(q, exponent as usize);
                }
            }
            if neg {
                coeff = -coeff;
            }
            terms.push((monomial, coeff));
        }
        Ok(Scalar::from_unsorted(terms))
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    if s.is_empty() || s.contains('.') {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), rhs.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, qa)), Some((mb, qb))) => match ma.cmp(mb) {
                    Ordering::Less => {
                        out.push((*ma, qa.clone()));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((*mb, qb.clone()));
                        b.next();
                    }
                    Ordering::Equal => {
                        let s = qa + qb;
                        if !s.is_zero() {
                            out.push((*ma, s));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some((m, q)), None) | (None, Some((m, q))) => {
                    out.push((*m, q.clone()));
                    a.next();
                    b.next();
                }
                (None, None) => break,
            }
        }
        Scalar { terms: out }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(m, q)| (*m, -q.clone())).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for (_, q) in &mut self.terms {
            *q = -q.clone();
        }
        self
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, qa) in &self.terms {
            for (mb, qb) in &rhs.terms {
                let (factor, m) = ma.mul(*mb);
                out.push((m, qa * qb * BigRational::from_integer(factor)));
            }
        }
        Scalar::from_unsorted(out)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] for a `Result`.
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = &*self - &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

/// Arithmetic operation selector for [`FieldSpec::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

/// A declared finite tower: `Q(i)` together with `√r` for each listed radicand.
///
/// The admissible radicals are `1` and the listed radicands; a scalar lies in
/// the tower when every radical in its canonical form is admissible.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FieldSpec {
    radicands: Vec<u64>,
}

impl FieldSpec {
    pub fn rationals_i() -> Self {
        FieldSpec { radicands: Vec::new() }
    }

    pub fn new(radicands: impl IntoIterator<Item = u64>) -> Result<Self, ScalarError> {
        let mut list: Vec<u64> = Vec::new();
        for r in radicands {
            if r < 2 || !is_squarefree(r) {
                return Err(ScalarError::InvalidRadicand(r));
            }
            if list.contains(&r) {
                return Err(ScalarError::DuplicateRadicand(r));
            }
            list.push(r);
        }
        list.sort_unstable();
        Ok(FieldSpec { radicands: list })
    }

    /// Smallest spec containing `generators` and closed under squarefree products,
    /// so that it is a genuine field.
    pub fn closure(generators: impl IntoIterator<Item = u64>) -> Self {
        let mut set: Vec<u64> = vec![1];
        for g in generators {
            if g <= 1 || set.contains(&g) {
                continue;
            }
            let products: Vec<u64> = set
                .iter()
                .map(|&s| {
                    let d = s.gcd(&g);
                    (s / d) * (g / d)
                })
                .collect();
            for p in products {
                if !set.contains(&p) {
                    set.push(p);
                }
            }
        }
        set.retain(|&d| d > 1);
        set.sort_unstable();
        FieldSpec { radicands: set }
    }

    pub fn radicands(&self) -> &[u64] {
        &self.radicands
    }

    /// Whether `1 ∪ radicands` is closed under squarefree multiplication.
    pub fn is_closed(&self) -> bool {
        self.radicands.iter().all(|&a| {
            self.radicands.iter().all(|&b| {
                let g = a.gcd(&b);
                let p = (a / g) * (b / g);
                p == 1 || self.radicands.contains(&p)
            })
        })
    }

    /// Degree over `Q` of the field generated by `i` and the radicands.
    pub fn degree(&self) -> usize {
        2 * (FieldSpec::closure(self.radicands.iter().copied()).radicands.len() + 1)
    }

    pub fn contains(&self, x: &Scalar) -> Result<(), ScalarError> {
        for d in x.radicals() {
            if !self.radicands.contains(&d) {
                return Err(ScalarError::RadicandMissing(d));
            }
        }
        Ok(())
    }

    pub fn arith(&self, a: &Scalar, b: &Scalar, op: Op) -> Result<Scalar, ScalarError> {
        self.contains(a)?;
        self.contains(b)?;
        let result = match op {
            Op::Add => a + b,
            Op::Sub => a - b,
            Op::Mul => a * b,
            Op::Div => a.checked_div(b)?,
        };
        self.contains(&result)?;
        Ok(result)
    }
}
