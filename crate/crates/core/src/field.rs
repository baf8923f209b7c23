//! Coefficient fields: prime fields `F_p` and the rationals.
//!
//! Every computation in the crate is generic over [`Field`]. The runtime
//! choice of field (read from a file header or a command-line flag) is a
//! [`FieldSpec`], which callers dispatch on once at the top level.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown field kind `{0}` (expected a prime or `Q`)")]
    UnknownKind(String),
    #[error("invalid scalar `{text}` over {field}: {reason}")]
    BadScalar { text: String, field: FieldSpec, reason: &'static str },
}

/// The runtime description of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" || s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        match s.parse::<u64>() {
            Ok(p) => FieldSpec::prime(p),
            Err(_) => Err(FieldError::UnknownKind(s.to_string())),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "{p}"),
            FieldSpec::Rationals => write!(f, "Q"),
        }
    }
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for w in WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for w in WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Exact field arithmetic. Elements are always kept in canonical form, so
/// `==` on elements is field equality.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + Eq + Hash + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Parses the canonical scalar syntax of this field.
    fn parse(&self, text: &str) -> Result<Self::Elem, FieldError>;
    /// Maps a rational into the field; fails when the denominator is not
    /// invertible.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem, FieldError>;
    fn format(&self, a: &Self::Elem) -> String;

    /// Number of elements, when finite.
    fn order(&self) -> Option<u64>;
    /// All elements in canonical order `0, 1, ..., p-1`, when finite.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc + a * b`.
    fn mul_add(&self, acc: &Self::Elem, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(acc, &self.mul(a, b))
    }

    /// Parses `a` or `a/b` in any form (negative, unreduced) and maps it
    /// into the field. Used when a file is re-read over a different field.
    fn parse_lenient(&self, text: &str) -> Result<Self::Elem, FieldError> {
        let q = parse_rational_loose(text).ok_or_else(|| FieldError::BadScalar {
            text: text.to_string(),
            field: self.spec(),
            reason: "not an integer or fraction",
        })?;
        self.from_rational(&q)
    }
}

fn parse_rational_loose(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((n, d)) => {
            let n = n.parse::<BigInt>().ok()?;
            let d = d.parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
    }
}

/// The prime field `Z/pZ`, elements represented in `[0, p-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        FieldSpec::prime(p).map(|_| PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(pow_mod(*a, self.p - 2, self.p))
        }
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn parse(&self, text: &str) -> Result<u64, FieldError> {
        let bad = |reason| FieldError::BadScalar {
            text: text.to_string(),
            field: self.spec(),
            reason,
        };
        let t = text.trim();
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected a decimal integer in [0, p-1]"));
        }
        let v: u64 = t.parse().map_err(|_| bad("integer out of range"))?;
        if v >= self.p {
            return Err(bad("not reduced modulo p"));
        }
        Ok(v)
    }

    fn from_rational(&self, q: &BigRational) -> Result<u64, FieldError> {
        let p = BigInt::from(self.p);
        let reduce = |n: &BigInt| n.mod_floor(&p).to_u64().expect("reduced below p");
        let num = reduce(q.numer());
        let den = reduce(q.denom());
        let inv = self.inv(&den).ok_or_else(|| FieldError::BadScalar {
            text: q.to_string(),
            field: self.spec(),
            reason: "denominator divisible by p",
        })?;
        Ok(self.mul(&num, &inv))
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn order(&self) -> Option<u64> {
        Some(self.p)
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
}

/// The rational numbers, elements kept in lowest terms with positive
/// denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn parse(&self, text: &str) -> Result<BigRational, FieldError> {
        let bad = |reason| FieldError::BadScalar {
            text: text.to_string(),
            field: FieldSpec::Rationals,
            reason,
        };
        let t = text.trim();
        match t.split_once('/') {
            None => t.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad("expected `a` or `a/b`")),
            Some((n, d)) => {
                let n: BigInt = n.parse().map_err(|_| bad("bad numerator"))?;
                let d: BigInt = d.parse().map_err(|_| bad("bad denominator"))?;
                if !d.is_positive() {
                    return Err(bad("denominator must be positive"));
                }
                if !n.gcd(&d).is_one() {
                    return Err(bad("fraction not in lowest terms"));
                }
                Ok(BigRational::new_raw(n, d))
            }
        }
    }

    fn from_rational(&self, q: &BigRational) -> Result<BigRational, FieldError> {
        Ok(q.clone())
    }

    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("Q".parse::<FieldSpec>(), Ok(FieldSpec::Rationals));
        assert_eq!("7".parse::<FieldSpec>(), Ok(FieldSpec::Prime(7)));
        let err = "4".parse::<FieldSpec>().unwrap_err();
        assert_eq!(err.to_string(), "4 is not prime");
        assert!(matches!("R".parse::<FieldSpec>(), Err(FieldError::UnknownKind(_))));
    }

    #[test]
    fn prime_field_axioms() {
        let f = PrimeField::new(7).unwrap();
        for a in 0..7u64 {
            assert_eq!(f.add(&a, &f.neg(&a)), 0);
            if a != 0 {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn prime_scalar_syntax() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.parse("2"), Ok(2));
        assert!(f.parse("3").is_err());
        assert!(f.parse("-1").is_err());
        assert_eq!(f.parse_lenient("-1"), Ok(2));
        assert_eq!(f.parse_lenient("1/2"), Ok(2));
        assert!(f.parse_lenient("1/3").is_err());
    }

    #[test]
    fn rational_scalar_syntax() {
        let q = Rationals;
        let half = q.parse("1/2").unwrap();
        assert_eq!(q.format(&half), "1/2");
        assert_eq!(q.format(&q.parse("-3").unwrap()), "-3");
        assert!(q.parse("2/4").is_err());
        assert!(q.parse("1/-2").is_err());
        assert_eq!(q.parse_lenient("2/4"), Ok(half.clone()));
        assert_eq!(q.mul(&half, &q.inv(&half).unwrap()), q.one());
    }
}
