//! Exact scalar fields: the rationals and prime fields.

use alloc::format;
use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest prime modulus accepted, so that products fit in `u64` before reduction.
pub const MAX_PRIME: u64 = u32::MAX as u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue(r) => *r == 1,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Residue(r) => write!(f, "{r}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::LimitExceeded {
                what: "prime modulus",
                limit: MAX_PRIME as usize,
                found: p as usize,
            });
        }
        if !is_prime(p) {
            return Err(Error::malformed(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(_) => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::Prime(_) => Scalar::Residue(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.into())),
            FieldSpec::Prime(p) => Scalar::Residue(n.rem_euclid(*p as i64) as u64),
        }
    }

    /// `num / den`, failing when `den` vanishes in this field.
    pub fn ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => {
                if den.is_zero() {
                    return Err(Error::malformed("zero denominator"));
                }
                Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone())))
            }
            FieldSpec::Prime(p) => {
                let d = bigint_mod(den, *p);
                if d == 0 {
                    return Err(Error::malformed(format!(
                        "denominator {den} vanishes modulo {p}"
                    )));
                }
                let n = bigint_mod(num, *p);
                Ok(Scalar::Residue(mul_mod(n, pow_mod(d, p - 2, *p), *p)))
            }
        }
    }

    /// Brings a scalar into this field: rationals reduce into prime fields,
    /// residues are accepted only by the matching prime field.
    pub fn normalize(&self, s: Scalar) -> Result<Scalar> {
        match (self, s) {
            (FieldSpec::Rationals, s @ Scalar::Rational(_)) => Ok(s),
            (FieldSpec::Prime(_), Scalar::Rational(q)) => self.ratio(q.numer(), q.denom()),
            (FieldSpec::Prime(p), Scalar::Residue(r)) => Ok(Scalar::Residue(r % p)),
            (FieldSpec::Rationals, Scalar::Residue(_)) => Err(Error::FieldMismatch),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::Prime(p), Scalar::Residue(r)) => r < p,
            _ => false,
        }
    }

    /// Parses `"3"`, `"-2/3"` or `"−2/3"` (U+2212 minus sign).
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (neg, body) = if let Some(rest) = text.strip_prefix('-') {
            (true, rest)
        } else if let Some(rest) = text.strip_prefix('\u{2212}') {
            (true, rest)
        } else {
            (false, text)
        };
        let bad = || Error::malformed(format!("cannot parse scalar {text:?}"));
        let parse_nat = |s: &str| -> Result<BigInt> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            s.parse::<BigInt>().map_err(|_| bad())
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (parse_nat(n.trim())?, parse_nat(d.trim())?),
            None => (parse_nat(body)?, BigInt::one()),
        };
        let num = if neg { -num } else { num };
        self.ratio(&num, &den)
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x + y)
            }
            (FieldSpec::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            _ => unreachable!("scalar does not belong to {self:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldSpec::Prime(p), Scalar::Residue(x)) => Scalar::Residue((p - x) % p),
            _ => unreachable!("scalar does not belong to {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x * y)
            }
            (FieldSpec::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(mul_mod(*x, *y, *p))
            }
            _ => unreachable!("scalar does not belong to {self:?}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        Some(match (self, a) {
            (FieldSpec::Rationals, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (FieldSpec::Prime(p), Scalar::Residue(x)) => Scalar::Residue(pow_mod(*x, p - 2, *p)),
            _ => unreachable!("scalar does not belong to {self:?}"),
        })
    }

    pub fn pow(&self, a: &Scalar, e: u64) -> Scalar {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Canonical text form; the inverse of [`FieldSpec::parse`].
    pub fn format(&self, s: &Scalar) -> String {
        format!("{s}")
    }

    pub fn is_negative(&self, s: &Scalar) -> bool {
        matches!(s, Scalar::Rational(q) if q.is_negative())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        let q = FieldSpec::Rationals;
        for text in ["0", "3", "-2/3", "5/7", "-12"] {
            assert_eq!(q.parse(text).unwrap().to_string(), text);
        }
        assert_eq!(q.parse("\u{2212}2/3").unwrap(), q.parse("-2/3").unwrap());
        assert_eq!(q.parse("4/6").unwrap().to_string(), "2/3");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
        assert!(q.parse("--1").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f7 = FieldSpec::prime(7).unwrap();
        let two = f7.from_i64(2);
        assert_eq!(f7.pow(&two, 3), f7.one());
        assert_eq!(f7.parse("3/7").unwrap_err(), Error::malformed("denominator 7 vanishes modulo 7"));
        assert_eq!(f7.parse("1/2").unwrap(), Scalar::Residue(4));
        assert_eq!(f7.parse("-1").unwrap(), Scalar::Residue(6));
        assert_eq!(f7.inv(&Scalar::Residue(3)), Some(Scalar::Residue(5)));
        assert!(FieldSpec::prime(8).is_err());
    }

    #[test]
    fn normalize_reduces_rationals() {
        let f5 = FieldSpec::Prime(5);
        let half = FieldSpec::Rationals.parse("1/2").unwrap();
        assert_eq!(f5.normalize(half).unwrap(), Scalar::Residue(3));
        assert_eq!(
            FieldSpec::Rationals.normalize(Scalar::Residue(1)),
            Err(Error::FieldMismatch)
        );
    }
}
