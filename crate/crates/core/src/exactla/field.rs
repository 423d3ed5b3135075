//! Exact scalars over ℚ (arbitrary precision) or a prime field F_p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field every matrix lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// Largest accepted modulus; products are formed in `u128` but primality is
/// established by trial division.
pub const MAX_PRIME: u64 = 1 << 32;

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^32")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Modular { value: 0, modulus: p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular { value: n.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    /// `num/den`; panics on a zero denominator.
    pub fn ratio(&self, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::new(num.into(), den.into())),
            Field::Prime(_) => &self.int(num) * &self.int(den).inv().expect("denominator vanishes mod p"),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rationals, Scalar::Rational(_)) => true,
            (Field::Prime(p), Scalar::Modular { value, modulus }) => p == modulus && value < p,
            _ => false,
        }
    }

    /// Parses `"p/q"` or `"n"` for ℚ and a residue (or any integer) for F_p.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        match *self {
            Field::Rationals => BigRational::from_str(text)
                .map(Scalar::Rational)
                .map_err(|_| Error::Parse(format!("not a rational: {text:?}"))),
            Field::Prime(p) => {
                let n = BigInt::from_str(text).map_err(|_| Error::Parse(format!("not an integer: {text:?}")))?;
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Ok(Scalar::Modular { value: r.to_u64().expect("residue fits"), modulus: p })
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(p) => format!("F_{p}"),
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

/// A field element. Mixing elements of different fields is a programming error
/// and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus }
            }
        })
    }

    /// Serialized form: `"p/q"` in lowest terms for ℚ, the residue for F_p.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Rational(q) => serde_json::Value::String(format!("{}/{}", q.numer(), q.denom())),
            Scalar::Modular { value, .. } => serde_json::Value::from(*value),
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field().name(), b.field().name())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) if p == q => {
                Scalar::Modular { value: ((*a as u128 + *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) if p == q => {
                Scalar::Modular { value: ((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) if p == q => {
                Scalar::Modular { value: ((*a as u128 * *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(&f5.int(2) * &f5.int(3), f5.int(1));
        assert_eq!(&f5.int(2) - &f5.int(3), f5.int(4));
        assert_eq!(f5.int(3).inv().unwrap(), f5.int(2));
        assert_eq!(-&f5.int(0), f5.int(0));
        assert!(f5.int(0).inv().is_none());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(7).is_ok());
    }

    #[test]
    fn rational_serialization_is_lowest_terms() {
        let q = Field::Rationals;
        assert_eq!(q.ratio(6, -4).to_json(), serde_json::json!("-3/2"));
        assert_eq!(q.int(3).to_json(), serde_json::json!("3/1"));
        assert_eq!(q.parse("4/6").unwrap(), q.ratio(2, 3));
        assert_eq!(q.parse("-7").unwrap(), q.int(-7));
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn modular_parse_reduces() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.parse("-1").unwrap(), f7.int(6));
        assert_eq!(f7.ratio(1, 2), f7.int(4));
    }
}
