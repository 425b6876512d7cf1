//! Exact rationals and their text form.
//!
//! The number type is [`num_rational::BigRational`], which keeps every value
//! reduced with a positive denominator. Text form is `"p/q"`, or `"p"` when
//! the denominator is one.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}` in rational literal")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"p"` or `"p/q"` with optional sign on either part.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let int = |s: &str| {
        BigInt::from_str(s.trim()).map_err(|_| ParseRationalError::BadInteger(s.trim().to_string()))
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(int(text)?)),
        Some((num, den)) => {
            let num = int(num)?;
            let den = int(den)?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

pub fn format_rational(q: &Rational) -> String {
    RationalText(q).to_string()
}

/// Display adapter producing the canonical `"p/q"` / `"p"` text.
pub struct RationalText<'a>(pub &'a Rational);

impl fmt::Display for RationalText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Integer power with a possibly negative exponent. Panics on `0^negative`.
pub fn rational_powi(q: &Rational, exp: i32) -> Rational {
    let mut base = if exp < 0 { q.recip() } else { q.clone() };
    let mut e = exp.unsigned_abs();
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Serde adapter for a single rational stored as a string.
pub mod as_string {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
