//! Exact truncated power-series arithmetic.

mod jet;
pub mod rational;

pub use jet::Jet;
pub use rational::{format_rational, integer, parse_rational, ratio, Rational};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Jets serialize as arrays of rational strings, index = power of `x`.
impl Serialize for Jet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<String> = self.coeffs().iter().map(format_rational).collect();
        text.serialize(s)
    }
}

/// Deserialized jets are read as exact polynomials.
impl<'de> Deserialize<'de> for Jet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = Vec::<String>::deserialize(d)?;
        if text.is_empty() {
            return Err(D::Error::custom("a jet needs at least one coefficient"));
        }
        let coeffs = text
            .iter()
            .map(|t| parse_rational(t))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(Jet::polynomial(coeffs))
    }
}
