//! Exact rational values and their canonical string form.
//!
//! Every invariant in this crate is an exact rational; floating point is
//! confined to diagnostics and to the numeric signature pipeline. Values
//! serialize as lowest-terms strings ("3", "-3/4") so no encoding step can
//! lose precision.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Rational `num / den`, reduced, denominator normalized positive.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Lowest-terms string, "p/q" with q > 0, or "p" when integral.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses "p/q" or "p" back to the exact value.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(Error::validation("empty rational literal"));
    }
    Rational::from_str(trimmed)
        .map_err(|e| Error::validation(format!("invalid rational literal {trimmed:?}: {e}")))
}

/// Residue of an integral rational mod 2, as 0 or 1.
pub fn mod_two(r: &Rational) -> Option<u8> {
    if !is_integral(r) {
        return None;
    }
    let two = BigInt::from(2);
    let rem = ((r.numer() % &two) + &two) % &two;
    Some(if rem.is_zero() { 0 } else { 1 })
}

/// Serde adaptor: rationals as lowest-terms strings.
pub mod serde_rational {
    use serde::Serializer;

    use super::Rational;

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&value.to_string())
    }
}

/// Serde adaptor for optional rational fields.
pub mod serde_opt_rational {
    use serde::Serializer;

    use super::Rational;

    pub fn serialize<S: Serializer>(
        value: &Option<Rational>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match value {
            Some(r) => serializer.serialize_str(&r.to_string()),
            None => serializer.serialize_none(),
        }
    }
}
