//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Worths, dividends and payoffs. Always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Scalar {
    Scalar::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `[+-]digits` or `[+-]digits/digits`. Decimals and exponents are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = || Error::MalformedRational(text.to_string());
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (text, None),
    };
    let digits = numer.strip_prefix(['-', '+']).unwrap_or(numer);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = match denom {
        None => BigInt::from(1),
        Some(q) => {
            if q.is_empty() || !q.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            q.parse().map_err(|_| bad())?
        }
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(numer, denom))
}

/// Canonical text form: an integer, or `p/q` in lowest terms.
pub fn format_scalar(value: &Scalar) -> String {
    value.to_string()
}
