//! Arbitrary-precision rational scalars and their canonical text form.
//!
//! Every quantity in this crate is an exact rational number. The text form
//! `"p"` / `"p/q"` is the only serialization format; no floating point
//! appears anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use thiserror::Error;

/// Exact scalar of the ground field: an arbitrary-precision rational,
/// always stored in lowest terms with a positive denominator.
pub type Rat = BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// `ratio(p, q)` is `p/q` reduced to lowest terms. Panics if `q == 0`;
/// use [`parse_rational`] for untrusted input.
pub fn ratio(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}` in rational literal")]
    BadInteger(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
    #[error("too many `/` in rational literal `{0}`")]
    ExtraSlash(String),
}

/// Parses `"p"` or `"p/q"` with arbitrary-precision integers.
/// Rejects zero denominators and malformed integers.
pub fn parse_rational(text: &str) -> Result<Rat, RationalParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let mut parts = text.splitn(3, '/');
    let numer_text = parts.next().unwrap_or("");
    let denom_text = parts.next();
    if parts.next().is_some() {
        return Err(RationalParseError::ExtraSlash(text.to_string()));
    }
    let numer: BigInt = numer_text
        .trim()
        .parse()
        .map_err(|_| RationalParseError::BadInteger(numer_text.to_string()))?;
    let denom: BigInt = match denom_text {
        None => BigInt::one(),
        Some(d) => d
            .trim()
            .parse()
            .map_err(|_| RationalParseError::BadInteger(d.to_string()))?,
    };
    if denom.is_zero() {
        return Err(RationalParseError::ZeroDenominator(text.to_string()));
    }
    Ok(BigRational::new(numer, denom))
}

/// Formats in lowest terms as `"p"` or `"p/q"`. Inverse of
/// [`parse_rational`] on canonical values.
pub fn format_rational(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
