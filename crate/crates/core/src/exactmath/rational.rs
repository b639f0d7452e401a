//! Exact rational scalars.
//!
//! Backed by [`num_rational::BigRational`]: always stored in lowest terms
//! with a positive denominator, so equality checks are exact and the
//! serialized form (`p/q`, or `p` when the denominator is 1) is canonical.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics when `den` is zero.
pub fn frac(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `p/q` or `p`, tolerating surrounding whitespace and a typeset
/// minus sign.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let cleaned = s.trim().replace('\u{2212}', "-");
    cleaned
        .parse::<BigRational>()
        .map_err(|_| Error::ParseRational(s.to_string()))
}

pub fn rat_pow(base: &Rat, exp: u16) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub fn rat_to_f64(q: &Rat) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Comma-joined rational strings, e.g. `1,2,-1/2`.
pub fn format_rat_list(values: &[Rat]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
