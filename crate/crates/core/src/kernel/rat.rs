//! Exact rational scalars.
//!
//! Every number the engine touches is a [`Rat`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number (always canonical: gcd = 1, denominator > 0).
pub type Rat = BigRational;

/// Integer-valued rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num / den` in canonical form. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Renders `p` for integers and `p/q` otherwise.
pub fn render(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Like [`render`], but wraps non-integers in parentheses so the result can
/// sit next to an operator without ambiguity.
pub fn render_grouped(r: &Rat) -> String {
    if r.denom().is_one() {
        render(r)
    } else {
        format!("({})", render(r))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError {
    input: String,
    reason: &'static str,
}

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed rational {:?}: {}", self.input, self.reason)
    }
}

impl std::error::Error for ParseRatError {}

/// Parses `"p"` or `"p/q"` with `q > 0`. Surrounding whitespace is ignored.
pub fn parse(input: &str) -> Result<Rat, ParseRatError> {
    let err = |reason| ParseRatError {
        input: input.to_string(),
        reason,
    };
    let s = input.trim();
    if s.is_empty() {
        return Err(err("empty"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer = BigInt::from_str(num).map_err(|_| err("numerator is not an integer"))?;
    let denom = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return Err(err("denominator must be a positive integer"));
            }
            let d = BigInt::from_str(d).map_err(|_| err("denominator is not an integer"))?;
            if !d.is_positive() {
                return Err(err("denominator must be positive"));
            }
            d
        }
    };
    Ok(Rat::new(numer, denom))
}
