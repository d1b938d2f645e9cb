//! Exact rational numbers.
//!
//! All collinear coordinates live in [`Rational`], an arbitrary precision
//! fraction kept in lowest terms with a positive denominator.

use alloc::format;
use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseRationalError;

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half(x: &Rational) -> Rational {
    x / int(2)
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 gives up when both parts overflow f64.
        let n = x.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = x.denom().to_f64().unwrap_or(f64::INFINITY);
        if x.is_negative() {
            -(n.abs() / d)
        } else {
            n / d
        }
    })
}

/// Exact conversion of a finite float. Returns `None` for NaN and infinities.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Canonical `p/q` text, always with an explicit denominator.
pub fn to_fraction_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q`, `p`, or a decimal such as `-1.25`.
pub fn parse(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| ParseRationalError::Malformed)?;
        let q = BigInt::from_str(q.trim()).map_err(|_| ParseRationalError::Malformed)?;
        if q.is_zero() {
            return Err(ParseRationalError::ZeroDenominator);
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, fraction)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        if fraction.is_empty() || !fraction.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseRationalError::Malformed);
        }
        let whole_part = match whole {
            "" | "-" | "+" => BigInt::zero(),
            w => BigInt::from_str(w).map_err(|_| ParseRationalError::Malformed)?,
        };
        let digits = BigInt::from_str(fraction).map_err(|_| ParseRationalError::Malformed)?;
        let scale = num_traits::pow(BigInt::from(10), fraction.len());
        let magnitude = whole_part.abs() * &scale + digits;
        let numer = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(numer, scale));
    }
    BigInt::from_str(s)
        .map(Rational::from_integer)
        .map_err(|_| ParseRationalError::Malformed)
}
