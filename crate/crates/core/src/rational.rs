//! Exact rational numbers and their text forms.
//!
//! All cut values and edge weights in this crate are `BigRational`s kept in
//! lowest terms; no floating point is used anywhere in core logic. Optimality
//! and cut-uniqueness questions are decided by exact comparison.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Rational from an integer, for tests and builders.
pub fn rat(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn rat_frac(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q`, a plain integer, or a decimal such as `2.5`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::input("empty rational literal"));
    }
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("bad numerator in `{s}`")))?;
        let den: BigInt = q
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("bad denominator in `{s}`")))?;
        if den.is_zero() {
            return Err(Error::input(format!("zero denominator in `{s}`")));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let neg = int_part.trim_start().starts_with('-');
        let int_part = if int_part.is_empty() || int_part == "-" {
            "0"
        } else {
            int_part
        };
        let int: BigInt = int_part
            .parse()
            .map_err(|_| Error::input(format!("bad decimal `{s}`")))?;
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::input(format!("bad decimal `{s}`")));
        }
        let frac: BigInt = frac_part
            .parse()
            .map_err(|_| Error::input(format!("bad decimal `{s}`")))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mut val = BigRational::new(int.abs() * &scale + frac, scale);
        if neg {
            val = -val;
        }
        return Ok(val);
    }
    let int: BigInt = s
        .parse()
        .map_err(|_| Error::input(format!("bad rational `{s}`")))?;
    Ok(BigRational::from_integer(int))
}

/// Canonical text form: bare integer when the denominator is 1, else `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering with `places` digits after the point, truncated toward
/// zero. Cosmetic only; the exact form is `format_rational`.
pub fn format_decimal(r: &Rational, places: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let a = r.abs();
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = (a * BigRational::from_integer(scale.clone())).trunc();
    let scaled = scaled.numer();
    let int = scaled / &scale;
    let frac = scaled % &scale;
    if places == 0 {
        return format!("{sign}{int}");
    }
    let frac = frac.to_string();
    let pad = places - frac.len();
    format!("{sign}{int}.{}{frac}", "0".repeat(pad))
}

/// Cheap check used by tests on small values.
pub fn as_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
