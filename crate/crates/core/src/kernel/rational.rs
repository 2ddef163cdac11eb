//! Exact rational scalars.
//!
//! Every coordinate in the crate is a [`Rational`]. The type is a thin alias
//! over [`num_rational::BigRational`], which already keeps the denominator
//! positive and the fraction reduced.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("zero denominator in '{0}'")]
    ZeroDenominator(String),
    #[error("malformed rational '{0}'")]
    Malformed(String),
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"7"`, `"-3/4"`, `"2.125"` or `"-.5"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let malformed = || ParseRationalError::Malformed(s.to_string());
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = parse_int(n.trim()).ok_or_else(malformed)?;
        let d: BigInt = parse_int(d.trim()).ok_or_else(malformed)?;
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(s.to_string()));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, fracpart)) = t.split_once('.') {
        let (neg, whole) = match whole.strip_prefix('-') {
            Some(w) => (true, w),
            None => (false, whole.strip_prefix('+').unwrap_or(whole)),
        };
        if (whole.is_empty() && fracpart.is_empty())
            || !whole.chars().all(|c| c.is_ascii_digit())
            || !fracpart.chars().all(|c| c.is_ascii_digit())
        {
            return Err(malformed());
        }
        let digits = format!("{whole}{fracpart}");
        let mag: BigInt = digits.parse().map_err(|_| malformed())?;
        let scale = num_traits::pow(BigInt::from(10), fracpart.len());
        let v = Rational::new(mag, scale);
        return Ok(if neg { -v } else { v });
    }
    parse_int(t).map(Rational::from_integer).ok_or_else(malformed)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if body.is_empty() || !body.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Lossy conversion used only for rendering.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Largest integer `k` with `k*k <= v`, for `v >= 0`.
pub fn isqrt(v: &BigInt) -> BigInt {
    debug_assert!(!v.is_negative());
    v.sqrt()
}

/// Exact `ceil(sqrt(v))` for a non-negative integer.
pub fn isqrt_ceil(v: &BigInt) -> BigInt {
    let s = isqrt(v);
    if &(&s * &s) == v {
        s
    } else {
        s + 1
    }
}

/// Rational `q` with `q*q <= v` and `v - q*q` small: a lower approximation of
/// `sqrt(v)` with denominator `2^bits`.
pub fn sqrt_floor_approx(v: &Rational, bits: u32) -> Rational {
    if !v.is_positive() {
        return Rational::zero();
    }
    let scale = BigInt::one() << (2 * bits as usize);
    let scaled = (v.numer() * scale).div_floor(v.denom());
    Rational::new(isqrt(&scaled), BigInt::one() << bits as usize)
}

/// Exact square root if `v` is the square of a rational.
pub fn sqrt_exact(v: &Rational) -> Option<Rational> {
    if v.is_negative() {
        return None;
    }
    let n = isqrt(v.numer());
    let d = isqrt(v.denom());
    if &(&n * &n) == v.numer() && &(&d * &d) == v.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn half() -> Rational {
    frac(1, 2)
}

pub fn two() -> Rational {
    int(2)
}
