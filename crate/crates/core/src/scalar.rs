//! Scalar field abstraction.
//!
//! Every algebraic object in the crate is generic over [`Scalar`]. The
//! default is the exact rational [`Q`]; `f64` is available for the float
//! regression mode, where "zero" means zero up to a relative tolerance.

use std::fmt::Debug;
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact arbitrary-precision rational.
pub type Q = BigRational;

/// Relative tolerance used when the scalar is `f64`.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

pub trait Scalar:
    Clone
    + Debug
    + PartialOrd
    + Num
    + Signed
    + Send
    + Sync
    + 'static
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// True when the mode is exact (residuals must vanish literally).
    const EXACT: bool;

    fn from_int(n: i64) -> Self;

    /// `n / d`; `d` must be nonzero.
    fn ratio(n: i64, d: i64) -> Self;

    /// Whether `self` is zero relative to `scale` (exactly zero in exact mode).
    fn is_negligible(&self, scale: &Self) -> bool;

    fn to_f64(&self) -> f64;

    /// Nearest value of this type to an exact rational.
    fn from_q(q: &Q) -> Self;

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out *= other;
        out
    }

    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += &a.mul_ref(b);
    }
}

impl Scalar for Q {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        Q::from_integer(BigInt::from(n))
    }

    fn ratio(n: i64, d: i64) -> Self {
        Q::new(BigInt::from(n), BigInt::from(d))
    }

    fn is_negligible(&self, _scale: &Self) -> bool {
        self.is_zero()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_q(q: &Q) -> Self {
        q.clone()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn ratio(n: i64, d: i64) -> Self {
        n as f64 / d as f64
    }

    fn is_negligible(&self, scale: &Self) -> bool {
        self.abs() <= FLOAT_TOLERANCE * scale.abs().max(1.0)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_q(q: &Q) -> Self {
        Scalar::to_f64(q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational")]
    Empty,
    #[error("invalid integer `{0}`")]
    InvalidInteger(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Parses `"p/q"` or `"p"` (optional leading sign on `p`, `q > 0` after reduction).
pub fn parse_rational(text: &str) -> Result<Q, ParseRationalError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num = parse_int(num)?;
    let den = match den {
        Some(d) => parse_int(d)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator);
    }
    Ok(Q::new(num, den))
}

fn parse_int(text: &str) -> Result<BigInt, ParseRationalError> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseRationalError::InvalidInteger(text.to_string()));
    }
    BigInt::from_str_radix(text.strip_prefix('+').unwrap_or(text), 10)
        .map_err(|_| ParseRationalError::InvalidInteger(text.to_string()))
}

/// Canonical `"p/q"` rendering; integers keep the `/1`.
pub fn format_rational(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}
