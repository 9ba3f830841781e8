use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Magnitudes below this count as zero in the float tower.
pub const FLOAT_ZERO: f64 = 1e-9;
/// Magnitudes above this count as nonzero without ambiguity.
pub const FLOAT_NONZERO: f64 = 1e-6;

/// Outcome of a zero test. Exact scalars never return `Ambiguous`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroTest {
    Zero,
    NonZero,
    /// Float value between [`FLOAT_ZERO`] and [`FLOAT_NONZERO`].
    Ambiguous,
}

/// Coefficient field for quaternions: exact rationals or `f64`.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn to_f64(&self) -> f64;
    /// Exact binary value for rationals; identity for floats. Panics on non-finite input.
    fn from_f64(v: f64) -> Self;

    /// Exact: `== 0`. Float: `== 0.0`; use [`Scalar::zero_test`] for tolerant checks.
    fn is_zero(&self) -> bool;

    fn recip(&self) -> Result<Self>;

    /// Machine-word `(num, den)` when the value is an exact small rational.
    fn as_ratio(&self) -> Option<(i64, i64)> {
        None
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn zero_test(&self) -> ZeroTest {
        if Self::EXACT {
            if self.is_zero() {
                ZeroTest::Zero
            } else {
                ZeroTest::NonZero
            }
        } else {
            let m = self.to_f64().abs();
            if m < FLOAT_ZERO {
                ZeroTest::Zero
            } else if m > FLOAT_NONZERO {
                ZeroTest::NonZero
            } else {
                ZeroTest::Ambiguous
            }
        }
    }

    /// Parses a coefficient token (`p`, `p/q`; floats also accept decimals).
    fn parse_token(tok: &str) -> Result<Self>;

    fn format_token(&self) -> String {
        self.to_string()
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn from_i64(v: i64) -> Self {
        Rational::integer(v)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
    fn from_f64(v: f64) -> Self {
        Rational::from_f64(v)
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn recip(&self) -> Result<Self> {
        Rational::recip(self)
    }
    fn as_ratio(&self) -> Option<(i64, i64)> {
        match self {
            Rational::Small { num, den } => Some((*num, *den)),
            Rational::Big(_) => None,
        }
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn parse_token(tok: &str) -> Result<Self> {
        tok.parse()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn from_f64(v: f64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn recip(&self) -> Result<Self> {
        if *self == 0.0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(1.0 / *self)
        }
    }
    fn parse_token(tok: &str) -> Result<Self> {
        if let Ok(r) = tok.parse::<Rational>() {
            return Ok(r.to_f64());
        }
        let v: f64 = tok.parse().map_err(|_| Error::Token(tok.to_string()))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Token(tok.to_string()))
        }
    }
}
