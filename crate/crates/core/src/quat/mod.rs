//! Real quaternions over an exact or floating coefficient field.

mod rational;
mod scalar;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use rational::Rational;
pub use scalar::{Scalar, ZeroTest, FLOAT_NONZERO, FLOAT_ZERO};

/// Unit test tolerance for float-tower gains: `|1 - |q|| < UNIT_TOL`.
pub const UNIT_TOL: f64 = 1e-12;

/// `x0 + x1 i + x2 j + x3 k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quaternion<S = Rational> {
    pub x0: S,
    pub x1: S,
    pub x2: S,
    pub x3: S,
}

pub type ExactQuaternion = Quaternion<Rational>;
pub type FloatQuaternion = Quaternion<f64>;

impl<S: Scalar> Quaternion<S> {
    pub fn new(x0: S, x1: S, x2: S, x3: S) -> Self {
        Quaternion { x0, x1, x2, x3 }
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64, x3: i64) -> Self {
        Quaternion::new(S::from_i64(x0), S::from_i64(x1), S::from_i64(x2), S::from_i64(x3))
    }

    pub fn real(x0: S) -> Self {
        Quaternion::new(x0, S::zero(), S::zero(), S::zero())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }
    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }
    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }
    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }
    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    /// `(-1)^e`.
    pub fn sign_power(e: usize) -> Self {
        Self::from_ints(if e % 2 == 0 { 1 } else { -1 }, 0, 0, 0)
    }

    pub fn coeffs(&self) -> [&S; 4] {
        [&self.x0, &self.x1, &self.x2, &self.x3]
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Quaternion<T> {
        Quaternion::new(f(&self.x0), f(&self.x1), f(&self.x2), f(&self.x3))
    }

    pub fn to_float(&self) -> Quaternion<f64> {
        self.map(|c| c.to_f64())
    }

    pub fn is_zero(&self) -> bool {
        self.x0.is_zero() && self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(
            self.x0.clone(),
            -self.x1.clone(),
            -self.x2.clone(),
            -self.x3.clone(),
        )
    }

    pub fn re(&self) -> S {
        self.x0.clone()
    }

    /// `x1 i + x2 j + x3 k`.
    pub fn im(&self) -> Self {
        Quaternion::new(S::zero(), self.x1.clone(), self.x2.clone(), self.x3.clone())
    }

    /// `|q|^2 = q * conj(q)`, a nonnegative scalar.
    pub fn norm_sq(&self) -> S {
        self.x0
            .mul_ref(&self.x0)
            .add_ref(&self.x1.mul_ref(&self.x1))
            .add_ref(&self.x2.mul_ref(&self.x2))
            .add_ref(&self.x3.mul_ref(&self.x3))
    }

    pub fn scale(&self, s: &S) -> Self {
        Quaternion::new(
            self.x0.mul_ref(s),
            self.x1.mul_ref(s),
            self.x2.mul_ref(s),
            self.x3.mul_ref(s),
        )
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(&n.recip()?))
    }

    /// Hamilton product `self * rhs`.
    pub fn mul_ref(&self, b: &Self) -> Self {
        let a = self;
        let m = |x: &S, y: &S| x.mul_ref(y);
        Quaternion {
            x0: m(&a.x0, &b.x0)
                .sub_ref(&m(&a.x1, &b.x1))
                .sub_ref(&m(&a.x2, &b.x2))
                .sub_ref(&m(&a.x3, &b.x3)),
            x1: m(&a.x0, &b.x1)
                .add_ref(&m(&a.x1, &b.x0))
                .add_ref(&m(&a.x2, &b.x3))
                .sub_ref(&m(&a.x3, &b.x2)),
            x2: m(&a.x0, &b.x2)
                .sub_ref(&m(&a.x1, &b.x3))
                .add_ref(&m(&a.x2, &b.x0))
                .add_ref(&m(&a.x3, &b.x1)),
            x3: m(&a.x0, &b.x3)
                .add_ref(&m(&a.x1, &b.x2))
                .sub_ref(&m(&a.x2, &b.x1))
                .add_ref(&m(&a.x3, &b.x0)),
        }
    }

    pub fn add_ref(&self, b: &Self) -> Self {
        Quaternion::new(
            self.x0.add_ref(&b.x0),
            self.x1.add_ref(&b.x1),
            self.x2.add_ref(&b.x2),
            self.x3.add_ref(&b.x3),
        )
    }

    pub fn sub_ref(&self, b: &Self) -> Self {
        Quaternion::new(
            self.x0.sub_ref(&b.x0),
            self.x1.sub_ref(&b.x1),
            self.x2.sub_ref(&b.x2),
            self.x3.sub_ref(&b.x3),
        )
    }

    /// Unit predicate: exact in the rational tower, `|1 - |q|| < 1e-12` for floats.
    pub fn is_unit(&self) -> bool {
        let n = self.norm_sq();
        if S::EXACT {
            n == S::one()
        } else {
            (1.0 - n.to_f64().sqrt()).abs() < UNIT_TOL
        }
    }

    /// Exact zero for rationals; within [`FLOAT_ZERO`] per coefficient for floats.
    pub fn approx_zero(&self) -> ZeroTest {
        let tests = self.coeffs().map(|c| c.zero_test());
        if tests.iter().all(|t| *t == ZeroTest::Zero) {
            ZeroTest::Zero
        } else if tests.iter().any(|t| *t == ZeroTest::NonZero) {
            ZeroTest::NonZero
        } else {
            ZeroTest::Ambiguous
        }
    }

    /// Equality, up to [`FLOAT_ZERO`] per coefficient in the float tower.
    pub fn same(&self, other: &Self) -> bool {
        if S::EXACT {
            self == other
        } else {
            self.sub_ref(other).coeffs().iter().all(|c| c.to_f64().abs() < FLOAT_ZERO)
        }
    }

    /// Whitespace-separated coefficient tokens `x0 x1 x2 x3`.
    pub fn to_tokens(&self) -> String {
        format!(
            "{} {} {} {}",
            self.x0.format_token(),
            self.x1.format_token(),
            self.x2.format_token(),
            self.x3.format_token()
        )
    }

    pub fn parse_tokens(toks: &[&str]) -> Result<Self> {
        if toks.len() != 4 {
            return Err(Error::Token(toks.join(" ")));
        }
        Ok(Quaternion::new(
            S::parse_token(toks[0])?,
            S::parse_token(toks[1])?,
            S::parse_token(toks[2])?,
            S::parse_token(toks[3])?,
        ))
    }
}

impl Quaternion<f64> {
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.scale(&(1.0 / n)))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let d = self.sub_ref(other);
        [d.x0, d.x1, d.x2, d.x3].iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }
}

impl<S: Scalar> Mul for Quaternion<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a, S: Scalar> Mul<&'a Quaternion<S>> for &'a Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, rhs: &Quaternion<S>) -> Quaternion<S> {
        self.mul_ref(rhs)
    }
}

impl<S: Scalar> Add for Quaternion<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<S: Scalar> Sub for Quaternion<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl<S: Scalar> Neg for Quaternion<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Quaternion::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

impl<S: Scalar> fmt::Display for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, unit) in self.coeffs().into_iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            let tok = c.format_token();
            let (neg, body) = match tok.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, tok),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if unit.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{unit}")?;
            } else {
                write!(f, "{body}{unit}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A unit quaternion: an element of the gain group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GainValue<S = Rational>(Quaternion<S>);

impl<S: Scalar> GainValue<S> {
    pub fn new(q: Quaternion<S>) -> Option<Self> {
        q.is_unit().then_some(GainValue(q))
    }

    pub fn one() -> Self {
        GainValue(Quaternion::one())
    }

    pub fn value(&self) -> &Quaternion<S> {
        &self.0
    }

    pub fn into_inner(self) -> Quaternion<S> {
        self.0
    }

    /// For a unit, the inverse is the conjugate.
    pub fn inverse(&self) -> Self {
        GainValue(self.0.conj())
    }
}

/// Named finite gain sets available for exact sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GainSet {
    /// `{±1, ±i, ±j, ±k}`.
    Lipschitz,
    /// The 24 Hurwitz units: Lipschitz units plus `(±1 ± i ± j ± k)/2`.
    Hurwitz,
    /// Rotation-invariant samples on the unit 3-sphere (float tower only).
    Uniform,
}

/// The eight Lipschitz units `{±1, ±i, ±j, ±k}`.
pub fn lipschitz_units<S: Scalar>() -> Vec<Quaternion<S>> {
    let mut out = Vec::with_capacity(8);
    for axis in 0..4 {
        for sign in [1, -1] {
            let mut c = [0i64; 4];
            c[axis] = sign;
            out.push(Quaternion::from_ints(c[0], c[1], c[2], c[3]));
        }
    }
    out
}

/// The 24 units of the Hurwitz order.
pub fn hurwitz_units<S: Scalar>() -> Vec<Quaternion<S>> {
    let mut out = lipschitz_units();
    let half = S::one() / S::from_i64(2);
    for mask in 0..16u32 {
        let c = |bit: u32| {
            if mask & (1 << bit) == 0 {
                half.clone()
            } else {
                -half.clone()
            }
        };
        out.push(Quaternion::new(c(0), c(1), c(2), c(3)));
    }
    out
}

/// Draws a unit from a finite set (`Lipschitz`/`Hurwitz`).
pub fn sample_from_set<S: Scalar, R: Rng + ?Sized>(set: &[Quaternion<S>], rng: &mut R) -> Quaternion<S> {
    set[rng.random_range(0..set.len())].clone()
}

/// Uniform unit quaternion: four independent standard normals, normalized.
pub fn sample_uniform_unit<R: Rng + ?Sized>(rng: &mut R) -> Quaternion<f64> {
    loop {
        let q = Quaternion::new(
            rng.sample::<f64, _>(StandardNormal),
            rng.sample::<f64, _>(StandardNormal),
            rng.sample::<f64, _>(StandardNormal),
            rng.sample::<f64, _>(StandardNormal),
        );
        if q.norm_sq() > 1e-24 {
            return q.normalized().expect("nonzero");
        }
    }
}
