//! Scalar abstractions shared by the series engines and the numeric layer.
//!
//! Exact code is written against [`Scalar`] (a commutative ring with a
//! partial inverse), numeric code against [`Real`] (an ordered field that can
//! absorb exact rationals at its own precision).

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::Rational;

/// Coefficient ring for exact truncated series.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn from_rational(q: &Rational) -> Self;

    /// Multiplicative inverse, if this element is a unit.
    fn try_inv(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn scale(&self, q: &Rational) -> Self {
        self.clone() * Self::from_rational(q)
    }
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
}

/// Ordered real field used by the asymptotic layer (`f32`, `f64`, [`BigFloat`]).
///
/// `lift` builds a constant at the precision of `self`, so generic code never
/// has to know how precision is carried.
///
/// [`BigFloat`]: crate::BigFloat
pub trait Real:
    Clone
    + Debug
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn lift(&self, q: &Rational) -> Self;
    fn magnitude(&self) -> Self;
    fn to_f64(&self) -> f64;
}

impl<T> Real for T
where
    T: num_traits::Float + FromPrimitive + Debug,
{
    fn lift(&self, q: &Rational) -> Self {
        T::from_f64(rational_to_f64(q)).unwrap_or_else(T::nan)
    }

    fn magnitude(&self) -> Self {
        self.abs()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Nearest `f64` to a big rational (saturating to infinities).
pub fn rational_to_f64(q: &Rational) -> f64 {
    if let Some(x) = q.to_f64() {
        if x.is_finite() && (x != 0.0 || q.is_zero()) {
            return x;
        }
    }
    // Fall back on exponent arithmetic for numerators/denominators beyond f64.
    let (n, d) = (q.numer(), q.denom());
    let shift = n.bits() as i64 - d.bits() as i64 - 60;
    let scaled = if shift >= 0 {
        Rational::new(n.clone(), d.clone() << shift as usize)
    } else {
        Rational::new(n.clone() << (-shift) as usize, d.clone())
    };
    let base = scaled.to_f64().unwrap_or(0.0);
    let r = base * 2f64.powi(shift.clamp(i32::MIN as i64, i32::MAX as i64) as i32);
    if r == 0.0 && !q.is_zero() && shift > 0 {
        f64::INFINITY.copysign(if q.is_negative() { -1.0 } else { 1.0 })
    } else {
        r
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Exact `n!` as a rational.
pub fn factorial_q(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

/// Exact rational power with integer exponent (negative allowed for nonzero base).
pub fn pow_q(base: &Rational, exp: i64) -> Rational {
    let mut r = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        r = r.recip();
    }
    r
}

/// Render as `"p/q"`; integers keep the explicit `/1`.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parse `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Serde adapter that writes rationals as `"p/q"` strings.
pub mod serde_rational {
    use super::{format_rational, parse_rational};
    use crate::Rational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(5)), "5/1");
        assert_eq!(parse_rational(" -3/2 "), Some(rat(-3, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn huge_rationals_to_f64() {
        let big = Rational::from_integer(BigInt::from(10).pow(400));
        let q = rat(3, 1) / &big;
        let x = rational_to_f64(&(q.clone() * &big / int(3)));
        assert_eq!(x, 1.0);
        assert_eq!(rational_to_f64(&q), 0.0);
        let tiny_ratio = Rational::new(BigInt::from(10).pow(350), BigInt::from(10).pow(349));
        assert!((rational_to_f64(&tiny_ratio) - 10.0).abs() < 1e-12);
    }

    #[test]
    fn real_lift_f64() {
        let x = 2.0f64;
        assert_eq!(x.lift(&rat(1, 4)), 0.25);
        assert_eq!((-x).magnitude(), 2.0);
    }
}
