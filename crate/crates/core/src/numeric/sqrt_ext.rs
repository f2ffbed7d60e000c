//! Quadratic fields `ℚ(√D)` with exact arithmetic.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::numeric::scalar::{format_rational, int, Scalar};
use crate::Rational;

/// `rational + radical·√D`; `D` must be a positive non-square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtExt<const D: i64> {
    pub rational: Rational,
    pub radical: Rational,
}

impl<const D: i64> SqrtExt<D> {
    pub fn new(rational: Rational, radical: Rational) -> Self {
        SqrtExt { rational, radical }
    }

    pub fn rational(q: Rational) -> Self {
        SqrtExt::new(q, Rational::zero())
    }

    /// `q·√D`.
    pub fn surd(q: Rational) -> Self {
        SqrtExt::new(Rational::zero(), q)
    }

    pub fn sqrt_d() -> Self {
        Self::surd(int(1))
    }

    pub fn is_rational(&self) -> bool {
        self.radical.is_zero()
    }

    pub fn is_pure_surd(&self) -> bool {
        self.rational.is_zero()
    }

    /// Field norm `a² - D b²`.
    pub fn norm(&self) -> Rational {
        &self.rational * &self.rational - int(D) * &self.radical * &self.radical
    }

    pub fn conjugate(&self) -> Self {
        SqrtExt::new(self.rational.clone(), -self.radical.clone())
    }

    /// Square root of a rational inside `ℚ(√D)`, if one exists.
    pub fn sqrt_of_rational(q: &Rational) -> Option<Self> {
        if q.is_negative() {
            return None;
        }
        if let Some(r) = rational_sqrt(q) {
            return Some(Self::rational(r));
        }
        rational_sqrt(&(q / int(D))).map(Self::surd)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc * self.clone())
    }
}

/// Exact square root of a non-negative rational, when it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

impl<const D: i64> Zero for SqrtExt<D> {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }
}

impl<const D: i64> One for SqrtExt<D> {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl<const D: i64> Add for SqrtExt<D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        SqrtExt::new(self.rational + rhs.rational, self.radical + rhs.radical)
    }
}

impl<const D: i64> Sub for SqrtExt<D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        SqrtExt::new(self.rational - rhs.rational, self.radical - rhs.radical)
    }
}

impl<const D: i64> Mul for SqrtExt<D> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let a = &self.rational * &rhs.rational + int(D) * &self.radical * &rhs.radical;
        let b = &self.rational * &rhs.radical + &self.radical * &rhs.rational;
        SqrtExt::new(a, b)
    }
}

impl<const D: i64> Div for SqrtExt<D> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.try_inv().expect("division by zero in quadratic field")
    }
}

impl<const D: i64> Neg for SqrtExt<D> {
    type Output = Self;
    fn neg(self) -> Self {
        SqrtExt::new(-self.rational, -self.radical)
    }
}

impl<const D: i64> Scalar for SqrtExt<D> {
    fn from_rational(q: &Rational) -> Self {
        Self::rational(q.clone())
    }

    fn try_inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            None
        } else {
            Some(SqrtExt::new(&self.rational / &n, -&self.radical / &n))
        }
    }

    fn scale(&self, q: &Rational) -> Self {
        SqrtExt::new(&self.rational * q, &self.radical * q)
    }
}

impl<const D: i64> fmt::Display for SqrtExt<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.radical.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.rational)),
            (true, false) => write!(f, "{}*sqrt({D})", format_rational(&self.radical)),
            (false, false) => write!(
                f,
                "{} + {}*sqrt({D})",
                format_rational(&self.rational),
                format_rational(&self.radical)
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::scalar::rat;

    type Q3 = SqrtExt<3>;

    #[test]
    fn radical_squares_reduce() {
        let s = Q3::sqrt_d();
        assert_eq!(s.clone() * s, Q3::rational(int(3)));
        let s6 = SqrtExt::<6>::sqrt_d();
        assert_eq!(s6.clone() * s6, SqrtExt::<6>::rational(int(6)));
    }

    #[test]
    fn inverse_and_sqrt() {
        let x = Q3::new(rat(1, 2), rat(-2, 3));
        assert_eq!(x.clone() * x.try_inv().unwrap(), Q3::one());
        assert_eq!(
            Q3::sqrt_of_rational(&rat(192, 25)),
            Some(Q3::surd(rat(8, 5)))
        );
        assert_eq!(
            Q3::sqrt_of_rational(&rat(9, 4)),
            Some(Q3::rational(rat(3, 2)))
        );
        assert_eq!(Q3::sqrt_of_rational(&int(2)), None);
        assert!(Q3::zero().try_inv().is_none());
    }
}
