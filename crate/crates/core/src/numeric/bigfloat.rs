//! Binary floating point at a configurable precision, built on `BigInt`.
//!
//! A value is `mant · 2^exp` with `|mant| < 2^prec`. Every operation rounds
//! to nearest (ties to even) at the larger precision of its operands.
//! Transcendentals are evaluated with guard bits and then rounded, which
//! keeps them within a few ulps of the true value.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numeric::scalar::Real;
use crate::Rational;

pub const DEFAULT_PRECISION: u32 = 256;
const GUARD: u32 = 40;

#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn bits(n: &BigInt) -> i64 {
    n.bits() as i64
}

/// Shift right by `s` bits rounding to nearest, ties to even.
fn shr_round(n: &BigInt, s: u64) -> BigInt {
    if s == 0 {
        return n.clone();
    }
    let (sign, mag) = (n.sign(), n.abs());
    let q: BigInt = &mag >> s;
    let rem = &mag - (&q << s);
    let half = BigInt::one() << (s - 1);
    let q = match rem.cmp(&half) {
        Ordering::Greater => q + 1,
        Ordering::Equal if q.is_odd() => q + 1,
        _ => q,
    };
    if sign == Sign::Minus {
        -q
    } else {
        q
    }
}

impl BigFloat {
    fn normalize(mant: BigInt, exp: i64, prec: u32) -> Self {
        if mant.is_zero() {
            return BigFloat::zero(prec);
        }
        let excess = bits(&mant) - prec as i64;
        let (mut mant, mut exp) = if excess > 0 {
            (shr_round(&mant, excess as u64), exp + excess)
        } else {
            (mant << (-excess) as usize, exp + excess)
        };
        // rounding may carry into one extra bit
        if bits(&mant) > prec as i64 {
            mant >>= 1;
            exp += 1;
        }
        BigFloat { mant, exp, prec }
    }

    pub fn zero(prec: u32) -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn from_int(n: impl Into<BigInt>, prec: u32) -> Self {
        Self::normalize(n.into(), 0, prec)
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        if q.is_zero() {
            return Self::zero(prec);
        }
        let (n, d) = (q.numer(), q.denom());
        let shift = prec as i64 + 2 + bits(d) - bits(n);
        let (scaled, d) = if shift >= 0 {
            (n << shift as usize, d.clone())
        } else {
            (n.clone(), d << (-shift) as usize)
        };
        let (quot, rem) = scaled.div_rem(&d);
        // sticky bit so that exact ties are distinguished from near-ties
        let quot = (quot << 1)
            + if rem.is_zero() {
                BigInt::zero()
            } else {
                rem.signum()
            };
        Self::normalize(quot, -shift - 1, prec)
    }

    pub fn from_f64(x: f64, prec: u32) -> Self {
        match Rational::from_float(x) {
            Some(q) => Self::from_rational(&q, prec),
            None => Self::zero(prec),
        }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Same value rounded to another precision.
    pub fn with_precision(&self, prec: u32) -> Self {
        Self::normalize(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    /// Exponent `e` with `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn magnitude_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + bits(&self.mant))
        }
    }

    /// Exact value as a rational.
    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << self.exp as usize)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let top = shr_round(&self.mant, (bits(&self.mant) - 60).max(0) as u64);
        let e = self.exp + (bits(&self.mant) - 60).max(0);
        let m = top.to_f64().unwrap_or(0.0);
        m * 2f64.powi(e.clamp(-2000, 2000) as i32)
    }

    /// Multiply by `2^k` exactly.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat {
            mant: self.mant.clone(),
            exp: self.exp + k,
            prec: self.prec,
        }
    }

    fn add_impl(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let prec = self.prec.max(rhs.prec);
        let rmant = if negate_rhs {
            -&rhs.mant
        } else {
            rhs.mant.clone()
        };
        if rhs.is_zero() {
            return self.with_precision(prec);
        }
        if self.is_zero() {
            return Self::normalize(rmant, rhs.exp, prec);
        }
        let (a_top, b_top) = (self.exp + bits(&self.mant), rhs.exp + bits(&rmant));
        // one operand far below the other's last bit only matters as a sticky bit
        if a_top - b_top > prec as i64 + 4 {
            let m = (&self.mant << 3usize) + rmant.signum();
            return Self::normalize(m, self.exp - 3, prec);
        }
        if b_top - a_top > prec as i64 + 4 {
            let m = (&rmant << 3usize) + self.mant.signum();
            return Self::normalize(m, rhs.exp - 3, prec);
        }
        let e = self.exp.min(rhs.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = rmant << (rhs.exp - e) as usize;
        Self::normalize(a + b, e, prec)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        Self::normalize(
            &self.mant * &rhs.mant,
            self.exp + rhs.exp,
            self.prec.max(rhs.prec),
        )
    }

    fn div_impl(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "BigFloat division by zero");
        let prec = self.prec.max(rhs.prec);
        if self.is_zero() {
            return Self::zero(prec);
        }
        let shift = prec as i64 + 3 + bits(&rhs.mant) - bits(&self.mant);
        let shift = shift.max(0);
        let num = &self.mant << shift as usize;
        let (q, r) = num.div_rem(&rhs.mant);
        let q = (q << 1)
            + if r.is_zero() {
                BigInt::zero()
            } else {
                BigInt::from(r.signum() * rhs.mant.signum())
            };
        Self::normalize(q, self.exp - rhs.exp - shift - 1, prec)
    }

    pub fn recip(&self) -> Self {
        Self::from_int(1, self.prec).div_impl(self)
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative BigFloat");
        if self.is_zero() {
            return self.clone();
        }
        let prec = self.prec;
        // mantissa with 2·prec+4 bits and an even exponent
        let mut shift = 2 * prec as i64 + 4 - bits(&self.mant);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let m = &self.mant << shift.max(0) as usize;
        let m = if shift < 0 {
            &self.mant >> (-shift) as usize
        } else {
            m
        };
        let root = m.sqrt();
        let sticky = if &root * &root == m { 0 } else { 1 };
        Self::normalize((root << 1) + sticky, (self.exp - shift) / 2 - 1, prec)
    }

    pub fn powi(&self, n: i64) -> Self {
        let mut base = self.with_precision(self.prec + GUARD);
        let mut acc = BigFloat::from_int(1, self.prec + GUARD);
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        if n < 0 {
            acc = acc.recip();
        }
        acc.with_precision(self.prec)
    }

    /// π at the given precision (cached).
    pub fn pi(prec: u32) -> Self {
        cached("pi", prec, || {
            let w = prec + GUARD;
            // Machin: π = 16 atan(1/5) - 4 atan(1/239)
            let a = atan_inv(5, w).mul_pow2(4);
            let b = atan_inv(239, w).mul_pow2(2);
            (&a - &b).with_precision(prec)
        })
    }

    pub fn ln2(prec: u32) -> Self {
        cached("ln2", prec, || {
            let w = prec + GUARD;
            let third = BigFloat::from_rational(&Rational::new(1.into(), 3.into()), w);
            atanh_series(&third).mul_pow2(1).with_precision(prec)
        })
    }

    /// ζ(3) via `(5/2) Σ (-1)^{k+1} / (k³ C(2k,k))`.
    pub fn zeta3(prec: u32) -> Self {
        cached("zeta3", prec, || {
            let w = prec + GUARD;
            let mut sum = BigFloat::zero(w);
            let mut binom = BigInt::one();
            let mut k: u64 = 1;
            loop {
                binom = binom * (4 * k - 2) / k; // C(2k,k) from C(2k-2,k-1)
                let denom = BigInt::from(k).pow(3) * &binom;
                let term = BigFloat::from_rational(&Rational::new(BigInt::one(), denom), w);
                if term.magnitude_exp().unwrap() < -(w as i64) - 4 {
                    break;
                }
                sum = if k % 2 == 1 {
                    &sum + &term
                } else {
                    &sum - &term
                };
                k += 1;
            }
            (&sum * &BigFloat::from_rational(&Rational::new(5.into(), 2.into()), w))
                .with_precision(prec)
        })
    }

    /// Natural logarithm of a positive value.
    pub fn ln(&self) -> Self {
        assert!(self.signum() > 0, "logarithm of a non-positive BigFloat");
        let prec = self.prec;
        let w = prec + GUARD;
        let x = self.with_precision(w);
        // x = m·2^k with m in [2/3, 4/3)
        let mut k = x.magnitude_exp().unwrap();
        let mut m = x.mul_pow2(-k);
        let four_thirds = BigFloat::from_rational(&Rational::new(4.into(), 3.into()), w);
        let two_thirds = BigFloat::from_rational(&Rational::new(2.into(), 3.into()), w);
        while m >= four_thirds {
            m = m.mul_pow2(-1);
            k += 1;
        }
        while m < two_thirds {
            m = m.mul_pow2(1);
            k -= 1;
        }
        let one = BigFloat::from_int(1, w);
        let z = &(&m - &one) / &(&m + &one);
        let ln_m = atanh_series(&z).mul_pow2(1);
        let res = &ln_m + &(&BigFloat::ln2(w) * &BigFloat::from_int(k, w));
        res.with_precision(prec)
    }

    pub fn exp(&self) -> Self {
        let prec = self.prec;
        let w = prec + GUARD + 16;
        let x = self.with_precision(w);
        let ln2 = BigFloat::ln2(w);
        let n = (&x / &ln2).round_to_int();
        let r = &x - &(&ln2 * &BigFloat::from_int(n.clone(), w));
        let halvings = 12;
        let r = r.mul_pow2(-halvings);
        let mut sum = BigFloat::from_int(1, w);
        let mut term = BigFloat::from_int(1, w);
        let mut k = 1i64;
        loop {
            term = &(&term * &r) / &BigFloat::from_int(k, w);
            if term.is_zero() || term.magnitude_exp().unwrap() < -(w as i64) - 2 {
                break;
            }
            sum = &sum + &term;
            k += 1;
        }
        for _ in 0..halvings {
            sum = &sum * &sum;
        }
        let n = n.to_i64().expect("exponent overflow in exp");
        sum.mul_pow2(n).with_precision(prec)
    }

    pub fn sin(&self) -> Self {
        let prec = self.prec;
        let w = prec + GUARD;
        let x = self.with_precision(w);
        let two_pi = BigFloat::pi(w).mul_pow2(1);
        let n = (&x / &two_pi).round_to_int();
        let r = &x - &(&two_pi * &BigFloat::from_int(n, w));
        let r2 = &r * &r;
        let mut sum = r.clone();
        let mut term = r;
        let mut k = 1i64;
        loop {
            term = -(&(&term * &r2) / &BigFloat::from_int((2 * k) * (2 * k + 1), w));
            if term.is_zero() || term.magnitude_exp().unwrap() < -(w as i64) - 2 {
                break;
            }
            sum = &sum + &term;
            k += 1;
        }
        sum.with_precision(prec)
    }

    /// `x^y` for positive `x`.
    pub fn pow(&self, y: &Self) -> Self {
        let w = self.prec.max(y.prec) + GUARD;
        (&self.with_precision(w).ln() * &y.with_precision(w))
            .exp()
            .with_precision(self.prec.max(y.prec))
    }

    /// Nearest integer (ties away from zero).
    pub fn round_to_int(&self) -> BigInt {
        if self.exp >= 0 {
            return &self.mant << self.exp as usize;
        }
        let s = (-self.exp) as u64;
        let mag = self.mant.abs();
        let q: BigInt = (&mag + (BigInt::one() << (s - 1))) >> s;
        if self.mant.is_negative() {
            -q
        } else {
            q
        }
    }

    /// Decimal rendering with `digits` significant digits, correctly rounded.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let q = self.to_rational().abs();
        let mut e10 =
            ((self.magnitude_exp().unwrap() - 1) as f64 * std::f64::consts::LOG10_2).floor() as i64;
        let lower = BigInt::from(10).pow(digits as u32 - 1);
        let upper = BigInt::from(10).pow(digits as u32);
        let int_digits = loop {
            let shift = digits as i64 - 1 - e10;
            let scaled = if shift >= 0 {
                &q * Rational::from_integer(BigInt::from(10).pow(shift as u32))
            } else {
                &q / Rational::from_integer(BigInt::from(10).pow((-shift) as u32))
            };
            let r = scaled.round().to_integer();
            if r >= upper {
                e10 += 1;
            } else if r < lower {
                e10 -= 1;
            } else {
                break r;
            }
        };
        let s = int_digits.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        if (-6..21).contains(&e10) {
            if e10 < 0 {
                format!("{sign}0.{}{}", "0".repeat((-e10 - 1) as usize), s)
            } else {
                let point = (e10 + 1) as usize;
                if point >= s.len() {
                    format!("{sign}{}{}", s, "0".repeat(point - s.len()))
                } else {
                    format!("{sign}{}.{}", &s[..point], &s[point..])
                }
            }
        } else {
            format!("{sign}{}.{}e{}", &s[..1], &s[1..], e10)
        }
    }

    /// Relative difference `|a - b| / |b|` as `f64`.
    pub fn rel_diff(&self, other: &Self) -> f64 {
        let d = (self - other).abs();
        if other.is_zero() {
            return d.to_f64();
        }
        (&d / &other.abs()).to_f64()
    }

    /// Number of matching significant decimal digits (`-log10` of the relative difference).
    pub fn matching_digits(&self, other: &Self) -> f64 {
        let r = self.rel_diff(other);
        if r == 0.0 {
            f64::INFINITY
        } else {
            -r.log10()
        }
    }
}

/// `atanh(z) = Σ z^{2k+1}/(2k+1)` for small `|z|`.
fn atanh_series(z: &BigFloat) -> BigFloat {
    let w = z.prec;
    let z2 = z * z;
    let mut power = z.clone();
    let mut sum = z.clone();
    let mut k = 1i64;
    loop {
        power = &power * &z2;
        let term = &power / &BigFloat::from_int(2 * k + 1, w);
        if term.is_zero() || term.magnitude_exp().unwrap() < -(w as i64) - 2 {
            break;
        }
        sum = &sum + &term;
        k += 1;
    }
    sum
}

/// `atan(1/n)`.
fn atan_inv(n: i64, w: u32) -> BigFloat {
    let x = BigFloat::from_rational(&Rational::new(1.into(), n.into()), w);
    let x2 = &x * &x;
    let mut power = x.clone();
    let mut sum = x;
    let mut k = 1i64;
    loop {
        power = &power * &x2;
        let term = &power / &BigFloat::from_int(2 * k + 1, w);
        if term.is_zero() || term.magnitude_exp().unwrap() < -(w as i64) - 2 {
            break;
        }
        sum = if k % 2 == 1 {
            &sum - &term
        } else {
            &sum + &term
        };
        k += 1;
    }
    sum
}

fn cached(name: &'static str, prec: u32, f: impl FnOnce() -> BigFloat) -> BigFloat {
    static CACHE: OnceLock<Mutex<HashMap<(&'static str, u32), BigFloat>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get(&(name, prec))
    {
        return v.clone();
    }
    let v = f();
    cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert((name, prec), v.clone());
    v
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl BigFloat {
    fn cmp_value(&self, other: &Self) -> Ordering {
        let d = self.add_impl(other, true);
        d.signum().cmp(&0)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a BigFloat> for &'a BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &'a BigFloat) -> BigFloat {
                let f: fn(&BigFloat, &BigFloat) -> BigFloat = $body;
                f(self, rhs)
            }
        }
        impl $tr for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                let f: fn(&BigFloat, &BigFloat) -> BigFloat = $body;
                f(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
forward_binop!(Div, div, |a, b| a.div_impl(b));

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat {
            mant: -self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }
}

impl<'a> Neg for &'a BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -(self.clone())
    }
}

impl Real for BigFloat {
    fn lift(&self, q: &Rational) -> Self {
        BigFloat::from_rational(q, self.prec)
    }

    fn magnitude(&self) -> Self {
        self.abs()
    }

    fn to_f64(&self) -> f64 {
        BigFloat::to_f64(self)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // ~ prec·log10(2) digits, minus a couple for the last-ulp slack
        let digits = ((self.prec as f64) * std::f64::consts::LOG10_2).floor() as usize;
        write!(f, "{}", self.to_decimal(digits.saturating_sub(2).max(1)))
    }
}
