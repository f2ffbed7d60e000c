//! Dense truncated Laurent series `Σ_{k=v}^{o-1} c_k x^k + O(x^o)`.
//!
//! The truncation order is part of the value: every operation propagates the
//! smallest order its inputs justify, so no coefficient is ever reported that
//! the inputs do not determine.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::scalar::{format_rational, Scalar};
use crate::Rational;

#[derive(Clone, Debug)]
pub struct TruncSeries<S> {
    valuation: i64,
    coeffs: Vec<S>,
    order: i64,
}

impl<S: Scalar> TruncSeries<S> {
    /// Series with coefficients starting at `valuation`, known up to `order`.
    ///
    /// `coeffs` is padded with zeros or cut to exactly `order - valuation`
    /// entries.
    pub fn new(valuation: i64, mut coeffs: Vec<S>, order: i64) -> Self {
        let len = (order - valuation).max(0) as usize;
        coeffs.resize(len, S::zero());
        TruncSeries {
            valuation: valuation.min(order),
            coeffs,
            order,
        }
    }

    /// Exact polynomial-like data: order is one past the last coefficient.
    pub fn from_coeffs(valuation: i64, coeffs: Vec<S>) -> Self {
        let order = valuation + coeffs.len() as i64;
        TruncSeries::new(valuation, coeffs, order)
    }

    pub fn from_fn(valuation: i64, order: i64, f: impl FnMut(i64) -> S) -> Self {
        let coeffs = (valuation..order).map(f).collect();
        TruncSeries::new(valuation, coeffs, order)
    }

    pub fn zero(order: i64) -> Self {
        TruncSeries::new(order, Vec::new(), order)
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(S::one(), 0, order)
    }

    /// `c·x^exp + O(x^order)`.
    pub fn monomial(c: S, exp: i64, order: i64) -> Self {
        if exp >= order {
            return Self::zero(order);
        }
        let mut coeffs = vec![S::zero(); (order - exp) as usize];
        coeffs[0] = c;
        TruncSeries::new(exp, coeffs, order)
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; `None` when `k` lies at or beyond the truncation.
    pub fn coeff(&self, k: i64) -> Option<S> {
        if k >= self.order {
            None
        } else if k < self.valuation {
            Some(S::zero())
        } else {
            Some(self.coeffs[(k - self.valuation) as usize].clone())
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &S)> {
        (self.valuation..).zip(self.coeffs.iter())
    }

    /// Nonzero terms only.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &S)> {
        self.iter().filter(|(_, c)| !c.is_zero())
    }

    /// First nonzero coefficient.
    pub fn leading(&self) -> Option<(i64, &S)> {
        self.terms().next()
    }

    /// True when every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Drop leading zero coefficients.
    pub fn normalized(mut self) -> Self {
        let skip = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..skip);
        self.valuation += skip as i64;
        self
    }

    /// Lower the truncation order (never raises it).
    pub fn truncate(mut self, order: i64) -> Self {
        if order < self.order {
            let keep = (order - self.valuation).max(0) as usize;
            self.coeffs.truncate(keep);
            self.order = order;
            self.valuation = self.valuation.min(order);
        }
        self
    }

    /// Rewrite with an explicit, lower valuation (pads with zeros).
    fn with_valuation(mut self, valuation: i64) -> Self {
        if valuation < self.valuation {
            let pad = (self.valuation - valuation) as usize;
            let mut coeffs = vec![S::zero(); pad];
            coeffs.append(&mut self.coeffs);
            self.coeffs = coeffs;
            self.valuation = valuation;
        }
        self
    }

    /// Multiply by `x^k`.
    pub fn shift(mut self, k: i64) -> Self {
        self.valuation += k;
        self.order += k;
        self
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TruncSeries<T> {
        TruncSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(f).collect(),
            order: self.order,
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn scale_q(&self, q: &Rational) -> Self {
        self.map(|a| a.scale(q))
    }

    fn combine(&self, rhs: &Self, f: impl Fn(S, S) -> S) -> Self {
        let valuation = self.valuation.min(rhs.valuation);
        let order = self.order.min(rhs.order);
        TruncSeries::from_fn(valuation, order, |k| {
            f(self.coeff(k).unwrap(), rhs.coeff(k).unwrap())
        })
    }

    pub fn add_series(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a + b)
    }

    pub fn sub_series(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a - b)
    }

    pub fn mul_series(&self, rhs: &Self) -> Self {
        let valuation = self.valuation + rhs.valuation;
        let order = (self.valuation + rhs.order).min(rhs.valuation + self.order);
        let len = (order - valuation).max(0) as usize;
        let mut out = vec![S::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        TruncSeries::new(valuation, out, order)
    }

    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            return Self::one(self.order - self.valuation);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.mul_series(self);
        }
        acc
    }

    /// Multiplicative inverse; the leading coefficient must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let b = self.clone().normalized();
        let (v, lead) = match b.leading() {
            Some((v, c)) => (v, c.clone()),
            None => {
                return Err(Error::NotInvertible(
                    "series is zero to its truncation order".into(),
                ))
            }
        };
        let lead_inv = lead.try_inv().ok_or_else(|| {
            Error::NotInvertible(format!("leading coefficient {lead:?} is not a unit"))
        })?;
        let rel = (b.order - v) as usize;
        let mut inv: Vec<S> = Vec::with_capacity(rel);
        for n in 0..rel {
            let mut acc = if n == 0 { S::one() } else { S::zero() };
            for k in 1..=n {
                let bk = &b.coeffs[k];
                if !bk.is_zero() {
                    acc = acc - bk.clone() * inv[n - k].clone();
                }
            }
            inv.push(acc * lead_inv.clone());
        }
        Ok(TruncSeries::new(-v, inv, -v + rel as i64))
    }

    pub fn div_series(&self, rhs: &Self) -> Result<Self> {
        let inv = rhs.inverse()?;
        Ok(self.mul_series(&inv))
    }

    /// `exp(a)` for `a` with valuation at least 1.
    pub fn exp(&self) -> Result<Self> {
        if self.order <= 0 {
            return Err(Error::arg("exp needs the constant coefficient to be known"));
        }
        if (self.valuation..=0).any(|k| !self.coeff(k).unwrap().is_zero()) {
            return Err(Error::arg("exp requires valuation >= 1"));
        }
        let order = self.order as usize;
        let a = self.clone().normalized().with_valuation(0);
        // n e_n = Σ_{k=1}^{n} k a_k e_{n-k}
        let mut e: Vec<S> = vec![S::one()];
        for n in 1..order {
            let mut acc = S::zero();
            for k in 1..=n {
                let ak = &a.coeffs[k];
                if !ak.is_zero() {
                    acc = acc + S::from_i64(k as i64) * ak.clone() * e[n - k].clone();
                }
            }
            e.push(acc.scale(&Rational::new(1.into(), (n as i64).into())));
        }
        Ok(TruncSeries::new(0, e, self.order))
    }

    /// `log(a)` for `a = 1 + O(x)`.
    pub fn log(&self) -> Result<Self> {
        let a = self.clone().normalized();
        match a.leading() {
            Some((0, c)) if *c == S::one() => {}
            _ => {
                return Err(Error::NotInvertible(
                    "log requires leading coefficient 1 at valuation 0".into(),
                ))
            }
        }
        let ratio = a.derivative().div_series(&a)?;
        ratio.antiderivative()
    }

    pub fn derivative(&self) -> Self {
        TruncSeries {
            valuation: self.valuation - 1,
            coeffs: self
                .iter()
                .map(|(k, c)| c.clone() * S::from_i64(k))
                .collect(),
            order: self.order - 1,
        }
    }

    /// Term-wise integral with zero constant; fails on a nonzero `x^{-1}` term.
    pub fn antiderivative(&self) -> Result<Self> {
        if let Some(c) = self.coeff(-1) {
            if !c.is_zero() {
                return Err(Error::arg("cannot integrate a nonzero x^-1 term"));
            }
        } else if self.order <= -1 {
            return Err(Error::arg(
                "x^-1 coefficient is beyond the truncation order",
            ));
        }
        let coeffs = self
            .iter()
            .map(|(k, c)| {
                if k == -1 {
                    S::zero()
                } else {
                    c.scale(&Rational::new(1.into(), (k + 1).into()))
                }
            })
            .collect();
        Ok(TruncSeries {
            valuation: self.valuation + 1,
            coeffs,
            order: self.order + 1,
        })
    }

    /// Substitute `x -> c·x`.
    pub fn rescale(&self, c: &S) -> Result<Self> {
        let inv =
            if self.valuation < 0 {
                Some(c.try_inv().ok_or_else(|| {
                    Error::NotInvertible("rescale factor for a Laurent tail".into())
                })?)
            } else {
                None
            };
        let coeffs = self
            .iter()
            .map(|(k, a)| {
                let p = if k >= 0 {
                    pow_s(c, k as u64)
                } else {
                    pow_s(inv.as_ref().unwrap(), (-k) as u64)
                };
                a.clone() * p
            })
            .collect();
        Ok(TruncSeries {
            valuation: self.valuation,
            coeffs,
            order: self.order,
        })
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> Self {
        self.map_indexed(|k, c| if k % 2 == 0 { c.clone() } else { -c.clone() })
    }

    fn map_indexed(&self, f: impl Fn(i64, &S) -> S) -> Self {
        TruncSeries {
            valuation: self.valuation,
            coeffs: self.iter().map(|(k, c)| f(k, c)).collect(),
            order: self.order,
        }
    }

    /// Parity of the series, if it has one.
    pub fn is_even(&self) -> bool {
        self.terms().all(|(k, _)| k % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms().all(|(k, _)| k % 2 != 0)
    }
}

fn pow_s<S: Scalar>(c: &S, n: u64) -> S {
    let mut acc = S::one();
    let mut base = c.clone();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base.clone();
        }
        base = base.clone() * base;
        n >>= 1;
    }
    acc
}

impl<S: Scalar> PartialEq for TruncSeries<S> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && (self.valuation.min(other.valuation)..self.order)
                .all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl<S: Scalar> Add for TruncSeries<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_series(&rhs)
    }
}

impl<S: Scalar> Sub for TruncSeries<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_series(&rhs)
    }
}

impl<S: Scalar> Mul for TruncSeries<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_series(&rhs)
    }
}

impl<'a, S: Scalar> Add for &'a TruncSeries<S> {
    type Output = TruncSeries<S>;
    fn add(self, rhs: Self) -> TruncSeries<S> {
        self.add_series(rhs)
    }
}

impl<'a, S: Scalar> Sub for &'a TruncSeries<S> {
    type Output = TruncSeries<S>;
    fn sub(self, rhs: Self) -> TruncSeries<S> {
        self.sub_series(rhs)
    }
}

impl<'a, S: Scalar> Mul for &'a TruncSeries<S> {
    type Output = TruncSeries<S>;
    fn mul(self, rhs: Self) -> TruncSeries<S> {
        self.mul_series(rhs)
    }
}

impl<S: Scalar> Neg for TruncSeries<S> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|c| -c.clone())
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for TruncSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(x^{})", self.order)
    }
}

/// The operations exposed through the `series` command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    Div,
    Exp,
    Log,
    Derivative,
    Antiderivative,
    Rescale,
}

/// Second operand of [`series_op`].
pub enum Operand<'a, S> {
    None,
    Series(&'a TruncSeries<S>),
    Scalar(&'a S),
}

/// Single entry point dispatching one series operation.
pub fn series_op<S: Scalar>(
    kind: SeriesOp,
    a: &TruncSeries<S>,
    b: Operand<'_, S>,
) -> Result<TruncSeries<S>> {
    use SeriesOp::*;
    match (kind, b) {
        (Add, Operand::Series(b)) => Ok(a.add_series(b)),
        (Mul, Operand::Series(b)) => Ok(a.mul_series(b)),
        (Mul, Operand::Scalar(c)) => Ok(a.scale(c)),
        (Div, Operand::Series(b)) => a.div_series(b),
        (Div, Operand::Scalar(c)) => {
            let inv = c
                .try_inv()
                .ok_or_else(|| Error::NotInvertible("division by a non-unit scalar".into()))?;
            Ok(a.scale(&inv))
        }
        (Exp, Operand::None) => a.exp(),
        (Log, Operand::None) => a.log(),
        (Derivative, Operand::None) => Ok(a.derivative()),
        (Antiderivative, Operand::None) => a.antiderivative(),
        (Rescale, Operand::Scalar(c)) => a.rescale(c),
        (k, _) => Err(Error::arg(format!("wrong operand kind for {k:?}"))),
    }
}

/// One serialized term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exponent: i64,
    pub coeff: String,
}

/// JSON shape of a rational series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub valuation: i64,
    pub order: i64,
    pub terms: Vec<TermRecord>,
}

impl TruncSeries<Rational> {
    pub fn to_record(&self) -> SeriesRecord {
        SeriesRecord {
            valuation: self.valuation,
            order: self.order,
            terms: self
                .terms()
                .map(|(k, c)| TermRecord {
                    exponent: k,
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn from_record(rec: &SeriesRecord) -> Result<Self> {
        let mut s = TruncSeries::zero(rec.order).with_valuation(rec.valuation.min(rec.order));
        for t in &rec.terms {
            if t.exponent < s.valuation || t.exponent >= s.order {
                return Err(Error::arg(format!(
                    "term x^{} outside [valuation, order)",
                    t.exponent
                )));
            }
            let c = crate::numeric::scalar::parse_rational(&t.coeff)
                .ok_or_else(|| Error::arg(format!("bad coefficient {:?}", t.coeff)))?;
            let idx = (t.exponent - s.valuation) as usize;
            s.coeffs[idx] = c;
        }
        Ok(s)
    }
}
