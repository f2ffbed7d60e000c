//! The constant ring: finite ℚ-linear combinations of monomials in a fixed
//! family of transcendental and algebraic symbols.
//!
//! A monomial is a product of
//! - a radical `∏ p^(e_p/4)` over primes with `e_p ∈ {1,2,3}` (covers √6, √3, 3^(1/4)),
//! - `π^(h/2)` for an integer `h`,
//! - `ζ(3)^k`, `log(p)^k` for primes `p`,
//! - `Γ(a/b)Γ(1−a/b)` written `reflgamma(a/b)`,
//! - opaque named symbols (formal placeholders such as `log(-tau)`).
//!
//! All symbol exponents other than the radical may be negative, so single-term
//! elements are units. `log m` for composite `m` expands into prime logs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::bigfloat::BigFloat;
use crate::numeric::scalar::{format_rational, parse_rational, Scalar};
use crate::numeric::sqrt_ext::SqrtExt;
use crate::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    radical: BTreeMap<u64, u8>,
    pi_halves: i32,
    zeta3: i32,
    logs: BTreeMap<u64, i32>,
    reflgamma: BTreeMap<(i64, i64), i32>,
    opaque: BTreeMap<String, i32>,
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn bump<K: Ord>(map: &mut BTreeMap<K, i32>, k: K, by: i32) {
    let e = map.entry(k).or_insert(0);
    *e += by;
    map.retain(|_, v| *v != 0);
}

impl Monomial {
    pub fn is_one(&self) -> bool {
        *self == Monomial::default()
    }

    /// Product of two monomials and the rational factor split off by radical reduction.
    fn mul(&self, other: &Self) -> (Monomial, Rational) {
        let mut m = self.clone();
        let mut factor = Rational::one();
        for (&p, &e) in &other.radical {
            let total = m.radical.get(&p).copied().unwrap_or(0) + e;
            if total >= 4 {
                factor *= Rational::from_integer(BigInt::from(p));
            }
            let r = total % 4;
            if r == 0 {
                m.radical.remove(&p);
            } else {
                m.radical.insert(p, r);
            }
        }
        m.pi_halves += other.pi_halves;
        m.zeta3 += other.zeta3;
        for (&p, &e) in &other.logs {
            bump(&mut m.logs, p, e);
        }
        for (&k, &e) in &other.reflgamma {
            bump(&mut m.reflgamma, k, e);
        }
        for (k, &e) in &other.opaque {
            bump(&mut m.opaque, k.clone(), e);
        }
        (m, factor)
    }

    /// Inverse monomial and the rational factor it carries.
    fn inverse(&self) -> (Monomial, Rational) {
        let mut m = Monomial {
            pi_halves: -self.pi_halves,
            zeta3: -self.zeta3,
            ..Default::default()
        };
        let mut factor = Rational::one();
        for (&p, &e) in &self.radical {
            // p^(-e/4) = p^((4-e)/4) / p
            m.radical.insert(p, 4 - e);
            factor /= Rational::from_integer(BigInt::from(p));
        }
        m.logs = self.logs.iter().map(|(k, v)| (*k, -v)).collect();
        m.reflgamma = self.reflgamma.iter().map(|(k, v)| (*k, -v)).collect();
        m.opaque = self.opaque.iter().map(|(k, v)| (k.clone(), -v)).collect();
        (m, factor)
    }

    fn radical_string(&self) -> Option<String> {
        if self.radical.is_empty() {
            return None;
        }
        if self.radical.values().all(|e| e % 2 == 0) {
            let m: u64 = self.radical.keys().product();
            Some(format!("sqrt({m})"))
        } else {
            let k: u64 = self.radical.iter().map(|(p, e)| p.pow(*e as u32)).product();
            Some(format!("root4({k})"))
        }
    }

    fn parse(s: &str) -> Result<Self> {
        let bad = || Error::arg(format!("bad monomial {s:?}"));
        let mut m = Monomial::default();
        if s.trim() == "1" {
            return Ok(m);
        }
        for factor in s.split('*').map(str::trim) {
            let (base, exp) = match factor.rsplit_once(")^") {
                Some((b, e)) => (format!("{b})"), e),
                None => match factor.split_once('^') {
                    Some((b, e)) if !b.contains('(') => (b.to_string(), e),
                    _ => (factor.to_string(), "1"),
                },
            };
            let exp_q =
                parse_rational(exp.trim_matches(|c| c == '(' || c == ')')).ok_or_else(bad)?;
            let int_exp = || -> Result<i32> {
                if exp_q.is_integer() {
                    exp_q.to_integer().to_i32().ok_or_else(bad)
                } else {
                    Err(bad())
                }
            };
            let arg =
                |prefix: &str| -> Option<&str> { base.strip_prefix(prefix)?.strip_suffix(')') };
            if let Some(a) = arg("sqrt(") {
                let n: u64 = a.parse().map_err(|_| bad())?;
                let (r, f) = m.mul(&ConstElem::radical_monomial(n, 2)?.0);
                if !f.is_one() || !int_exp()?.is_one() {
                    return Err(bad());
                }
                m = r;
            } else if let Some(a) = arg("root4(") {
                let n: u64 = a.parse().map_err(|_| bad())?;
                let (r, f) = m.mul(&ConstElem::radical_monomial(n, 1)?.0);
                if !f.is_one() || !int_exp()?.is_one() {
                    return Err(bad());
                }
                m = r;
            } else if base == "pi" {
                let h = &exp_q * Rational::from_integer(2.into());
                if !h.is_integer() {
                    return Err(bad());
                }
                m.pi_halves += h.to_integer().to_i32().ok_or_else(bad)?;
            } else if base == "zeta3" {
                m.zeta3 += int_exp()?;
            } else if let Some(a) = arg("log(") {
                let p: u64 = a.parse().map_err(|_| bad())?;
                if factorize(p).len() != 1 || factorize(p)[0].1 != 1 {
                    return Err(bad());
                }
                bump(&mut m.logs, p, int_exp()?);
            } else if let Some(a) = arg("reflgamma(") {
                let q = parse_rational(a).ok_or_else(bad)?;
                let key = (
                    q.numer().to_i64().ok_or_else(bad)?,
                    q.denom().to_i64().ok_or_else(bad)?,
                );
                bump(&mut m.reflgamma, key, int_exp()?);
            } else if let Some(name) = arg("sym(") {
                bump(&mut m.opaque, name.to_string(), int_exp()?);
            } else {
                return Err(Error::Unsupported(format!("unknown symbol {base:?}")));
            }
        }
        Ok(m)
    }

    fn eval(&self, prec: u32) -> Result<BigFloat> {
        if let Some(name) = self.opaque.keys().next() {
            return Err(Error::Unsupported(format!(
                "symbol {name:?} has no numeric value"
            )));
        }
        let mut acc = BigFloat::from_int(1, prec);
        if !self.radical.is_empty() {
            let k: BigInt = self
                .radical
                .iter()
                .map(|(p, e)| BigInt::from(*p).pow(*e as u32))
                .product();
            acc = &acc * &BigFloat::from_int(k, prec).sqrt().sqrt();
        }
        if self.pi_halves != 0 {
            acc = &acc * &BigFloat::pi(prec).sqrt().powi(self.pi_halves as i64);
        }
        if self.zeta3 != 0 {
            acc = &acc * &BigFloat::zeta3(prec).powi(self.zeta3 as i64);
        }
        for (&p, &e) in &self.logs {
            acc = &acc * &BigFloat::from_int(p, prec).ln().powi(e as i64);
        }
        for (&(a, b), &e) in &self.reflgamma {
            let pi = BigFloat::pi(prec);
            let x = &pi * &BigFloat::from_rational(&Rational::new(a.into(), b.into()), prec);
            acc = &acc * &(&pi / &x.sin()).powi(e as i64);
        }
        Ok(acc)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        parts.extend(self.radical_string());
        let h = self.pi_halves;
        if h != 0 {
            parts.push(match (h % 2 == 0, h / 2) {
                (true, 1) => "pi".to_string(),
                (true, k) if k > 0 => format!("pi^{k}"),
                (true, k) => format!("pi^({k})"),
                (false, _) => format!("pi^({h}/2)"),
            });
        }
        let pow = |base: String, e: i32| match e {
            1 => base,
            e if e > 0 => format!("{base}^{e}"),
            e => format!("{base}^({e})"),
        };
        if self.zeta3 != 0 {
            parts.push(pow("zeta3".into(), self.zeta3));
        }
        for (p, e) in &self.logs {
            parts.push(pow(format!("log({p})"), *e));
        }
        for ((a, b), e) in &self.reflgamma {
            parts.push(pow(format!("reflgamma({a}/{b})"), *e));
        }
        for (name, e) in &self.opaque {
            parts.push(pow(format!("sym({name})"), *e));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Element of the constant ring.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConstElem {
    terms: BTreeMap<Monomial, Rational>,
}

impl ConstElem {
    fn from_monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ConstElem { terms }
    }

    pub fn rational(q: Rational) -> Self {
        Self::from_monomial(Monomial::default(), q)
    }

    fn radical_monomial(n: u64, quarters: u8) -> Result<(Monomial, Rational)> {
        if n == 0 {
            return Err(Error::arg("radical of zero"));
        }
        let mut m = Monomial::default();
        let mut c = Rational::one();
        for (p, e) in factorize(n) {
            let q = e * quarters as u32;
            c *= Rational::from_integer(BigInt::from(p).pow(q / 4));
            if q % 4 != 0 {
                m.radical.insert(p, (q % 4) as u8);
            }
        }
        Ok((m, c))
    }

    /// `√n`, reduced (`√12 = 2√3`).
    pub fn sqrt(n: u64) -> Self {
        let (m, c) = Self::radical_monomial(n, 2).expect("sqrt of positive integer");
        Self::from_monomial(m, c)
    }

    /// `n^(1/4)`, reduced.
    pub fn root4(n: u64) -> Self {
        let (m, c) = Self::radical_monomial(n, 1).expect("fourth root of positive integer");
        Self::from_monomial(m, c)
    }

    /// `π^(h/2)`.
    pub fn pi_halves(h: i32) -> Self {
        Self::from_monomial(
            Monomial {
                pi_halves: h,
                ..Default::default()
            },
            Rational::one(),
        )
    }

    pub fn zeta3() -> Self {
        Self::from_monomial(
            Monomial {
                zeta3: 1,
                ..Default::default()
            },
            Rational::one(),
        )
    }

    /// `log m`, expanded over the prime factors of `m`.
    pub fn log(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::arg("log of zero"));
        }
        let mut out = ConstElem::zero();
        for (p, e) in factorize(m) {
            let mut mono = Monomial::default();
            mono.logs.insert(p, 1);
            out = out + Self::from_monomial(mono, Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    /// `Γ(x)Γ(1−x) = π / sin(πx)` for rational `0 < x < 1`.
    pub fn reflgamma(x: &Rational) -> Result<Self> {
        if !(x.is_positive() && x < &Rational::one()) {
            return Err(Error::arg("reflgamma needs 0 < x < 1"));
        }
        let key = (
            x.numer()
                .to_i64()
                .ok_or_else(|| Error::arg("reflgamma argument too large"))?,
            x.denom()
                .to_i64()
                .ok_or_else(|| Error::arg("reflgamma argument too large"))?,
        );
        let mut m = Monomial::default();
        m.reflgamma.insert(key, 1);
        Ok(Self::from_monomial(m, Rational::one()))
    }

    /// Formal symbol with no numeric value; evaluation reports it as unsupported.
    pub fn symbol(name: &str) -> Self {
        let mut m = Monomial::default();
        m.opaque.insert(name.to_string(), 1);
        Self::from_monomial(m, Rational::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if this element is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Coefficient of a given monomial (zero if absent).
    pub fn coeff_of(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Substitute `sym(name) → sym(name) + shift` in every term linear in the symbol.
    pub fn shift_symbol(&self, name: &str, shift: &ConstElem) -> Result<Self> {
        let mut linear = ConstElem::zero();
        for (m, c) in &self.terms {
            match m.opaque.get(name) {
                None => {}
                Some(1) => {
                    let mut rest = m.clone();
                    rest.opaque.remove(name);
                    linear = linear + ConstElem::from_monomial(rest, c.clone());
                }
                Some(e) => {
                    return Err(Error::Unsupported(format!(
                        "symbol {name:?} appears with exponent {e}"
                    )));
                }
            }
        }
        Ok(self.clone() + linear * shift.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(ConstElem::one(), |acc, _| acc * self.clone())
    }

    pub fn to_records(&self) -> Vec<ConstTerm> {
        self.terms
            .iter()
            .map(|(m, c)| ConstTerm {
                monomial: m.to_string(),
                coeff: format_rational(c),
            })
            .collect()
    }

    pub fn from_records(records: &[ConstTerm]) -> Result<Self> {
        let mut out = ConstElem::zero();
        for r in records {
            let c = parse_rational(&r.coeff)
                .ok_or_else(|| Error::arg(format!("bad coefficient {:?}", r.coeff)))?;
            out = out + Self::from_monomial(Monomial::parse(&r.monomial)?, c);
        }
        Ok(out)
    }
}

impl<const D: i64> From<SqrtExt<D>> for ConstElem {
    fn from(x: SqrtExt<D>) -> Self {
        ConstElem::rational(x.rational) + ConstElem::sqrt(D as u64) * ConstElem::rational(x.radical)
    }
}

/// Numeric value at `precision` bits.
pub fn const_eval(c: &ConstElem, precision: u32) -> Result<BigFloat> {
    if precision < 64 {
        return Err(Error::arg("precision must be at least 64 bits"));
    }
    let w = precision + 32;
    let mut acc = BigFloat::zero(w);
    for (m, q) in &c.terms {
        acc = &acc + &(&m.eval(w)? * &BigFloat::from_rational(q, w));
    }
    Ok(acc.with_precision(precision))
}

impl Zero for ConstElem {
    fn zero() -> Self {
        ConstElem::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ConstElem {
    fn one() -> Self {
        ConstElem::rational(Rational::one())
    }
}

impl Add for ConstElem {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(&m);
            }
        }
        self
    }
}

impl Neg for ConstElem {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Sub for ConstElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for ConstElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = ConstElem::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let (m, f) = ma.mul(mb);
                out = out + ConstElem::from_monomial(m, ca * cb * f);
            }
        }
        out
    }
}

impl Scalar for ConstElem {
    fn from_rational(q: &Rational) -> Self {
        ConstElem::rational(q.clone())
    }

    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let (inv, f) = m.inverse();
        Some(ConstElem::from_monomial(inv, f / c))
    }

    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return ConstElem::zero();
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = &*c * q;
        }
        out
    }
}

impl fmt::Display for ConstElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format_rational(c)
                } else {
                    format!("({})*{}", format_rational(c), m)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Serialized term: `{"monomial": "sqrt(6)*pi^(-1/2)", "coeff": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstTerm {
    pub monomial: String,
    pub coeff: String,
}

impl Serialize for ConstElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_records().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConstElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let recs = Vec::<ConstTerm>::deserialize(d)?;
        ConstElem::from_records(&recs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::scalar::{int, rat};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> ConstElem {
        ConstElem::rational(rat(n, d))
    }

    #[test]
    fn radical_reduction() {
        let s6 = ConstElem::sqrt(6);
        let s3 = ConstElem::sqrt(3);
        assert_eq!(s6.clone() * s6.clone(), q(6, 1));
        assert_eq!(s3.clone() * s3.clone(), q(3, 1));
        let p = s6 * s3;
        assert_eq!(p, ConstElem::sqrt(2) * q(3, 1));
        assert_eq!(p.clone() * p, q(18, 1));
        assert_eq!(ConstElem::sqrt(12), ConstElem::sqrt(3) * q(2, 1));
        assert_eq!(ConstElem::root4(3).pow(4), q(3, 1));
        assert_eq!(ConstElem::root4(3).pow(2), ConstElem::sqrt(3));
    }

    #[test]
    fn inverses() {
        let x = ConstElem::sqrt(3) * ConstElem::pi_halves(-1) * q(5, 7);
        assert_eq!(x.clone() * x.try_inv().unwrap(), ConstElem::one());
        assert!((ConstElem::one() + ConstElem::sqrt(2)).try_inv().is_none());
        let r = ConstElem::root4(3) * ConstElem::log(6).unwrap().pow(0);
        assert_eq!(r.clone() * r.try_inv().unwrap(), ConstElem::one());
    }

    #[test]
    fn logs_factor_into_primes() {
        let l12 = ConstElem::log(12).unwrap();
        let expected = ConstElem::log(2).unwrap() * q(2, 1) + ConstElem::log(3).unwrap();
        assert_eq!(l12, expected);
        assert_eq!(ConstElem::log(1).unwrap(), ConstElem::zero());
    }

    #[test]
    fn json_round_trip() {
        let x = ConstElem::sqrt(15)
            * ConstElem::pi_halves(-4)
            * ConstElem::reflgamma(&rat(1, 5)).unwrap()
            * q(1, 20)
            + ConstElem::zeta3() * q(-3, 2)
            + ConstElem::log(10).unwrap().pow(2)
            + ConstElem::root4(27) * ConstElem::pi_halves(-1)
            + ConstElem::symbol("log(-tau)") * q(1, 2)
            + q(7, 3);
        let json = serde_json::to_string(&x).unwrap();
        let back: ConstElem = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        assert!(json.contains("\"coeff\":\"7/3\""));
    }

    #[test]
    fn evaluation() {
        assert_eq!(
            const_eval(&ConstElem::one(), 64).unwrap().to_decimal(5),
            "1.0000"
        );
        // K = √15 Γ(1/5)Γ(4/5) / (20π²)
        let k = ConstElem::sqrt(15)
            * ConstElem::reflgamma(&rat(1, 5)).unwrap()
            * ConstElem::pi_halves(-4)
            * q(1, 20);
        assert_eq!(
            const_eval(&k, 256).unwrap().to_decimal(20),
            "0.10486898772254091800"
        );
        let s = ConstElem::root4(3) * ConstElem::pi_halves(-1) * q(-1, 2);
        assert_eq!(const_eval(&s, 256).unwrap().to_decimal(6), "-0.371258");
        assert!(const_eval(&ConstElem::symbol("x"), 128).is_err());
        assert!(const_eval(&ConstElem::one(), 32).is_err());
        let l = const_eval(&ConstElem::log(6).unwrap(), 128).unwrap();
        assert_eq!(l.to_decimal(12), "1.79175946923");
    }

    #[test]
    fn precision_doubling() {
        let x = ConstElem::zeta3() * ConstElem::pi_halves(4)
            + ConstElem::log(5).unwrap() * ConstElem::sqrt(6)
            - ConstElem::reflgamma(&rat(2, 7)).unwrap();
        for p in [64u32, 128, 256] {
            let lo = const_eval(&x, p).unwrap().with_precision(2 * p);
            let hi = const_eval(&x, 2 * p).unwrap();
            assert!(lo.rel_diff(&hi) < 2f64.powi(-(p as i32 - 8)));
        }
    }

    fn arb_elem() -> impl Strategy<Value = ConstElem> {
        let atom = prop_oneof![
            Just(ConstElem::sqrt(6)),
            Just(ConstElem::sqrt(3)),
            Just(ConstElem::pi_halves(-1)),
            Just(ConstElem::pi_halves(4)),
            Just(ConstElem::zeta3()),
            Just(ConstElem::log(2).unwrap()),
            Just(ConstElem::log(3).unwrap()),
        ];
        prop::collection::vec((atom, -20i64..20, 1i64..9), 0..4).prop_map(|v| {
            v.into_iter().fold(ConstElem::zero(), |acc, (a, n, d)| {
                acc + a * ConstElem::rational(rat(n, d))
            })
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_elem(), b in arb_elem(), c in arb_elem()) {
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            prop_assert_eq!(a.clone() - a.clone(), ConstElem::zero());
            prop_assert_eq!(a.scale(&int(3)), a.clone() + a.clone() + a);
        }
    }
}
