//! Polylogarithms at `e^τ`, the function `f(x) = log(sinh(x/2)/(x/2))`, and
//! the auxiliary series `F_g(τ)`.
//!
//! Non-positive orders are rational functions of `x`, generated by repeated
//! `x·d/dx` from `Li_0(x) = x/(1−x)`. Positive orders 1..3 are expanded over
//! [`ConstElem`] with `log(−τ)` kept as a formal symbol.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::bernoulli::{bernoulli, modified_bernoulli, zeta_nonpositive};
use crate::numeric::scalar::{factorial_q, int, rat, Scalar};
use crate::{ConstElem, ConstSeries, QSeries, Rational};

/// Name of the formal `log(−τ)` symbol inside [`ConstElem`].
pub const LOG_MINUS_TAU: &str = "log(-tau)";

/// `Li_α(x) = P_α(x) / (1 − x)^{pole_order}` for `α ≤ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunctionRep {
    /// Coefficients of `P_α`, lowest degree first.
    pub numerator: Vec<BigInt>,
    pub pole_order: u32,
}

impl RationalFunctionRep {
    /// Taylor coefficients at `x = 0` up to `x^{order-1}`.
    pub fn taylor(&self, order: i64) -> QSeries {
        let p = QSeries::new(
            0,
            self.numerator
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect(),
            order,
        );
        let one_minus_x = QSeries::new(0, vec![int(1), int(-1)], order);
        let den = one_minus_x.pow(self.pole_order);
        p.div_series(&den).expect("1 - x is a unit")
    }

    /// Palindromic up to the factor `x^v` with `v` the lowest nonzero degree.
    pub fn is_palindromic(&self) -> bool {
        let first = self.numerator.iter().position(|c| !c.is_zero());
        let last = self.numerator.iter().rposition(|c| !c.is_zero());
        match (first, last) {
            (Some(a), Some(b)) => {
                let core = &self.numerator[a..=b];
                core.iter().eq(core.iter().rev())
            }
            _ => true,
        }
    }

    pub fn degree(&self) -> usize {
        self.numerator
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }
}

impl std::fmt::Display for RationalFunctionRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.numerator.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => c.to_string(),
                1 if c.is_one() => "x".to_string(),
                1 => format!("{c}*x"),
                _ if c.is_one() => format!("x^{k}"),
                _ => format!("{c}*x^{k}"),
            };
            parts.push(mono);
        }
        let num = parts.join(" + ").replace("+ -", "- ");
        write!(f, "({num})/(1 - x)^{}", self.pole_order)
    }
}

/// `Li_α(x)` as a rational function for `α ≤ 0`.
pub fn polylog_rational(alpha: i64) -> Result<RationalFunctionRep> {
    if alpha > 0 {
        return Err(Error::arg(format!(
            "polylog_rational needs alpha <= 0, got {alpha}"
        )));
    }
    let mut rep = RationalFunctionRep {
        numerator: vec![BigInt::zero(), BigInt::one()],
        pole_order: 1,
    };
    for _ in 0..(-alpha) {
        // x d/dx [P/(1-x)^m] = [x P' (1-x) + m x P] / (1-x)^{m+1}
        let p = &rep.numerator;
        let m = BigInt::from(rep.pole_order);
        let mut next = vec![BigInt::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            let kc = c * BigInt::from(k);
            next[k] += &kc;
            next[k + 1] -= &kc;
            next[k + 1] += c * &m;
        }
        while next.len() > 1 && next.last().is_some_and(|c| c.is_zero()) {
            next.pop();
        }
        rep = RationalFunctionRep {
            numerator: next,
            pole_order: rep.pole_order + 1,
        };
    }
    Ok(rep)
}

/// Laurent expansion of `Li_α(e^τ)` at `τ = 0`, known below `τ^order`.
pub fn polylog_exp_expansion(alpha: i64, order: i64) -> Result<QSeries> {
    if alpha > 0 {
        return Err(Error::Unsupported(format!(
            "Li_{alpha}(e^tau) has logarithmic terms; use polylog_exp_expansion_const"
        )));
    }
    let pole = 1 - alpha;
    if order <= -pole {
        return Err(Error::arg(format!("order must exceed {}", -pole)));
    }
    let rep = polylog_rational(alpha)?;
    // relative precision needed in the denominator is order + pole
    let work = order + 2 * pole;
    let e = QSeries::from_fn(0, work, |k| factorial_q(k as u64).recip());
    let p = rep
        .numerator
        .iter()
        .enumerate()
        .fold(QSeries::zero(work), |acc, (k, c)| {
            acc.add_series(&e.pow(k as u32).scale(&Rational::from_integer(c.clone())))
        });
    let den = (QSeries::one(work).sub_series(&e)).pow(rep.pole_order);
    Ok(p.div_series(&den)?.truncate(order))
}

/// `Li_s(e^τ)` for `s ∈ {1, 2, 3}` over the constant ring:
/// `τ^{s−1}/(s−1)!·(H_{s−1} − log(−τ)) + Σ_{k≠s−1} ζ(s−k) τ^k/k!`.
pub fn polylog_exp_expansion_const(s: i64, order: i64) -> Result<ConstSeries> {
    if !(1..=3).contains(&s) {
        return Err(Error::Unsupported(format!(
            "symbolic Li_{s}(e^tau) needs s in 1..=3"
        )));
    }
    if order < 1 {
        return Err(Error::arg("order must be positive"));
    }
    let zeta_pos = |m: i64| -> ConstElem {
        match m {
            2 => ConstElem::pi_halves(4).scale(&rat(1, 6)),
            3 => ConstElem::zeta3(),
            _ => unreachable!(),
        }
    };
    let harmonic: Rational = (1..s)
        .map(|k| rat(1, k))
        .fold(Rational::zero(), |a, b| a + b);
    Ok(ConstSeries::from_fn(0, order, |k| {
        let inv_fact = factorial_q(k as u64).recip();
        if k == s - 1 {
            (ConstElem::rational(harmonic.clone()) - ConstElem::symbol(LOG_MINUS_TAU))
                .scale(&inv_fact)
        } else if k < s - 1 {
            zeta_pos(s - k).scale(&inv_fact)
        } else {
            ConstElem::rational(zeta_nonpositive((k - s) as usize) * inv_fact)
        }
    }))
}

/// Taylor series of `f(x) = Σ_{k≥1} b_{2k} x^{2k}` below `x^order`.
pub fn f_series(order: i64) -> Result<QSeries> {
    if order < 2 {
        return Err(Error::arg("f_series needs order >= 2"));
    }
    Ok(QSeries::from_fn(2, order, |k| {
        if k % 2 == 0 {
            modified_bernoulli(k as usize).expect("even positive index")
        } else {
            Rational::zero()
        }
    }))
}

/// `f` recomputed as `log(sinh(x/2)/(x/2))` by series arithmetic.
pub fn f_series_via_log(order: i64) -> Result<QSeries> {
    if order < 2 {
        return Err(Error::arg("f_series needs order >= 2"));
    }
    // sinh(x/2)/(x/2) = Σ (x/2)^{2k}/(2k+1)!
    let ftilde = QSeries::from_fn(0, order, |k| {
        if k % 2 == 0 {
            (factorial_q(k as u64 + 1) * Rational::from_integer(BigInt::from(2).pow(k as u32)))
                .recip()
        } else {
            Rational::zero()
        }
    });
    Ok(ftilde.log()?.truncate(order))
}

/// `F_g(τ) = Σ_l (2l+2g)!/(2l+2)!·b_{2g+2l}·τ^{2l+2}`, with `l ≥ 1` when `g = 0`.
pub fn f_aux_series(g: u32, order: i64) -> Result<QSeries> {
    if order < 4 {
        return Err(Error::arg("f_aux_series needs order >= 4"));
    }
    let l0: i64 = if g == 0 { 1 } else { 0 };
    let g = g as i64;
    Ok(QSeries::from_fn(2 * l0 + 2, order, |k| {
        if k % 2 != 0 {
            return Rational::zero();
        }
        let l = (k - 2) / 2;
        factorial_q((2 * l + 2 * g) as u64) / factorial_q((2 * l + 2) as u64)
            * modified_bernoulli((2 * g + 2 * l) as usize).expect("even positive index")
    }))
}

/// `F_g` from the polylogarithm: for `g ≥ 2`,
/// `−Li_{3−2g}(e^τ) + (2g−3)!·τ^{2−2g} − B_{2g−2}/(2g−2)`; for `g = 1`,
/// `log((e^τ−1)/τ) − τ/2`.
pub fn f_aux_closed(g: u32, order: i64) -> Result<QSeries> {
    if g == 0 {
        return Err(Error::arg("f_aux_closed needs g >= 1; see f0_closed_const"));
    }
    if order < 4 {
        return Err(Error::arg("f_aux_closed needs order >= 4"));
    }
    if g == 1 {
        // (e^τ − 1)/τ = Σ τ^k/(k+1)!
        let q = QSeries::from_fn(0, order, |k| factorial_q(k as u64 + 1).recip());
        let half = QSeries::monomial(rat(-1, 2), 1, order);
        return Ok(q.log()?.add_series(&half));
    }
    let g = g as i64;
    let li = polylog_exp_expansion(3 - 2 * g, order)?;
    let pole = QSeries::monomial(factorial_q((2 * g - 3) as u64), 2 - 2 * g, order);
    let b = bernoulli((2 * g - 2) as usize) / int(2 * g - 2);
    let constant = QSeries::monomial(-b, 0, order);
    let total = (-li).add_series(&pole).add_series(&constant);
    if let Some((k, c)) = total.terms().find(|(k, _)| *k < 0) {
        return Err(Error::consistency(format!(
            "pole of Li_{}(e^tau) left coefficient {c} at tau^{k}",
            3 - 2 * g
        )));
    }
    Ok(total.normalized())
}

/// Closed form of `F_0` over the constant ring:
/// `−Li_3(e^τ) − (τ²/2)·log(−τ) − τ³/12 + 3τ²/4 + σ·π²τ/6 + ζ(3)`.
///
/// `pi_sign = −1` is the sign as printed; `+1` is the sign that makes the
/// linear term vanish.
pub fn f0_closed_const(pi_sign: i64, order: i64) -> Result<ConstSeries> {
    if pi_sign.abs() != 1 {
        return Err(Error::arg("pi_sign must be +1 or -1"));
    }
    let li3 = polylog_exp_expansion_const(3, order)?;
    let c = |q: Rational| ConstElem::rational(q);
    let extra = ConstSeries::from_fn(0, order, |k| match k {
        0 => ConstElem::zeta3(),
        1 => ConstElem::pi_halves(4).scale(&rat(pi_sign, 6)),
        2 => ConstElem::symbol(LOG_MINUS_TAU).scale(&rat(-1, 2)) + c(rat(3, 4)),
        3 => c(rat(-1, 12)),
        _ => ConstElem::zero(),
    });
    Ok((-li3).add_series(&extra))
}

/// `Li_1(e^τ)`-based form of `F_1` over the constant ring; every `log(−τ)` cancels.
pub fn f1_closed_const(order: i64) -> Result<ConstSeries> {
    let li1 = polylog_exp_expansion_const(1, order)?;
    let extra = ConstSeries::from_fn(0, order, |k| match k {
        0 => -ConstElem::symbol(LOG_MINUS_TAU),
        1 => ConstElem::rational(rat(-1, 2)),
        _ => ConstElem::zero(),
    });
    Ok((-li1).add_series(&extra))
}

/// Lift a rational series into the constant ring.
pub fn to_const_series(s: &QSeries) -> ConstSeries {
    s.map(ConstElem::from_rational)
}
