//! Painlevé I `f² − f''/6 = z` in the grading variable `v = z^{−1/8}`.
//!
//! `z = v^{−8}`, `φ_0 = v^{−4}Σ a_g v^{20g}` and the first trans-series
//! correction `ψ = v·e^{−A v^{−10}}Σ μ_l v^{10l}` all have integer exponents.

use num_traits::{One, Zero};

use super::{a_seq, instanton_action, mu_seq};
use crate::error::{Error, Result};
use crate::numeric::scalar::{int, rat, Scalar};
use crate::{QSeries, Rational, Sqrt3, TruncSeries};

/// `d/dz` on a series in `v`: `v^k ↦ −(k/8)·v^{k+8}`.
pub fn graded_dz<S: Scalar>(s: &TruncSeries<S>) -> TruncSeries<S> {
    let coeffs = s.iter().map(|(k, c)| c.scale(&rat(-k, 8))).collect();
    TruncSeries::new(s.valuation() + 8, coeffs, s.order() + 8)
}

/// `φ_0` from the given `a_g`; exact below `v^{20·len−4}`.
pub fn phi0_from(a: &[Rational]) -> QSeries {
    let order = 20 * a.len() as i64 - 4;
    TruncSeries::from_fn(-4, order, |k| {
        let k = k + 4;
        if k % 20 == 0 {
            a[(k / 20) as usize].clone()
        } else {
            Rational::zero()
        }
    })
}

/// `φ_0` with `a_0, …, a_{g_max}`.
pub fn phi0(g_max: usize) -> QSeries {
    phi0_from(&a_seq(g_max))
}

/// `φ² − φ''/6 − z` for any truncated `φ`, without checking.
pub fn painleve_residual_raw(phi: &QSeries) -> QSeries {
    let z = QSeries::monomial(int(1), -8, phi.order() - 4);
    let d2 = graded_dz(&graded_dz(phi));
    &(&phi.mul_series(phi) - &d2.scale_q(&rat(1, 6))) - &z
}

fn first_nonzero<S: Scalar + std::fmt::Display>(s: &TruncSeries<S>) -> Option<String> {
    s.terms().next().map(|(k, c)| format!("v^{k}: {c}"))
}

/// Residual of `φ_0` (with `a_g` up to `g_max`); every coefficient up to the
/// truncation order must vanish.
pub fn painleve_residual(g_max: usize) -> Result<QSeries> {
    if g_max < 1 {
        return Err(Error::arg("painleve_residual needs g_max >= 1"));
    }
    let r = painleve_residual_raw(&phi0(g_max));
    match first_nonzero(&r) {
        None => Ok(r),
        Some(t) => Err(Error::consistency(format!(
            "Painlevé residual is nonzero at {t}"
        ))),
    }
}

/// Regenerates `a_1, …, a_{g_max}` from the residual alone: with `a_n` set to 0
/// the `v^{20n−8}` coefficient is `−2a_n`.
pub fn solve_a_from_residual(g_max: usize) -> Vec<Rational> {
    let mut a = vec![int(1)];
    for n in 1..=g_max {
        let mut trial = a.clone();
        trial.push(Rational::zero());
        let r = painleve_residual_raw(&phi0_from(&trial));
        let c = r.coeff(20 * n as i64 - 8).expect("inside horizon");
        a.push(-c / int(2));
    }
    a
}

/// `e^{−m·A·v^{−10}}·body`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpGradedSeries<S: Scalar> {
    pub exp_multiplier: u32,
    pub rate: S,
    pub body: TruncSeries<S>,
}

impl<S: Scalar> ExpGradedSeries<S> {
    pub fn new(exp_multiplier: u32, rate: S, body: TruncSeries<S>) -> Self {
        ExpGradedSeries {
            exp_multiplier,
            rate,
            body,
        }
    }

    /// `D(e^{−mA v^{−10}}B) = e^{−mA v^{−10}}(DB − (5mA/4)v^{−2}B)`.
    pub fn dz(&self) -> Self {
        let k = self.rate.scale(&rat(5 * self.exp_multiplier as i64, 4));
        let shifted = self.body.scale(&k).shift(-2);
        ExpGradedSeries {
            exp_multiplier: self.exp_multiplier,
            rate: self.rate.clone(),
            body: &graded_dz(&self.body) - &shifted,
        }
    }

    /// Product with an exponent-free series.
    pub fn mul_plain(&self, rhs: &TruncSeries<S>) -> Self {
        ExpGradedSeries {
            body: self.body.mul_series(rhs),
            ..self.clone()
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if self.exp_multiplier != rhs.exp_multiplier || self.rate != rhs.rate {
            return Err(Error::arg("exponential factors differ"));
        }
        Ok(ExpGradedSeries {
            body: &self.body - &rhs.body,
            ..self.clone()
        })
    }

    pub fn scale_q(&self, q: &Rational) -> Self {
        ExpGradedSeries {
            body: self.body.scale_q(q),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }
}

fn psi(mu: &[Sqrt3], rate: Sqrt3) -> ExpGradedSeries<Sqrt3> {
    let order = 10 * mu.len() as i64 + 1;
    let body = TruncSeries::from_fn(1, order, |k| {
        let k = k - 1;
        if k % 10 == 0 {
            mu[(k / 10) as usize].clone()
        } else {
            Sqrt3::zero()
        }
    });
    ExpGradedSeries::new(1, rate, body)
}

/// `2φ_0ψ − ψ''/6` for the given `a_g`, `μ_l` and action.
pub fn transseries_residual_raw(
    a: &[Rational],
    mu: &[Sqrt3],
    rate: Sqrt3,
) -> ExpGradedSeries<Sqrt3> {
    let phi: TruncSeries<Sqrt3> = phi0_from(a).map(Sqrt3::from_rational);
    let psi = psi(mu, rate);
    let two_phi_psi = psi.mul_plain(&phi).scale_q(&int(2));
    let d2 = psi.dz().dz().scale_q(&rat(1, 6));
    two_phi_psi.sub(&d2).expect("same exponential factor")
}

/// Linearized Painlevé I around `φ_0` at `ψ` built from `μ_0..μ_{l_max}`;
/// the horizon is `v^{min(10 l_max + 7, 20 g_max + 17)}`.
pub fn transseries_residual(g_max: usize, l_max: usize) -> Result<ExpGradedSeries<Sqrt3>> {
    if g_max < l_max / 2 + 1 {
        return Err(Error::arg(
            "transseries_residual needs g_max >= l_max/2 + 1",
        ));
    }
    let r = transseries_residual_raw(&a_seq(g_max), &mu_seq(l_max), instanton_action());
    match first_nonzero(&r.body) {
        None => Ok(r),
        Some(t) => Err(Error::consistency(format!(
            "trans-series residual is nonzero at {t}"
        ))),
    }
}

/// `A²` from the leading `v^{−3}` balance, which is `2 − 25A²/96`.
pub fn a_squared_from_balance() -> Result<Rational> {
    let a = a_seq(1);
    let lead = |rate: Sqrt3| -> Sqrt3 {
        transseries_residual_raw(&a, &[Sqrt3::one()], rate)
            .body
            .coeff(-3)
            .expect("inside horizon")
    };
    let c0 = lead(Sqrt3::zero());
    let c1 = lead(Sqrt3::one());
    let c2 = lead(Sqrt3::rational(int(2)));
    // purely quadratic in A
    if c2.clone() - c0.clone() != (c1.clone() - c0.clone()) * Sqrt3::rational(int(4)) {
        return Err(Error::consistency(
            "leading balance is not of the form c0 + c2·A²",
        ));
    }
    let slope = c1 - c0.clone();
    if !c0.is_rational() || !slope.is_rational() || slope.is_zero() {
        return Err(Error::consistency("leading balance has no rational root"));
    }
    Ok(-c0.rational / slope.rational)
}

/// `μ_1, …, μ_{l_max}` from the linearized residual: `μ_l` enters the
/// `v^{10l+7}` coefficient linearly (the `μ_{l+1}` term there has coefficient 0).
pub fn mu_from_residual(l_max: usize) -> Result<Vec<Sqrt3>> {
    let a = a_seq(l_max / 2 + 2);
    let rate = instanton_action();
    let mut mu = vec![Sqrt3::one()];
    for l in 1..=l_max {
        let coeff_at = |x: Sqrt3| -> Sqrt3 {
            let mut trial = mu.clone();
            trial.push(x);
            trial.push(Sqrt3::zero());
            transseries_residual_raw(&a, &trial, rate.clone())
                .body
                .coeff(10 * l as i64 + 7)
                .expect("inside horizon")
        };
        let c0 = coeff_at(Sqrt3::zero());
        let slope = coeff_at(Sqrt3::one()) - c0.clone();
        let inv = slope
            .try_inv()
            .ok_or_else(|| Error::consistency(format!("μ_{l} does not enter its balance")))?;
        mu.push(-(c0 * inv));
    }
    Ok(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dz_recovers_exponent() {
        for k in [-9i64, -4, 0, 3, 20] {
            let m = QSeries::monomial(int(1), k, k + 1);
            let d = graded_dz(&m).shift(-8).scale_q(&int(-8));
            assert_eq!(d.coeff(k), Some(int(k)));
        }
    }

    #[test]
    fn exp_factor_derivative() {
        // D(e^{−A v^{−10}}) = −(5A/4)v^{−2}e^{−A v^{−10}}
        let e = ExpGradedSeries::new(1, int(3), QSeries::one(4));
        let d = e.dz();
        assert_eq!(d.body.coeff(-2), Some(rat(-15, 4)));
        assert_eq!(d.body.coeff(0), Some(int(0)));
    }

    #[test]
    fn painleve_vanishes() {
        let r = painleve_residual(10).unwrap();
        assert_eq!(r.order(), 20 * 10 + 12);
        assert!(painleve_residual(0).is_err());
        let mut bad = a_seq(3);
        bad[2] += int(1);
        assert!(!painleve_residual_raw(&phi0_from(&bad)).is_zero());
    }

    #[test]
    fn a_regenerated() {
        assert_eq!(solve_a_from_residual(8), a_seq(8));
    }

    #[test]
    fn transseries_vanishes() {
        let r = transseries_residual(6, 8).unwrap();
        assert_eq!(r.body.order(), 87);
        assert!(transseries_residual(2, 8).is_err());
        assert_eq!(a_squared_from_balance().unwrap(), rat(192, 25));
    }

    #[test]
    fn mu_regenerated() {
        assert_eq!(mu_from_residual(6).unwrap(), mu_seq(6));
    }
}
