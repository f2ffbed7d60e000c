//! Large-order numerics: Richardson extrapolation, `K`, the Stokes constant and `t_g`.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::{a_seq, gamma_half_odd, instanton_action, map_constants, mu_seq};
use crate::error::{Error, Result};
use crate::numeric::scalar::{factorial_q, int, pow_q, rat, Real};
use crate::{const_eval, BigFloat, ConstElem, Rational, Sqrt3};

#[derive(Clone, Debug)]
pub struct RichardsonEstimate<T> {
    pub value: T,
    /// `|R^{(depth)} − R^{(depth−1)}|` at the end of the sequence.
    pub stability: T,
}

/// `R^{(k)}` built from the `k+1` entries ending at `seq[end − 1]`.
fn richardson_entry<T: Real>(seq: &[T], first_index: u64, end: usize, k: usize) -> T {
    let start = end - 1 - k;
    let n = first_index + start as u64;
    let unit = &seq[0];
    let mut acc = unit.lift(&Rational::zero());
    for j in 0..=k {
        let sign = if (k + j) % 2 == 0 { 1 } else { -1 };
        let w = pow_q(&int((n + j as u64) as i64), k as i64) * int(sign)
            / (factorial_q(j as u64) * factorial_q((k - j) as u64));
        acc = acc + seq[start + j].clone() * unit.lift(&w);
    }
    acc
}

/// Richardson extrapolation of `s_g`, `g = first_index, first_index + 1, …`,
/// assuming corrections in powers of `1/g`.
pub fn richardson_from<T: Real>(
    seq: &[T],
    first_index: u64,
    depth: usize,
) -> Result<RichardsonEstimate<T>> {
    if depth < 1 || seq.len() <= depth {
        return Err(Error::arg(format!(
            "richardson needs 1 <= depth < sequence length (depth {depth}, length {})",
            seq.len()
        )));
    }
    if first_index == 0 {
        return Err(Error::arg("richardson indices start at g >= 1"));
    }
    let end = seq.len();
    let value = richardson_entry(seq, first_index, end, depth);
    let prev = richardson_entry(seq, first_index, end, depth - 1);
    let stability = (value.clone() - prev).magnitude();
    Ok(RichardsonEstimate { value, stability })
}

/// [`richardson_from`] with `seq[0] = s_1`.
pub fn richardson<T: Real>(seq: &[T], depth: usize) -> Result<RichardsonEstimate<T>> {
    richardson_from(seq, 1, depth)
}

/// `K = √(3/5)·Γ(1/5)Γ(4/5)/(4π²)`.
pub fn k_exact() -> ConstElem {
    ConstElem::sqrt(15)
        * ConstElem::reflgamma(&rat(1, 5)).expect("1/5 is a valid argument")
        * ConstElem::pi_halves(-4)
        * ConstElem::rational(rat(1, 20))
}

/// `S = −3^{1/4}/(2√π)`.
pub fn stokes_exact() -> ConstElem {
    ConstElem::root4(3) * ConstElem::pi_halves(-1) * ConstElem::rational(rat(-1, 2))
}

/// Richardson limit of `u_1, …, u_{g_max}` at `prec` bits.
pub fn estimate_k(g_max: usize, depth: usize, prec: u32) -> Result<RichardsonEstimate<BigFloat>> {
    let u = map_constants(g_max)?.u;
    let floats: Vec<BigFloat> = u[1..]
        .par_iter()
        .map(|q| BigFloat::from_rational(q, prec))
        .collect();
    richardson(&floats, depth)
}

/// Exact `r_g` with `S_est(g) = r_g·√π/√A`:
/// `r_g = a_g·A^{2g}/(Γ(2g−1/2)/√π)` over the correction bracket truncated at `l_corrections`.
pub fn stokes_ratios(g_min: usize, g_max: usize, l_corrections: usize) -> Result<Vec<Rational>> {
    let a = a_seq(g_max);
    let mu = mu_seq(l_corrections);
    let action = instanton_action();
    // μ_l·A^l is rational for every l
    let mut mu_a = Vec::with_capacity(l_corrections + 1);
    let mut power = Sqrt3::one();
    for m in &mu {
        let x = m.clone() * power.clone();
        if !x.is_rational() {
            return Err(Error::consistency(format!("μ·A^l is not rational: {x}")));
        }
        mu_a.push(x.rational);
        power = power * action.clone();
    }
    let a_sq = rat(192, 25);
    (g_min..=g_max)
        .into_par_iter()
        .map(|g| {
            let gi = g as i64;
            let mut bracket = int(1);
            let mut prod = int(1);
            for l in 1..=l_corrections {
                // 2g − 1/2 − l
                prod *= rat(4 * gi - 1 - 2 * l as i64, 2);
                bracket += &mu_a[l] / &prod;
            }
            let gamma = gamma_half_odd(4 * gi - 1);
            Ok(&a[g] * pow_q(&a_sq, gi) / gamma / bracket)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct StokesEstimate {
    pub value: BigFloat,
    pub stability: BigFloat,
    /// Unaccelerated `S_est(g_max)`.
    pub raw: BigFloat,
    pub exact: BigFloat,
    /// `S_est(g) < 0` for every `2 ≤ g ≤ g_max`.
    pub all_negative: bool,
}

impl StokesEstimate {
    pub fn matching_digits(&self) -> f64 {
        self.value.matching_digits(&self.exact)
    }
}

/// `S` from `a_g` at `g ≤ g_max`, dividing out `l_corrections` terms of the
/// correction series and Richardson-accelerating at `depth` (0 = none).
pub fn estimate_stokes(
    g_max: usize,
    l_corrections: usize,
    depth: usize,
    prec: u32,
) -> Result<StokesEstimate> {
    if g_max < 20 {
        return Err(Error::arg("estimate_stokes needs g_max >= 20"));
    }
    let r = stokes_ratios(2, g_max, l_corrections)?;
    let all_negative = r.iter().all(|x| x.is_negative());
    let wp = prec + 32;
    let sqrt_a =
        (BigFloat::from_rational(&rat(8, 5), wp) * BigFloat::from_int(3, wp).sqrt()).sqrt();
    let factor = BigFloat::pi(wp).sqrt() / sqrt_a;
    let s: Vec<BigFloat> = r
        .par_iter()
        .map(|x| &BigFloat::from_rational(x, wp) * &factor)
        .collect();
    let raw = s.last().cloned().expect("g_max >= 20");
    let (value, stability) = if depth == 0 {
        let prev = &s[s.len() - 2];
        (raw.clone(), (&raw - prev).abs())
    } else {
        let tail = &s[s.len() - depth - 1..];
        let est = richardson_from(tail, (g_max - depth) as u64, depth)?;
        (est.value, est.stability)
    };
    Ok(StokesEstimate {
        value: value.with_precision(prec),
        stability: stability.with_precision(prec),
        raw: raw.with_precision(prec),
        exact: const_eval(&stokes_exact(), prec)?,
        all_negative,
    })
}

#[derive(Clone, Debug)]
pub struct TgRatio {
    pub g: usize,
    pub ratio: BigFloat,
}

/// `t_g / [40 sin(π/5) K/√(2π)·(1440g/e)^{−g/2}]` for `1 ≤ g ≤ g_max`.
pub fn tg_asymptotic_check(g_max: usize, prec: u32) -> Result<Vec<TgRatio>> {
    if g_max < 10 {
        return Err(Error::arg("tg_asymptotic_check needs g_max >= 10"));
    }
    let t = map_constants(g_max)?.t;
    let wp = prec + 32;
    let pi = BigFloat::pi(wp);
    let inv_sqrt_pi = pi.sqrt().recip();
    let k = const_eval(&k_exact(), wp)?;
    let sin = (&pi / &BigFloat::from_int(5, wp)).sin();
    let lead = BigFloat::from_int(40, wp) * sin * k / (&pi * &BigFloat::from_int(2, wp)).sqrt();
    let ratios = (1..=g_max)
        .into_par_iter()
        .map(|g| {
            let mut tg = BigFloat::from_rational(&t[g].rational, wp);
            if t[g].inv_sqrt_pi {
                tg = &tg * &inv_sqrt_pi;
            }
            let gf = BigFloat::from_int(g as u64, wp);
            let log_base = BigFloat::from_int(1440 * g as u64, wp).ln() - BigFloat::from_int(1, wp);
            let decay = (-(gf * log_base).mul_pow2(-1)).exp();
            TgRatio {
                g,
                ratio: (tg / (&lead * &decay)).with_precision(prec),
            }
        })
        .collect();
    Ok(ratios)
}

/// Ratio at the end of `ratios` with `1/g` corrections removed by Richardson at `depth`.
pub fn tg_corrected_ratio(
    ratios: &[TgRatio],
    depth: usize,
) -> Result<RichardsonEstimate<BigFloat>> {
    let first = ratios.first().ok_or_else(|| Error::arg("no ratios"))?.g;
    let seq: Vec<BigFloat> = ratios.iter().map(|r| r.ratio.clone()).collect();
    richardson_from(&seq, first as u64, depth)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn richardson_basics() {
        let c: Vec<f64> = vec![2.5; 6];
        assert!((richardson(&c, 3).unwrap().value - 2.5).abs() < 1e-12);
        let s: Vec<f64> = (1..=20).map(|g| 1.0 + 1.0 / g as f64).collect();
        assert!((richardson(&s, 3).unwrap().value - 1.0).abs() < 1e-6);
        assert!(richardson(&s[..3], 3).is_err());
        assert!(richardson(&s, 0).is_err());
        // 1/g and 1/g² both removed at depth 2
        let s: Vec<BigFloat> = (1..=10)
            .map(|g| BigFloat::from_rational(&(int(3) + rat(1, g) - rat(5, g * g)), 128))
            .collect();
        let r = richardson(&s, 2).unwrap();
        assert!((r.value - BigFloat::from_int(3, 128)).abs().to_f64() < 1e-30);
    }

    #[test]
    fn k_from_u() {
        let est = estimate_k(60, 8, 256).unwrap();
        let k = const_eval(&k_exact(), 256).unwrap();
        assert!(est.value.matching_digits(&k) >= 12.0, "{}", est.value);
    }

    #[test]
    fn stokes_raw_and_sign() {
        let est = estimate_stokes(60, 0, 0, 256).unwrap();
        assert!(est.raw.matching_digits(&est.exact) >= 2.0);
        assert!(est.all_negative);
        assert!(estimate_stokes(10, 0, 0, 256).is_err());
    }

    #[test]
    fn tg_trend() {
        let r = tg_asymptotic_check(30, 128).unwrap();
        let dev: Vec<f64> = r[19..]
            .iter()
            .map(|x| (x.ratio.to_f64() - 1.0).abs())
            .collect();
        assert!(dev.windows(2).all(|w| w[1] < w[0]));
        assert!(tg_asymptotic_check(5, 128).is_err());
    }
}
