//! Map-count constants and the Painlevé I large-order structure.
//!
//! Everything here is exact except the large-order module, which evaluates
//! the exact sequences in [`BigFloat`](crate::BigFloat) only at the end.

mod large_order;
mod transseries;

pub use large_order::{
    estimate_k, estimate_stokes, k_exact, richardson, richardson_from, stokes_exact, stokes_ratios,
    tg_asymptotic_check, tg_corrected_ratio, RichardsonEstimate, StokesEstimate, TgRatio,
};
pub use transseries::{
    a_squared_from_balance, graded_dz, mu_from_residual, painleve_residual, painleve_residual_raw,
    phi0, solve_a_from_residual, transseries_residual, transseries_residual_raw, ExpGradedSeries,
};

use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::numeric::scalar::{factorial_q, format_rational, int, rat};
use crate::{ConstElem, Rational, Sqrt3, Sqrt6};
use num_traits::{One, Zero};

static A_CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// `a_0, …, a_{g_max}` from `a_g = (25(g−1)²−1)/48·a_{g−1} − ½Σ a_ℓ a_{g−ℓ}`.
pub fn a_seq(g_max: usize) -> Vec<Rational> {
    let mut cache = A_CACHE
        .get_or_init(|| Mutex::new(vec![int(1)]))
        .lock()
        .expect("a_g cache poisoned");
    while cache.len() <= g_max {
        let g = cache.len() as i64;
        let lead = rat(25 * (g - 1) * (g - 1) - 1, 48) * &cache[g as usize - 1];
        let conv: Rational = (1..g as usize)
            .map(|l| &cache[l] * &cache[g as usize - l])
            .sum();
        cache.push(lead - conv / int(2));
    }
    cache[..=g_max].to_vec()
}

/// `f_0 = −√6/72`.
pub fn f0() -> Sqrt6 {
    Sqrt6::surd(rat(-1, 72))
}

/// `C = √6/2`.
pub fn c_const() -> Sqrt6 {
    Sqrt6::surd(rat(1, 2))
}

/// `f_g` straight from its quadratic recursion.
pub fn f_recur(g_max: usize) -> Vec<Sqrt6> {
    let mut f = vec![f0()];
    let sqrt6 = Sqrt6::sqrt_d();
    for g in 1..=g_max as i64 {
        let lead = sqrt6.clone()
            * Sqrt6::rational(rat((5 * g - 4) * (5 * g - 6), 96))
            * f[g as usize - 1].clone();
        let conv = (1..g as usize).fold(Sqrt6::zero(), |acc, h| {
            acc + f[h].clone() * f[g as usize - h].clone()
        });
        f.push(lead + Sqrt6::surd(int(6)) * conv);
    }
    f
}

/// `f_g = f_0·C^g·a_g`.
pub fn f_from_a(g_max: usize) -> Vec<Sqrt6> {
    let c = c_const();
    let mut power = Sqrt6::one();
    a_seq(g_max)
        .into_iter()
        .map(|a| {
            let v = f0() * power.clone() * Sqrt6::rational(a);
            power = power.clone() * c.clone();
            v
        })
        .collect()
}

/// `Γ(m/2)/√π` for odd `m` (any sign).
pub fn gamma_half_odd(m: i64) -> Rational {
    assert!(m % 2 != 0, "gamma_half_odd needs an odd argument");
    let mut x = int(1); // Γ(1/2)/√π
    let mut k = 1;
    while k < m {
        x *= rat(k, 2);
        k += 2;
    }
    while k > m {
        k -= 2;
        x /= rat(k, 2);
    }
    x
}

/// `Γ(m/2)` for even positive `m`.
fn gamma_half_even(m: i64) -> Rational {
    factorial_q((m / 2 - 1) as u64)
}

/// Rising factorial `x(x+1)…(x+n−1)`, with `[x]_{−1} = 1/(x−1)`.
pub fn rising(x: &Rational, n: i64) -> Rational {
    match n {
        -1 => (x - int(1)).recip(),
        n if n >= 0 => (0..n).fold(int(1), |acc, k| acc * (x + int(k))),
        _ => panic!("rising factorial defined here for n ≥ −1"),
    }
}

/// `rational·π^{−1/2}` when `inv_sqrt_pi`, else just `rational`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiScaled {
    pub rational: Rational,
    pub inv_sqrt_pi: bool,
}

impl PiScaled {
    pub fn to_const(&self) -> ConstElem {
        let base = ConstElem::rational(self.rational.clone());
        if self.inv_sqrt_pi {
            base * ConstElem::pi_halves(-1)
        } else {
            base
        }
    }
}

impl std::fmt::Display for PiScaled {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.inv_sqrt_pi {
            write!(f, "{}/sqrt(pi)", format_rational(&self.rational))
        } else {
            write!(f, "{}", format_rational(&self.rational))
        }
    }
}

fn six_half_power(g: i64) -> Sqrt6 {
    // 6^{g/2}
    let whole = pow_i(&int(6), g.div_euclid(2));
    if g.rem_euclid(2) == 0 {
        Sqrt6::rational(whole)
    } else {
        Sqrt6::surd(whole)
    }
}

fn pow_i(q: &Rational, e: i64) -> Rational {
    crate::numeric::scalar::pow_q(q, e)
}

fn require_rational(x: &Sqrt6, what: &str) -> Result<Rational> {
    if x.is_rational() {
        Ok(x.rational.clone())
    } else {
        Err(Error::consistency(format!(
            "{what} has a surviving √6 part: {x}"
        )))
    }
}

/// `t_g` from `f_g = 24^{−3/2}·6^{g/2}·Γ((5g−1)/2)·t_g`.
pub fn t_from_f(g: usize, f: &Sqrt6) -> Result<PiScaled> {
    let g = g as i64;
    // 24^{3/2} = 48√6
    let x = f.clone() * Sqrt6::surd(int(48)) * six_half_power(-g);
    let x = require_rational(&x, "t_g")?;
    let m = 5 * g - 1;
    Ok(if m % 2 == 0 {
        PiScaled {
            rational: x / gamma_half_even(m),
            inv_sqrt_pi: false,
        }
    } else {
        PiScaled {
            rational: x / gamma_half_odd(m),
            inv_sqrt_pi: true,
        }
    })
}

/// Inverse of [`t_from_f`].
pub fn f_from_t(g: usize, t: &PiScaled) -> Result<Sqrt6> {
    let gi = g as i64;
    let m = 5 * gi - 1;
    let gamma_times_t = match (m % 2 == 0, t.inv_sqrt_pi) {
        (true, false) => gamma_half_even(m) * &t.rational,
        (false, true) => gamma_half_odd(m) * &t.rational,
        _ => return Err(Error::consistency(format!("t_{g} has the wrong π parity"))),
    };
    // 24^{−3/2} = √6/288
    Ok(Sqrt6::surd(rat(1, 288)) * six_half_power(gi) * Sqrt6::rational(gamma_times_t))
}

/// `u_g = f_g·(25√6/96)^{−g}·6√6/([1/5]_g·[4/5]_{g−1})`.
pub fn u_from_f(g: usize, f: &Sqrt6) -> Result<Rational> {
    let base = Sqrt6::surd(rat(25, 96));
    let inv = (0..g).fold(Sqrt6::one(), |acc, _| acc / base.clone());
    let poch = rising(&rat(1, 5), g as i64) * rising(&rat(4, 5), g as i64 - 1);
    let x = f.clone() * inv * Sqrt6::surd(int(6)) * Sqrt6::rational(poch.recip());
    require_rational(&x, "u_g")
}

#[derive(Clone, Debug)]
pub struct MapConstants {
    pub f: Vec<Sqrt6>,
    pub t: Vec<PiScaled>,
    pub u: Vec<Rational>,
}

/// `f_g` (recursion), `t_g` and `u_g` for `g ≤ g_max`.
pub fn map_constants(g_max: usize) -> Result<MapConstants> {
    let f = f_recur(g_max);
    let t = f
        .iter()
        .enumerate()
        .map(|(g, x)| t_from_f(g, x))
        .collect::<Result<Vec<_>>>()?;
    let u = f
        .iter()
        .enumerate()
        .map(|(g, x)| u_from_f(g, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(MapConstants { f, t, u })
}

/// `f_g` three ways (recursion, `f_0 C^g a_g`, back from `t_g`), compared exactly.
pub fn consistency_triangle(g_max: usize) -> Result<Vec<Sqrt6>> {
    let rec = f_recur(g_max);
    let via_a = f_from_a(g_max);
    for g in 0..=g_max {
        let t = t_from_f(g, &via_a[g])?;
        let via_t = f_from_t(g, &t)?;
        if rec[g] != via_a[g] || rec[g] != via_t {
            return Err(Error::consistency(format!(
                "f_{g}: recursion {} vs f0·C^g·a_g {} vs t_g route {}",
                rec[g], via_a[g], via_t
            )));
        }
    }
    Ok(rec)
}

/// `μ_0, …, μ_{l_max}` from the linear recursion in terms of `a_n`.
pub fn mu_seq(l_max: usize) -> Vec<Sqrt3> {
    let a = a_seq(l_max / 2 + 1);
    let a_half = |n: usize| -> Rational {
        if n % 2 == 0 {
            a[n / 2].clone()
        } else {
            Rational::zero()
        }
    };
    let mut mu = vec![Sqrt3::one()];
    for l in 1..=l_max {
        let sum = (0..l).fold(Sqrt3::zero(), |acc, k| {
            acc + mu[k].clone() * Sqrt3::rational(a_half(l - k + 1))
        });
        let li = l as i64;
        let damp = Sqrt3::rational(rat(10 * li - 9, 10) * rat(10 * li - 1, 10)) * mu[l - 1].clone();
        let bracket = sum * Sqrt3::rational(rat(192, 25)) - damp;
        // 5/(16√3 l) = 5√3/(48 l)
        mu.push(Sqrt3::surd(rat(5, 48 * li)) * bracket);
    }
    mu
}

/// `A = 8√3/5`.
pub fn instanton_action() -> Sqrt3 {
    Sqrt3::surd(rat(8, 5))
}
