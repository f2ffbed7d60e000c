//! Invariant suites, grouped by module, for one-shot verification runs.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::asympt::{
    a_seq, a_squared_from_balance, consistency_triangle, estimate_k, estimate_stokes,
    instanton_action, k_exact, map_constants, mu_from_residual, mu_seq, painleve_residual,
    solve_a_from_residual, tg_asymptotic_check, tg_corrected_ratio, transseries_residual, PiScaled,
};
use crate::error::{Error, Result};
use crate::lens::{
    closed_form_polylog_part, correction_as_displayed, correction_derived, free_energy_closed_form,
    free_energy_genus, genus_sum, gevrey_estimate, sln_specialization_residual, LambdaConvention,
    LensSpace,
};
use crate::numeric::scalar::{int, rat};
use crate::polylog::{f_aux_closed, f_aux_series, f_series, polylog_rational, to_const_series};
use crate::ribbon::{count_rooted_maps, lemma_bounds_report, tutte_planar, RibbonGraph};
use crate::{
    bernoulli, const_eval, modified_bernoulli, ConstElem, QSeries, Sqrt3, Sqrt6, DEFAULT_PRECISION,
};

pub const SUITES: &[&str] = &["numeric", "polylog", "lens", "ribbon", "asympt"];

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub suite: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

type Check = (&'static str, fn() -> Result<String>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::consistency(msg))
    }
}

fn checks(suite: &str) -> Result<Vec<Check>> {
    Ok(match suite {
        "numeric" => vec![
            ("bernoulli", check_bernoulli as fn() -> Result<String>),
            ("series-inverse-pairs", check_series_pairs),
            ("const-eval", check_const_eval),
        ],
        "polylog" => vec![
            ("rational-form-taylor", check_polylog_taylor),
            ("f-golden", check_f_golden),
            ("f-aux-closed-form", check_f_aux_closed),
        ],
        "lens" => vec![
            ("cross-route", check_cross_route),
            ("sln-specialization", check_sln),
            ("gevrey-trend", check_gevrey),
        ],
        "ribbon" => vec![
            ("theta-weight", check_theta),
            ("degree-identity-and-lemma", check_lemma),
            ("rooted-maps", check_maps),
        ],
        "asympt" => vec![
            ("printed-constants", check_printed_asympt),
            ("painleve", check_painleve),
            ("transseries", check_transseries),
            ("consistency-triangle", check_triangle),
            ("k-recovery", check_k),
            ("stokes-recovery", check_stokes),
            ("tg-ratio", check_tg),
        ],
        other => {
            return Err(Error::arg(format!(
                "unknown suite `{other}` (expected one of {SUITES:?} or all)"
            )))
        }
    })
}

/// Runs one suite (or `all`); failures are reported in the outcomes, not as errors.
pub fn run_suite(name: &str) -> Result<Vec<CheckOutcome>> {
    let suites: Vec<&str> = if name == "all" {
        SUITES.to_vec()
    } else {
        vec![name]
    };
    let mut out = Vec::new();
    for s in suites {
        for (check, f) in checks(s)? {
            let start = Instant::now();
            let r = f();
            out.push(CheckOutcome {
                suite: s.to_string(),
                check: check.to_string(),
                passed: r.is_ok(),
                detail: r.unwrap_or_else(|e| e.to_string()),
                seconds: start.elapsed().as_secs_f64(),
            });
        }
    }
    Ok(out)
}

fn check_bernoulli() -> Result<String> {
    ensure(bernoulli(12) == rat(-691, 2730), "B_12")?;
    ensure(
        (3..40).step_by(2).all(|n| bernoulli(n).is_zero()),
        "odd Bernoulli numbers",
    )?;
    ensure(
        modified_bernoulli(2)? == rat(1, 24) && modified_bernoulli(4)? == rat(-1, 2880),
        "b_2, b_4",
    )?;
    Ok("B_12 = -691/2730, odd B_n = 0 for n in 3..40".into())
}

fn check_series_pairs() -> Result<String> {
    let x = QSeries::new(1, vec![int(1), rat(-1, 3), rat(2, 7), int(5)], 16);
    ensure(x.exp()?.log()? == x, "log(exp(x)) != x")?;
    let geo = QSeries::from_fn(0, 16, |_| int(1));
    ensure(
        QSeries::new(0, vec![int(1), int(-1)], 16).mul_series(&geo) == QSeries::one(16),
        "(1−x)·Σxⁿ != 1",
    )?;
    ensure(x.antiderivative()?.derivative() == x, "D∘∫ != id")?;
    Ok("exp/log, geometric, calculus pairs to order 16".into())
}

fn check_const_eval() -> Result<String> {
    let k = const_eval(&k_exact(), DEFAULT_PRECISION)?.to_decimal(20);
    ensure(k == "0.10486898772254091800", format!("K = {k}"))?;
    let s6 = ConstElem::sqrt(6) * ConstElem::sqrt(3);
    ensure(s6.pow(2) == ConstElem::rational(int(18)), "(√6·√3)² != 18")?;
    Ok(format!("K = {k}"))
}

fn check_polylog_taylor() -> Result<String> {
    for alpha in 0..=6i64 {
        let r = polylog_rational(-alpha)?;
        let t = r.taylor(21);
        for n in 1..=20i64 {
            ensure(
                t.coeff(n) == Some(int(n.pow(alpha as u32))),
                format!("Li_{} coefficient {n}", -alpha),
            )?;
        }
    }
    Ok("P_α/(1−x)^{1−α} reproduces Σ n^{−α} xⁿ, α = 0..−6".into())
}

fn check_f_golden() -> Result<String> {
    let f = f_series(8)?;
    let want = QSeries::new(
        0,
        vec![
            int(0),
            int(0),
            rat(1, 24),
            int(0),
            rat(-1, 2880),
            int(0),
            rat(1, 181440),
        ],
        8,
    );
    ensure(f == want, format!("f = {f}"))?;
    Ok("f(x) = x²/24 − x⁴/2880 + x⁶/181440 + O(x⁸)".into())
}

fn check_f_aux_closed() -> Result<String> {
    for g in 2..=6 {
        ensure(
            f_aux_closed(g, 16)? == f_aux_series(g, 16)?,
            format!("F_{g}"),
        )?;
    }
    Ok("closed form = coefficient form for g = 2..6".into())
}

fn lenses() -> Vec<LensSpace> {
    [(2, 1), (3, 1), (3, 2), (5, 2)]
        .iter()
        .map(|&(d, b)| LensSpace::new(d, b).expect("valid lens"))
        .collect()
}

/// Compares the defining route with the closed-form route and with the
/// displayed polylogarithm form for one lens space and genus.
pub fn cross_route(m: &LensSpace, g: u32, order: i64, conv: &LambdaConvention) -> Result<()> {
    let defining = to_const_series(&free_energy_genus(m, g, order, conv)?);
    let closed = free_energy_closed_form(m, g, order, conv)?;
    ensure(
        defining == closed,
        format!("{m} g = {g}: closed-form route differs"),
    )?;
    let displayed = closed_form_polylog_part(m, g, order)?
        .add_series(&correction_as_displayed(m, g, order, conv)?);
    let derived = correction_derived(m, g, order, conv)?;
    for k in 0..order {
        let lhs = defining.coeff(k).expect("in range");
        if k >= 1 {
            ensure(
                lhs == displayed.coeff(k).expect("in range"),
                format!("{m} g = {g}: τ^{k} vs display"),
            )?;
        } else if g >= 2 {
            let offset = lhs - displayed.coeff(0).expect("in range");
            ensure(
                offset == derived.coeff(0).expect("in range"),
                format!("{m} g = {g}: constant offset"),
            )?;
        }
    }
    Ok(())
}

fn check_cross_route() -> Result<String> {
    let conv = LambdaConvention::default();
    for m in lenses() {
        for g in 2..=6 {
            cross_route(&m, g, 24, &conv)?;
        }
    }
    Ok("g = 2..6, order 24, four lens spaces".into())
}

fn check_sln() -> Result<String> {
    let conv = LambdaConvention::default();
    for m in &lenses()[..2] {
        for n in 1..=3 {
            ensure(
                sln_specialization_residual(m, n, 10, &conv)?.is_zero(),
                format!("{m} N = {n}"),
            )?;
        }
        ensure(
            genus_sum(m, 1, 10, &conv)?.is_zero(),
            format!("{m}: N = 1 genus sum"),
        )?;
    }
    Ok("residual ≡ 0 to ħ^10 for N = 1..3".into())
}

fn check_gevrey() -> Result<String> {
    let conv = LambdaConvention::default();
    let mut detail = Vec::new();
    for m in &lenses()[..2] {
        let rep = gevrey_estimate(m, 10, 10, &conv)?;
        ensure(
            rep.non_increasing_beyond_3,
            format!("{m}: C_min grows beyond g = 3"),
        )?;
        detail.push(format!("{m}: C_min = {}", rep.c_min.to_decimal(6)));
    }
    Ok(detail.join(", "))
}

fn check_theta() -> Result<String> {
    let w = RibbonGraph::theta().weight_gl_n()?;
    ensure(
        w.poly_string() == "2*N^3 - 2*N" && w.hbar_exp == 1,
        format!("W(Θ) = {w}"),
    )?;
    Ok(format!("W(Θ) = {w}"))
}

fn check_lemma() -> Result<String> {
    let rep = lemma_bounds_report(4)?;
    ensure(
        rep.identity_failures == 0,
        format!("{} degree-identity failures", rep.identity_failures),
    )?;
    ensure(rep.degree_violations() == 0, "deg p_Γ > n + 2")?;
    ensure(
        rep.entries.iter().all(|e| e.weight.eval(0).is_zero()),
        "p_Γ(0) != 0",
    )?;
    Ok(format!(
        "{} graphs, {} markings; sharper ℓ¹ ≤ 2^n fails for {} graphs (recorded)",
        rep.entries.len(),
        rep.identity_pairs,
        rep.sharp_bound_violations()
    ))
}

fn check_maps() -> Result<String> {
    ensure(
        count_rooted_maps(0, 1)? == 2 && count_rooted_maps(0, 2)? == 9,
        "T_0(1), T_0(2)",
    )?;
    ensure(
        count_rooted_maps(0, 0)? == 1 && count_rooted_maps(1, 0)? == 0,
        "T_g(0)",
    )?;
    for n in 0..=4 {
        ensure(
            BigInt::from(count_rooted_maps(0, n)?) == tutte_planar(n),
            format!("Tutte n = {n}"),
        )?;
    }
    Ok("T_0(n) = Tutte for n ≤ 4".into())
}

fn check_printed_asympt() -> Result<String> {
    let mc = map_constants(2)?;
    let want = [
        PiScaled {
            rational: int(2),
            inv_sqrt_pi: true,
        },
        PiScaled {
            rational: rat(1, 24),
            inv_sqrt_pi: false,
        },
        PiScaled {
            rational: rat(7, 4320),
            inv_sqrt_pi: true,
        },
    ];
    ensure(mc.t == want, "t_0, t_1, t_2")?;
    let mu = mu_seq(3);
    ensure(mu[1] == Sqrt3::surd(rat(-5, 192)), "μ_1")?;
    ensure(mu[2] == Sqrt3::rational(rat(75, 8192)), "μ_2")?;
    ensure(mu[3] == Sqrt3::surd(rat(-341329, 70778880)), "μ_3")?;
    Ok("t_0..t_2 and μ_1..μ_3".into())
}

fn check_painleve() -> Result<String> {
    painleve_residual(20)?;
    ensure(solve_a_from_residual(10) == a_seq(10), "a_g from residual")?;
    ensure(a_seq(200).iter().skip(1).all(|a| a < &int(0)), "a_g < 0")?;
    Ok("residual ≡ 0 for g_max = 20; a_1..a_10 regenerated".into())
}

fn check_transseries() -> Result<String> {
    transseries_residual(12, 8)?;
    let a2 = a_squared_from_balance()?;
    ensure(
        Sqrt3::rational(a2) == instanton_action().pow(2),
        "A² != (8√3/5)²",
    )?;
    ensure(mu_from_residual(8)? == mu_seq(8), "μ_l from residual")?;
    Ok("residual ≡ 0 (g_max 12, l_max 8); A² = 192/25; μ_1..μ_8 regenerated".into())
}

fn check_triangle() -> Result<String> {
    let f = consistency_triangle(30)?;
    ensure(f[2] == Sqrt6::surd(rat(49, 221184)), "f_2")?;
    Ok("three routes agree for g ≤ 30".into())
}

fn check_k() -> Result<String> {
    let est = estimate_k(120, 8, DEFAULT_PRECISION)?;
    let k = const_eval(&k_exact(), DEFAULT_PRECISION)?;
    let digits = est.value.matching_digits(&k);
    ensure(
        digits >= 12.0,
        format!(
            "K estimate {} ({digits:.1} digits)",
            est.value.to_decimal(20)
        ),
    )?;
    Ok(format!("{} ({digits:.1} digits)", est.value.to_decimal(20)))
}

fn check_stokes() -> Result<String> {
    let est = estimate_stokes(60, 4, 6, DEFAULT_PRECISION)?;
    let digits = est.matching_digits();
    ensure(
        digits >= 8.0 && est.all_negative,
        format!(
            "S estimate {} ({digits:.1} digits)",
            est.value.to_decimal(16)
        ),
    )?;
    Ok(format!("{} ({digits:.1} digits)", est.value.to_decimal(16)))
}

fn check_tg() -> Result<String> {
    let r = tg_asymptotic_check(60, 128)?;
    let last = r.last().expect("g_max >= 10").ratio.to_f64();
    let corrected = tg_corrected_ratio(&r, 1)?.value.to_f64();
    ensure(
        (last - 1.0).abs() < 0.05,
        format!("ratio at g = 60: {last}"),
    )?;
    ensure(
        (corrected - 1.0).abs() < 0.005,
        format!("corrected ratio {corrected}"),
    )?;
    Ok(format!("g = 60: {last:.6}, corrected {corrected:.7}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope").is_err());
    }

    #[test]
    fn quick_suites_pass() {
        for s in ["numeric", "polylog"] {
            for o in run_suite(s).unwrap() {
                assert!(o.passed, "{}/{}: {}", o.suite, o.check, o.detail);
            }
        }
    }
}
