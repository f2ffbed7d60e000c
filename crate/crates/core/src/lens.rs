//! Free energy of the Lens spaces `L(d,b)`.
//!
//! The working route assembles `F_{M,g}` from the auxiliary series:
//!
//! ```text
//! F_{M,g}(τ) = (1−2g)·B_{2g}/(2g)!·(d^{2−2g}·F_g(τ/d) − F_g(τ)) + (λ/2)(τ³δ_{g,0} − τδ_{g,1})
//! ```
//!
//! The polylogarithm closed forms of `F_g` give a second, independent route.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::bernoulli::bernoulli;
use crate::numeric::scalar::{
    factorial_q, format_rational, int, parse_rational, pow_q, rat, Scalar,
};
use crate::polylog::{
    f0_closed_const, f_aux_closed, f_aux_series, f_series, polylog_exp_expansion,
    polylog_exp_expansion_const, to_const_series, LOG_MINUS_TAU,
};
use crate::{BigFloat, ConstElem, ConstSeries, QSeries, Rational};

/// `L(d,b)` with `gcd(d,b) = 1` and `0 < b < d`; `L(1,0)` is `S³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensSpace {
    d: u64,
    b: u64,
}

impl LensSpace {
    pub fn new(d: u64, b: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::arg("d must be positive"));
        }
        if d == 1 {
            return Ok(LensSpace { d: 1, b: 0 });
        }
        if b == 0 || b >= d {
            return Err(Error::arg(format!("L({d},{b}): need 0 < b < d")));
        }
        if d.gcd(&b) != 1 {
            return Err(Error::arg(format!("L({d},{b}): gcd(d,b) must be 1")));
        }
        Ok(LensSpace { d, b })
    }

    pub fn sphere() -> Self {
        LensSpace { d: 1, b: 0 }
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.d, self.b)
    }
}

/// Normalization of the Casson invariant: `λ = factor · s(b,d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaConvention {
    pub factor: Rational,
}

impl Default for LambdaConvention {
    fn default() -> Self {
        LambdaConvention { factor: rat(-1, 2) }
    }
}

impl LambdaConvention {
    pub fn scaled(factor: Rational) -> Self {
        LambdaConvention { factor }
    }

    /// Short tag such as `"dedekind*-1/2"`.
    pub fn tag(&self) -> String {
        format!("dedekind*{}", format_rational(&self.factor))
    }

    /// Parse `"default"`, a tag, or a bare rational factor.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "default" {
            return Ok(Self::default());
        }
        let body = s.strip_prefix("dedekind*").unwrap_or(s);
        parse_rational(body)
            .map(Self::scaled)
            .ok_or_else(|| Error::arg(format!("bad lambda convention {s:?}")))
    }
}

fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        x - x.floor() - rat(1, 2)
    }
}

/// `s(b,d) = Σ_{k=1}^{d−1} ((k/d))((kb/d))`.
pub fn dedekind_sum(b: i64, d: u64) -> Result<Rational> {
    if d == 0 {
        return Err(Error::arg("d must be positive"));
    }
    if BigInt::from(b).gcd(&BigInt::from(d)) != BigInt::one() {
        return Err(Error::arg(format!("gcd({b},{d}) must be 1")));
    }
    let dd = BigInt::from(d);
    Ok((1..d)
        .map(|k| {
            let k = BigInt::from(k);
            sawtooth(&Rational::new(k.clone(), dd.clone()))
                * sawtooth(&Rational::new(k * b, dd.clone()))
        })
        .fold(Rational::zero(), |a, x| a + x))
}

/// Casson invariant of `L(d,b)` under the given convention.
pub fn casson_lens(m: &LensSpace, conv: &LambdaConvention) -> Rational {
    if m.d == 1 {
        return Rational::zero();
    }
    dedekind_sum(m.b as i64, m.d).expect("validated lens space") * &conv.factor
}

fn genus_prefactor(g: u32) -> Rational {
    let g = g as i64;
    int(1 - 2 * g) * bernoulli(2 * g as usize) / factorial_q(2 * g as u64)
}

fn lambda_term(g: u32, lambda: &Rational, order: i64) -> QSeries {
    match g {
        0 => QSeries::monomial(lambda / int(2), 3, order),
        1 => QSeries::monomial(-lambda / int(2), 1, order),
        _ => QSeries::zero(order),
    }
}

/// `F_{M,g}(τ)` below `τ^order`, exact over ℚ.
pub fn free_energy_genus(
    m: &LensSpace,
    g: u32,
    order: i64,
    conv: &LambdaConvention,
) -> Result<QSeries> {
    if order < 4 {
        return Err(Error::arg("free_energy_genus needs order >= 4"));
    }
    let fg = f_aux_series(g, order)?;
    let d = int(m.d as i64);
    let scaled = fg.rescale(&d.recip())?.scale(&pow_q(&d, 2 - 2 * g as i64));
    let body = scaled.sub_series(&fg).scale(&genus_prefactor(g));
    Ok(body.add_series(&lambda_term(g, &casson_lens(m, conv), order)))
}

/// `F(τ) → F(τ/d)` for a constant-ring series carrying `log(−τ)`.
fn rescale_const(s: &ConstSeries, d: u64) -> Result<ConstSeries> {
    let r = s.rescale(&ConstElem::rational(rat(1, d as i64)))?;
    let shift = -ConstElem::log(d)?;
    let coeffs = r
        .iter()
        .map(|(_, c)| c.shift_symbol(LOG_MINUS_TAU, &shift))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConstSeries::new(r.valuation(), coeffs, r.order()))
}

/// `F_{M,g}` rebuilt from the polylogarithm closed forms of `F_g`, over the constant ring.
///
/// For `g = 0` the linear `π²` term of the closed form is taken with the sign
/// that makes the closed form agree with the defining series.
pub fn free_energy_closed_form(
    m: &LensSpace,
    g: u32,
    order: i64,
    conv: &LambdaConvention,
) -> Result<ConstSeries> {
    if order < 4 {
        return Err(Error::arg("free_energy_closed_form needs order >= 4"));
    }
    let lambda = lambda_term(g, &casson_lens(m, conv), order);
    let d = m.d;
    let weight = ConstElem::rational(pow_q(&int(d as i64), 2 - 2 * g as i64));
    let fg = match g {
        0 => f0_closed_const(1, order)?,
        1 => crate::polylog::f1_closed_const(order)?,
        _ => to_const_series(&f_aux_closed(g, order)?),
    };
    let body = rescale_const(&fg, d)?.scale(&weight).sub_series(&fg);
    Ok(body
        .scale(&ConstElem::rational(genus_prefactor(g)))
        .add_series(&to_const_series(&lambda)))
}

/// The polylogarithm part `(2g−1)B_{2g}/(2g)!·(d^{2−2g}Li_{3−2g}(e^{τ/d}) − Li_{3−2g}(e^τ))`.
pub fn closed_form_polylog_part(m: &LensSpace, g: u32, order: i64) -> Result<ConstSeries> {
    let s = 3 - 2 * g as i64;
    let li = if s >= 1 {
        polylog_exp_expansion_const(s, order)?
    } else {
        to_const_series(&polylog_exp_expansion(s, order)?)
    };
    let weight = ConstElem::rational(pow_q(&int(m.d as i64), 2 - 2 * g as i64));
    let diff = rescale_const(&li, m.d)?.scale(&weight).sub_series(&li);
    Ok(diff
        .scale(&ConstElem::rational(-genus_prefactor(g)))
        .normalized())
}

/// The correction term `a_g(τ)` exactly as displayed alongside the polylogarithm part.
pub fn correction_as_displayed(
    m: &LensSpace,
    g: u32,
    order: i64,
    conv: &LambdaConvention,
) -> Result<ConstSeries> {
    let d = m.d as i64;
    let lambda = ConstElem::rational(casson_lens(m, conv));
    let logd = ConstElem::log(m.d)?;
    let q = |x: Rational| ConstElem::rational(x);
    Ok(ConstSeries::from_fn(0, order, |k| match (g, k) {
        (0, 0) => -(q(int(d * d - 1)) * ConstElem::zeta3()),
        (0, 2) => logd.scale(&rat(-1, 2)),
        (0, 3) => lambda.scale(&rat(1, 2)),
        (1, 0) => logd.scale(&rat(1, 12)),
        (1, 1) => q(rat(1, 24) * (int(1) - rat(1, d))) - lambda.scale(&rat(1, 2)),
        _ => ConstElem::zero(),
    }))
}

/// The correction term forced by the working route:
/// `g = 0`: `(τ²/2)log d + (τ³/12)(1 − 1/d) + (d−1)π²τ/6 + (d²−1)ζ(3) + λτ³/2`;
/// `g = 1`: `−(τ/24)(1 − 1/d) − (1/12)log d − λτ/2`;
/// `g ≥ 2`: the constant `(1−2g)B_{2g}/(2g)!·(d^{2−2g} − 1)·ζ(3−2g)`.
pub fn correction_derived(
    m: &LensSpace,
    g: u32,
    order: i64,
    conv: &LambdaConvention,
) -> Result<ConstSeries> {
    let d = m.d as i64;
    let lambda = ConstElem::rational(casson_lens(m, conv));
    let logd = ConstElem::log(m.d)?;
    let q = |x: Rational| ConstElem::rational(x);
    let gi = g as i64;
    let offset = if g >= 2 {
        genus_prefactor(g)
            * (pow_q(&int(d), 2 - 2 * gi) - int(1))
            * crate::numeric::bernoulli::zeta_nonpositive((2 * gi - 3) as usize)
    } else {
        Rational::zero()
    };
    Ok(ConstSeries::from_fn(0, order, |k| match (g, k) {
        (0, 0) => q(int(d * d - 1)) * ConstElem::zeta3(),
        (0, 1) => ConstElem::pi_halves(4).scale(&rat(d - 1, 6)),
        (0, 2) => logd.scale(&rat(1, 2)),
        (0, 3) => q(rat(1, 12) * (int(1) - rat(1, d))) + lambda.scale(&rat(1, 2)),
        (1, 0) => logd.scale(&rat(-1, 12)),
        (1, 1) => q(rat(-1, 24) * (int(1) - rat(1, d))) - lambda.scale(&rat(1, 2)),
        (_, 0) if g >= 2 => q(offset.clone()),
        _ => ConstElem::zero(),
    }))
}

/// One table entry `a_{M,g,d'}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub g: u32,
    pub d: u32,
    #[serde(with = "crate::numeric::scalar::serde_rational")]
    pub coeff: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeEnergyTable {
    #[serde(rename = "d")]
    pub lens_d: u64,
    #[serde(rename = "b")]
    pub lens_b: u64,
    pub lambda_convention: String,
    pub g_max: u32,
    pub d_max: u32,
    pub entries: Vec<TableEntry>,
}

impl FreeEnergyTable {
    pub fn get(&self, g: u32, d: u32) -> Option<&Rational> {
        self.entries
            .iter()
            .find(|e| e.g == g && e.d == d)
            .map(|e| &e.coeff)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("g,d,coeff\n");
        for e in &self.entries {
            out.push_str(&format!("{},{},{}\n", e.g, e.d, format_rational(&e.coeff)));
        }
        out
    }
}

/// `a_{M,g,d'} = [τ^{d'}] F_{M,g}` for `g ≤ g_max`, `1 ≤ d' ≤ d_max`, `2g − 2 + d' > 0`.
pub fn free_energy_table(
    m: &LensSpace,
    g_max: u32,
    d_max: u32,
    conv: &LambdaConvention,
) -> Result<FreeEnergyTable> {
    if g_max < 1 || d_max < 1 {
        return Err(Error::arg("table bounds must be >= 1"));
    }
    let order = (d_max as i64 + 1).max(4);
    let rows = (0..=g_max)
        .into_par_iter()
        .map(|g| {
            let s = free_energy_genus(m, g, order, conv)?;
            Ok((1..=d_max)
                .filter(|&dp| 2 * g as i64 - 2 + dp as i64 > 0)
                .map(|dp| TableEntry {
                    g,
                    d: dp,
                    coeff: s.coeff(dp as i64).expect("within order"),
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FreeEnergyTable {
        lens_d: m.d,
        lens_b: m.b,
        lambda_convention: conv.tag(),
        g_max,
        d_max,
        entries: rows.into_iter().flatten().collect(),
    })
}

/// `Σ_g F_{M,g}(Nħ)ħ^{2g−2} − [(λ/2)(N³−N)ħ + Σ_{j<N}(N−j)(f(jħ/d) − f(jħ))]` below `ħ^order`.
pub fn sln_specialization_residual(
    m: &LensSpace,
    n: u32,
    order: i64,
    conv: &LambdaConvention,
) -> Result<QSeries> {
    if n < 1 {
        return Err(Error::arg("N must be >= 1"));
    }
    let lhs = genus_sum(m, n, order, conv)?;
    Ok(lhs.sub_series(&sln_product_side(m, n, order, conv)?))
}

/// `Σ_g F_{M,g}(Nħ)·ħ^{2g−2}` below `ħ^order`.
pub fn genus_sum(m: &LensSpace, n: u32, order: i64, conv: &LambdaConvention) -> Result<QSeries> {
    let nq = int(n as i64);
    let mut total = QSeries::zero(order);
    // terms of F_{M,g} start at τ^1, hence contribute from ħ^{2g−1}
    let mut g = 0u32;
    while 2 * g as i64 - 1 < order {
        let tau_order = (order - 2 * g as i64 + 2).max(4);
        let f = free_energy_genus(m, g, tau_order, conv)?;
        total = total.add_series(&f.rescale(&nq)?.shift(2 * g as i64 - 2));
        g += 1;
    }
    Ok(total)
}

/// `(λ/2)(N³−N)ħ + Σ_{j=1}^{N−1}(N−j)(f(jħ/d) − f(jħ))` below `ħ^order`.
pub fn sln_product_side(
    m: &LensSpace,
    n: u32,
    order: i64,
    conv: &LambdaConvention,
) -> Result<QSeries> {
    let ni = n as i64;
    let lambda = casson_lens(m, conv);
    let mut rhs = QSeries::monomial(lambda / int(2) * int(ni * ni * ni - ni), 1, order);
    let f = f_series(order.max(2))?;
    let d = int(m.d as i64);
    for j in 1..ni {
        let jq = int(j);
        let term = f
            .rescale(&(&jq / &d))?
            .sub_series(&f.rescale(&jq)?)
            .scale(&int(ni - j));
        rhs = rhs.add_series(&term);
    }
    Ok(rhs.truncate(order))
}

/// `Σ_{j=1}^{n−1} j^k` by direct summation.
pub fn power_sum_direct(n: u64, k: u32) -> BigInt {
    (1..n).map(|j| BigInt::from(j).pow(k)).sum()
}

/// For `k ≥ 1`, `Σ_{j=1}^{n−1} j^k = (1/(k+1))·Σ_{s=0}^{k} C(k+1,s) B_s n^{k+1−s}`.
pub fn power_sum_bernoulli(n: u64, k: u32) -> Rational {
    let nq = int(n as i64);
    let mut binom = BigInt::one();
    let mut acc = Rational::zero();
    for s in 0..=k {
        acc += Rational::from_integer(binom.clone())
            * bernoulli(s as usize)
            * pow_q(&nq, (k + 1 - s) as i64);
        binom = binom * BigInt::from(k + 1 - s) / BigInt::from(s + 1);
    }
    acc / int(k as i64 + 1)
}

/// `Σ_{j=1}^{N−1} (N−j) j^{2k}` by direct summation.
pub fn weighted_power_sum_direct(n: u64, k: u32) -> BigInt {
    (1..n)
        .map(|j| BigInt::from(n - j) * BigInt::from(j).pow(2 * k))
        .sum()
}

/// `Σ_{g=0}^{k} (2k)!(1−2g)/((2g)!(2k+2−2g)!)·B_{2g}·N^{2k+2−2g}`.
pub fn weighted_power_sum_bernoulli(n: u64, k: u32) -> Rational {
    let nq = int(n as i64);
    (0..=k as u64)
        .map(|g| {
            factorial_q(2 * k as u64) * int(1 - 2 * g as i64) * bernoulli(2 * g as usize)
                / (factorial_q(2 * g) * factorial_q(2 * k as u64 + 2 - 2 * g))
                * pow_q(&nq, 2 * k as i64 + 2 - 2 * g as i64)
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// Result of [`gevrey_estimate`].
#[derive(Clone, Debug)]
pub struct GevreyReport {
    /// Smallest `C` with `|a_{g,d'}| ≤ C^{g+d'}(2g)!` over the table.
    pub c_min: BigFloat,
    pub attained_at: Option<(u32, u32)>,
    /// Per genus row, the smallest admissible `C` for that row alone.
    pub per_genus: Vec<(u32, BigFloat)>,
    /// `C_min` of the table truncated at genus `g'`, for `g' = 0..=g_max`.
    pub cumulative: Vec<(u32, BigFloat)>,
    /// Cumulative `C_min` does not increase once `g' ≥ 3`.
    pub non_increasing_beyond_3: bool,
}

const GEVREY_PREC: u32 = 128;

/// `(|a|/(2g)!)^{1/(g+d)}`, the least `C` admitted by one entry.
pub fn entry_constant(g: u32, d: u32, a: &Rational) -> BigFloat {
    if a.is_zero() {
        return BigFloat::zero(GEVREY_PREC);
    }
    let x = BigFloat::from_rational(&(a.abs() / factorial_q(2 * g as u64)), GEVREY_PREC);
    let e = BigFloat::from_rational(&rat(1, (g + d) as i64), GEVREY_PREC);
    x.pow(&e)
}

/// Smallest `C` and its location over a list of entries.
pub fn gevrey_constant_of(entries: &[TableEntry]) -> (BigFloat, Option<(u32, u32)>) {
    let mut best = BigFloat::zero(GEVREY_PREC);
    let mut at = None;
    for e in entries {
        let c = entry_constant(e.g, e.d, &e.coeff);
        if c > best {
            best = c;
            at = Some((e.g, e.d));
        }
    }
    (best, at)
}

/// Empirical Gevrey-1 constant of the coefficient table.
pub fn gevrey_estimate(
    m: &LensSpace,
    g_max: u32,
    d_max: u32,
    conv: &LambdaConvention,
) -> Result<GevreyReport> {
    if g_max < 2 || d_max < 2 {
        return Err(Error::arg("gevrey_estimate needs bounds >= 2"));
    }
    let table = free_energy_table(m, g_max, d_max, conv)?;
    let (c_min, attained_at) = gevrey_constant_of(&table.entries);
    let row = |g: u32| -> Vec<TableEntry> {
        table.entries.iter().filter(|e| e.g == g).cloned().collect()
    };
    let per_genus: Vec<(u32, BigFloat)> = (0..=g_max)
        .map(|g| (g, gevrey_constant_of(&row(g)).0))
        .collect();
    let cumulative: Vec<(u32, BigFloat)> = (0..=g_max)
        .map(|gp| {
            let sub: Vec<TableEntry> = table
                .entries
                .iter()
                .filter(|e| e.g <= gp)
                .cloned()
                .collect();
            (gp, gevrey_constant_of(&sub).0)
        })
        .collect();
    let non_increasing_beyond_3 = cumulative
        .windows(2)
        .filter(|w| w[0].0 >= 3)
        .all(|w| w[1].1 <= w[0].1);
    Ok(GevreyReport {
        c_min,
        attained_at,
        per_genus,
        cumulative,
        non_increasing_beyond_3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conv() -> LambdaConvention {
        LambdaConvention::default()
    }

    fn l(d: u64, b: u64) -> LensSpace {
        LensSpace::new(d, b).unwrap()
    }

    #[test]
    fn lens_validation() {
        assert_eq!(LensSpace::new(1, 7).unwrap(), LensSpace::sphere());
        assert!(LensSpace::new(4, 2).is_err());
        assert!(LensSpace::new(3, 3).is_err());
        assert!(LensSpace::new(0, 0).is_err());
        assert_eq!(l(5, 2).to_string(), "L(5,2)");
    }

    #[test]
    fn dedekind_values() {
        assert_eq!(dedekind_sum(4, 1).unwrap(), Rational::zero());
        assert_eq!(dedekind_sum(1, 2).unwrap(), Rational::zero());
        assert_eq!(dedekind_sum(1, 3).unwrap(), rat(1, 18));
        assert!(dedekind_sum(2, 4).is_err());
        // reciprocity s(b,d) + s(d,b) = −1/4 + (b/d + d/b + 1/(bd))/12
        for (b, d) in [(2i64, 5u64), (3, 7), (5, 12), (7, 10)] {
            let lhs = dedekind_sum(b, d).unwrap() + dedekind_sum(d as i64, b as u64).unwrap();
            let (bq, dq) = (int(b), int(d as i64));
            let rhs = rat(-1, 4) + (&bq / &dq + &dq / &bq + (&bq * &dq).recip()) / int(12);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn casson_values() {
        assert_eq!(casson_lens(&LensSpace::sphere(), &conv()), Rational::zero());
        assert_eq!(casson_lens(&l(2, 1), &conv()), Rational::zero());
        assert_eq!(casson_lens(&l(3, 1), &conv()), rat(-1, 36));
        assert_eq!(
            casson_lens(&l(3, 1), &LambdaConvention::scaled(int(3))),
            rat(1, 6)
        );
        assert_eq!(LambdaConvention::parse("default").unwrap(), conv());
        assert_eq!(LambdaConvention::parse(&conv().tag()).unwrap(), conv());
        assert_eq!(LambdaConvention::parse("1/12").unwrap().factor, rat(1, 12));
    }

    #[test]
    fn sphere_is_trivial() {
        for g in 0..5 {
            assert!(free_energy_genus(&LensSpace::sphere(), g, 12, &conv())
                .unwrap()
                .is_zero());
        }
        let t = free_energy_table(&LensSpace::sphere(), 4, 6, &conv()).unwrap();
        assert!(t.entries.iter().all(|e| e.coeff.is_zero()));
        let rep = gevrey_estimate(&LensSpace::sphere(), 4, 4, &conv()).unwrap();
        assert!(rep.c_min.is_zero());
    }

    #[test]
    fn table_entries() {
        let t = free_energy_table(&l(2, 1), 3, 6, &conv()).unwrap();
        assert_eq!(t.get(0, 4), Some(&rat(-1, 384)));
        assert_eq!(t.get(1, 1), Some(&Rational::zero()));
        assert_eq!(t.get(0, 2), None);
        assert_eq!(t.get(0, 3), Some(&Rational::zero()));
        let t3 = free_energy_table(&l(3, 1), 2, 4, &conv()).unwrap();
        // (g=1, d'=1) is −λ/2 because F_1 is even
        assert_eq!(t3.get(1, 1), Some(&rat(1, 72)));
        assert!(t.to_csv().starts_with("g,d,coeff\n"));
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["d"], 2);
        assert_eq!(json["lambda_convention"], "dedekind*-1/2");
    }

    #[test]
    fn parity() {
        for m in [l(3, 1), l(5, 2)] {
            for g in 0..5 {
                let f = free_energy_genus(&m, g, 16, &conv()).unwrap();
                let lam = lambda_term(g, &casson_lens(&m, &conv()), 16);
                assert!(f.sub_series(&lam).is_even(), "{m} g {g}");
            }
        }
    }

    #[test]
    fn closed_route_matches() {
        for m in [l(2, 1), l(3, 1), l(3, 2), l(5, 2)] {
            for g in 0..=4 {
                let a = to_const_series(&free_energy_genus(&m, g, 14, &conv()).unwrap());
                let b = free_energy_closed_form(&m, g, 14, &conv()).unwrap();
                assert_eq!(a, b, "{m} g {g}");
            }
        }
    }

    #[test]
    fn closed_form_corrections() {
        for m in [l(2, 1), l(3, 1), l(5, 2)] {
            for g in 0..=4 {
                let ftemp = to_const_series(&free_energy_genus(&m, g, 12, &conv()).unwrap());
                let poly = closed_form_polylog_part(&m, g, 12).unwrap();
                let derived = correction_derived(&m, g, 12, &conv()).unwrap();
                assert_eq!(ftemp, poly.add_series(&derived), "{m} g {g}");
            }
        }
        // g = 2, L(2,1): the constant left over is 1/3840
        let c = correction_derived(&l(2, 1), 2, 4, &conv()).unwrap();
        assert_eq!(c.coeff(0).unwrap(), ConstElem::rational(rat(1, 3840)));
        let printed = correction_as_displayed(&l(2, 1), 2, 4, &conv()).unwrap();
        assert!(printed.is_zero());
    }

    #[test]
    fn sln_residual_vanishes() {
        for m in [l(2, 1), l(3, 1), l(5, 2)] {
            for n in 1..=4 {
                assert!(
                    sln_specialization_residual(&m, n, 10, &conv())
                        .unwrap()
                        .is_zero(),
                    "{m} N {n}"
                );
            }
        }
        // all-genus cancellation at N = 1
        assert!(genus_sum(&l(3, 1), 1, 12, &conv()).unwrap().is_zero());
        // λ-convention independence
        let other = LambdaConvention::scaled(rat(7, 5));
        assert!(sln_specialization_residual(&l(3, 1), 3, 10, &other)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn power_sums() {
        for n in 1..12u64 {
            for k in 1..8u32 {
                assert_eq!(
                    Rational::from_integer(power_sum_direct(n, k)),
                    power_sum_bernoulli(n, k)
                );
                assert_eq!(
                    Rational::from_integer(weighted_power_sum_direct(n, k)),
                    weighted_power_sum_bernoulli(n, k)
                );
            }
        }
    }

    #[test]
    fn gevrey_scaling() {
        let t = free_energy_table(&l(3, 1), 4, 5, &conv()).unwrap();
        let (c, _) = gevrey_constant_of(&t.entries);
        let scaled: Vec<TableEntry> = t
            .entries
            .iter()
            .map(|e| TableEntry {
                coeff: &e.coeff * pow_q(&int(2), (e.g + e.d) as i64),
                ..e.clone()
            })
            .collect();
        let (c2, _) = gevrey_constant_of(&scaled);
        assert!(c2.rel_diff(&(&c * &BigFloat::from_int(2, GEVREY_PREC))) < 1e-30);
    }

    #[test]
    fn gevrey_trend() {
        let rep = gevrey_estimate(&l(2, 1), 6, 6, &conv()).unwrap();
        assert!(rep.non_increasing_beyond_3);
        assert_eq!(rep.attained_at, Some((0, 4)));
        assert!((rep.c_min.to_f64() - 0.22590).abs() < 1e-4);
    }
}
