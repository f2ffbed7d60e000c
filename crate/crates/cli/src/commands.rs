//! One handler per subcommand, and the table mapping commands to library operations.

use std::io::Write;

use gevrey::asympt::{
    a_seq, estimate_stokes, instanton_action, k_exact, map_constants, mu_seq, painleve_residual,
    richardson_from, tg_asymptotic_check, tg_corrected_ratio, transseries_residual,
};
use gevrey::lens::{
    casson_lens, dedekind_sum, free_energy_genus, free_energy_table, gevrey_estimate,
    sln_specialization_residual, LambdaConvention, LensSpace,
};
use gevrey::numeric::const_elem::ConstTerm;
use gevrey::numeric::scalar::{int, parse_rational, pow_q};
use gevrey::numeric::series::SeriesRecord;
use gevrey::polylog::{
    f_aux_closed, f_aux_series, f_series, polylog_exp_expansion, polylog_rational,
};
use gevrey::ribbon::{
    count_rooted_maps, enumerate_trivalent, graph_count_bounds, lemma_bounds_report,
    parse_ribbon_graph, rooted_maps_table, write_ribbon_graph,
};
use gevrey::verify::run_suite;
use gevrey::{
    bernoulli, const_eval, modified_bernoulli, series_op, BigFloat, ConstElem, Operand, QSeries,
    Rational, SeriesOp, Sqrt3,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::cli::*;
use crate::render::{Exact, Numeric, Report};
use crate::CliError;

/// A command and the library operations it reaches.
#[derive(Clone, Copy, Debug)]
pub struct Route {
    pub command: &'static str,
    pub operations: &'static [&'static str],
}

/// Every public operation of the library modules, as `module::name`.
pub const MODULE_OPERATIONS: &[&str] = &[
    "numeric::bernoulli",
    "numeric::modified_bernoulli",
    "numeric::series_op",
    "numeric::const_eval",
    "polylog::polylog_rational",
    "polylog::polylog_exp_expansion",
    "polylog::f_series",
    "polylog::f_aux_series",
    "polylog::f_aux_closed",
    "lens::dedekind_sum",
    "lens::casson_lens",
    "lens::free_energy_genus",
    "lens::free_energy_table",
    "lens::sln_specialization_residual",
    "lens::gevrey_estimate",
    "ribbon::classify_marking",
    "ribbon::weight_gl_n",
    "ribbon::enumerate_trivalent",
    "ribbon::lemma_bounds_report",
    "ribbon::count_rooted_maps",
    "asympt::a_seq",
    "asympt::map_constants",
    "asympt::mu_seq",
    "asympt::painleve_residual",
    "asympt::transseries_residual",
    "asympt::richardson",
    "asympt::estimate_stokes",
    "asympt::tg_asymptotic_check",
    "verify::run_suite",
    "cli::cache",
];

pub const DISPATCH: &[Route] = &[
    Route {
        command: "bernoulli",
        operations: &["numeric::bernoulli", "numeric::modified_bernoulli"],
    },
    Route {
        command: "series",
        operations: &["numeric::series_op"],
    },
    Route {
        command: "const-eval",
        operations: &["numeric::const_eval"],
    },
    Route {
        command: "polylog",
        operations: &[
            "polylog::polylog_rational",
            "polylog::polylog_exp_expansion",
        ],
    },
    Route {
        command: "f-series",
        operations: &["polylog::f_series"],
    },
    Route {
        command: "f-aux",
        operations: &["polylog::f_aux_series", "polylog::f_aux_closed"],
    },
    Route {
        command: "lens-fe",
        operations: &[
            "lens::free_energy_genus",
            "lens::casson_lens",
            "lens::dedekind_sum",
        ],
    },
    Route {
        command: "lens-table",
        operations: &["lens::free_energy_table"],
    },
    Route {
        command: "sln-check",
        operations: &["lens::sln_specialization_residual"],
    },
    Route {
        command: "gevrey",
        operations: &["lens::gevrey_estimate"],
    },
    Route {
        command: "weight",
        operations: &["ribbon::weight_gl_n", "ribbon::classify_marking"],
    },
    Route {
        command: "enumerate",
        operations: &["ribbon::enumerate_trivalent"],
    },
    Route {
        command: "lemma-bounds",
        operations: &["ribbon::lemma_bounds_report"],
    },
    Route {
        command: "count-maps",
        operations: &["ribbon::count_rooted_maps"],
    },
    Route {
        command: "a-seq",
        operations: &["asympt::a_seq"],
    },
    Route {
        command: "map-constants",
        operations: &["asympt::map_constants"],
    },
    Route {
        command: "mu-seq",
        operations: &["asympt::mu_seq"],
    },
    Route {
        command: "painleve-check",
        operations: &["asympt::painleve_residual"],
    },
    Route {
        command: "transseries-check",
        operations: &["asympt::transseries_residual"],
    },
    Route {
        command: "richardson",
        operations: &["asympt::richardson"],
    },
    Route {
        command: "stokes",
        operations: &["asympt::estimate_stokes"],
    },
    Route {
        command: "tg-check",
        operations: &["asympt::tg_asymptotic_check"],
    },
    Route {
        command: "verify",
        operations: &["verify::run_suite"],
    },
    Route {
        command: "cache",
        operations: &["cli::cache"],
    },
];

type CmdResult = Result<Report, CliError>;

struct Ctx<'a> {
    num: Numeric,
    conv: LambdaConvention,
    cache: Option<Cache>,
    warn: &'a mut dyn Write,
}

pub(crate) fn execute(cli: &Cli, warn: &mut dyn Write) -> CmdResult {
    let g = &cli.global;
    let mut ctx = Ctx {
        num: Numeric::new(g.approx, g.precision, g.digits),
        conv: LambdaConvention::parse(&g.lambda_convention)?,
        cache: Cache::configured(g.cache_dir.as_deref()),
        warn,
    };
    let ctx = &mut ctx;
    match &cli.command {
        Command::Bernoulli(a) => cmd_bernoulli(ctx, a),
        Command::Series(a) => cmd_series(ctx, a),
        Command::ConstEval(a) => cmd_const_eval(ctx, a),
        Command::Polylog(a) => cmd_polylog(ctx, a),
        Command::FSeries(a) => cmd_f_series(ctx, a),
        Command::FAux(a) => cmd_f_aux(ctx, a),
        Command::LensFe(a) => cmd_lens_fe(ctx, a),
        Command::LensTable(a) => cmd_lens_table(ctx, a),
        Command::SlnCheck(a) => cmd_sln_check(ctx, a),
        Command::Gevrey(a) => cmd_gevrey(ctx, a),
        Command::Weight(a) => cmd_weight(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::LemmaBounds(a) => cmd_lemma_bounds(a),
        Command::CountMaps(a) => cmd_count_maps(a),
        Command::ASeq(a) => cmd_a_seq(ctx, a),
        Command::MapConstants(a) => cmd_map_constants(ctx, a),
        Command::MuSeq(a) => cmd_mu_seq(ctx, a),
        Command::PainleveCheck(a) => cmd_painleve(a),
        Command::TransseriesCheck(a) => cmd_transseries(a),
        Command::Richardson(a) => cmd_richardson(ctx, a),
        Command::Stokes(a) => cmd_stokes(ctx, a),
        Command::TgCheck(a) => cmd_tg_check(ctx, a),
        Command::Verify(a) => cmd_verify(a),
        Command::Cache(a) => cmd_cache(ctx, a),
    }
}

fn arg_err(msg: impl Into<String>) -> CliError {
    CliError::Argument(msg.into())
}

/// Inline text, or the contents of `path` for `@path`.
fn inline_or_file(s: &str) -> Result<String, CliError> {
    match s.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| arg_err(format!("cannot read {path}: {e}")))
        }
        None => Ok(s.to_string()),
    }
}

fn parse_series(s: &str) -> Result<QSeries, CliError> {
    let rec: SeriesRecord = serde_json::from_str(&inline_or_file(s)?)
        .map_err(|e| arg_err(format!("bad series JSON: {e}")))?;
    Ok(QSeries::from_record(&rec)?)
}

fn parse_q(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).ok_or_else(|| arg_err(format!("bad rational {s:?}")))
}

/// `p/q`, an integer, or a decimal such as `-1.25e-3`, read exactly.
fn parse_number(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some(q) = parse_rational(s) {
        return Some(q);
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if !frac.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = match format!("{int_part}{frac}").as_str() {
        "" | "-" | "+" => return None,
        d => d.parse().ok()?,
    };
    let shift = exp as i64 - frac.len() as i64;
    Some(Rational::from_integer(n) * pow_q(&int(10), shift))
}

fn lens(a: &LensArgs) -> Result<LensSpace, CliError> {
    Ok(LensSpace::new(a.d, a.b)?)
}

fn put_lens(r: &mut Report, m: &LensSpace, conv: &LambdaConvention) {
    r.put("d", m.d());
    r.put("b", m.b());
    r.put("lambda_convention", conv.tag());
}

fn cmd_bernoulli(ctx: &mut Ctx, a: &BernoulliArgs) -> CmdResult {
    let value = if a.modified {
        modified_bernoulli(a.n)?
    } else {
        bernoulli(a.n)
    };
    let mut r = Report::new("bernoulli");
    r.put("n", a.n);
    r.put("modified", a.modified);
    r.exact("value", &value, &ctx.num);
    Ok(r)
}

fn cmd_series(ctx: &mut Ctx, a: &SeriesArgs) -> CmdResult {
    let kind = match a.op {
        SeriesOpArg::Add => SeriesOp::Add,
        SeriesOpArg::Mul => SeriesOp::Mul,
        SeriesOpArg::Div => SeriesOp::Div,
        SeriesOpArg::Exp => SeriesOp::Exp,
        SeriesOpArg::Log => SeriesOp::Log,
        SeriesOpArg::Derivative => SeriesOp::Derivative,
        SeriesOpArg::Antiderivative => SeriesOp::Antiderivative,
        SeriesOpArg::Rescale => SeriesOp::Rescale,
    };
    let x = parse_series(&a.a)?;
    let b = a.b.as_deref().map(parse_series).transpose()?;
    let c = a.scalar.as_deref().map(parse_q).transpose()?;
    let operand = match (&b, &c) {
        (Some(s), _) => Operand::Series(s),
        (None, Some(q)) => Operand::Scalar(q),
        (None, None) => Operand::None,
    };
    let result = series_op(kind, &x, operand)?;
    let mut r = Report::new("series");
    r.put("op", format!("{:?}", a.op).to_lowercase());
    r.exact("result", &result, &ctx.num);
    r.table("result.terms");
    Ok(r)
}

fn cmd_const_eval(ctx: &mut Ctx, a: &ConstEvalArgs) -> CmdResult {
    let terms: Vec<ConstTerm> = serde_json::from_str(&inline_or_file(&a.expr)?)
        .map_err(|e| arg_err(format!("bad constant JSON: {e}")))?;
    let c = ConstElem::from_records(&terms)?;
    let x = const_eval(&c, ctx.num.precision)?;
    let mut r = Report::new("const-eval");
    r.put("expr", c.exact());
    r.float("value", &x, &ctx.num);
    Ok(r)
}

fn cmd_polylog(ctx: &mut Ctx, a: &PolylogArgs) -> CmdResult {
    let mut r = Report::new("polylog");
    r.put("alpha", a.alpha);
    match a.order {
        Some(order) => {
            let s = polylog_exp_expansion(a.alpha, order)?;
            r.put("variable", "t");
            r.exact("series", &s, &ctx.num);
            r.table("series.terms");
        }
        None => {
            let f = polylog_rational(a.alpha)?;
            r.put("variable", "x");
            r.put(
                "numerator",
                f.numerator
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>(),
            );
            r.put("pole_order", f.pole_order);
            r.put("display", f.to_string());
            r.put("palindromic", f.is_palindromic());
            r.table("numerator");
        }
    }
    Ok(r)
}

fn series_report(ctx: &Ctx, name: &str, s: &QSeries) -> Report {
    let mut r = Report::new(name);
    r.exact("series", s, &ctx.num);
    r.table("series.terms");
    r
}

fn cmd_f_series(ctx: &mut Ctx, a: &OrderArgs) -> CmdResult {
    let mut r = series_report(ctx, "f-series", &f_series(a.order)?);
    r.put("order", a.order);
    Ok(r)
}

fn cmd_f_aux(ctx: &mut Ctx, a: &FAuxArgs) -> CmdResult {
    let s = if a.closed {
        f_aux_closed(a.g, a.order)?
    } else {
        f_aux_series(a.g, a.order)?
    };
    let mut r = series_report(ctx, "f-aux", &s);
    r.put("g", a.g);
    r.put("closed", a.closed);
    Ok(r)
}

fn cmd_lens_fe(ctx: &mut Ctx, a: &LensFeArgs) -> CmdResult {
    let m = lens(&a.lens)?;
    let mut r = Report::new("lens-fe");
    put_lens(&mut r, &m, &ctx.conv);
    if a.dedekind {
        r.exact(
            "dedekind_sum",
            &dedekind_sum(m.b() as i64, m.d())?,
            &ctx.num,
        );
    } else if a.casson {
        r.exact("casson", &casson_lens(&m, &ctx.conv), &ctx.num);
    } else {
        let (g, order) = (
            a.g.expect("required by clap"),
            a.order.expect("required by clap"),
        );
        let s = free_energy_genus(&m, g, order, &ctx.conv)?;
        r.put("g", g);
        r.exact("series", &s, &ctx.num);
        r.table("series.terms");
    }
    Ok(r)
}

fn cmd_lens_table(ctx: &mut Ctx, a: &LensBoundsArgs) -> CmdResult {
    let m = lens(&a.lens)?;
    let t = free_energy_table(&m, a.g_max, a.d_max, &ctx.conv)?;
    let mut r = Report::new("lens-table");
    put_lens(&mut r, &m, &ctx.conv);
    r.put("g_max", t.g_max);
    r.put("d_max", t.d_max);
    let mut entries = serde_json::to_value(&t.entries).expect("entries serialize");
    if ctx.num.approx {
        for (e, v) in t.entries.iter().zip(entries.as_array_mut().expect("array")) {
            v["coeff_approx"] = e.coeff.approx(&ctx.num);
        }
    }
    r.put("entries", entries);
    r.csv(t.to_csv());
    Ok(r)
}

fn cmd_sln_check(ctx: &mut Ctx, a: &SlnArgs) -> CmdResult {
    let m = lens(&a.lens)?;
    let res = sln_specialization_residual(&m, a.n, a.order, &ctx.conv)?;
    let mut r = Report::new("sln-check");
    put_lens(&mut r, &m, &ctx.conv);
    r.put("N", a.n);
    r.put("order", a.order);
    r.put("vanishes", res.is_zero());
    r.exact("residual", &res, &ctx.num);
    r.table("residual.terms");
    if !res.is_zero() {
        r.fail(format!(
            "sl_N specialization residual is nonzero for {m}, N = {}",
            a.n
        ));
    }
    Ok(r)
}

fn cmd_gevrey(ctx: &mut Ctx, a: &LensBoundsArgs) -> CmdResult {
    let m = lens(&a.lens)?;
    let rep = gevrey_estimate(&m, a.g_max, a.d_max, &ctx.conv)?;
    let num = &ctx.num;
    let mut r = Report::new("gevrey");
    put_lens(&mut r, &m, &ctx.conv);
    r.put("g_max", a.g_max);
    r.put("d_max", a.d_max);
    r.float("c_min", &rep.c_min, num);
    r.put(
        "attained_at",
        rep.attained_at.map(|(g, d)| json!({"g": g, "d": d})),
    );
    let rows: Vec<Value> = rep
        .per_genus
        .iter()
        .zip(&rep.cumulative)
        .map(|((g, row), (_, cum))| json!({"g": g, "row_c": num.decimal(row), "cumulative_c": num.decimal(cum)}))
        .collect();
    r.put("rows", rows);
    r.put("non_increasing_beyond_3", rep.non_increasing_beyond_3);
    r.table("rows");
    Ok(r)
}

fn cmd_weight(a: &WeightArgs) -> CmdResult {
    let text = std::fs::read_to_string(&a.graph)
        .map_err(|e| arg_err(format!("cannot read {}: {e}", a.graph.display())))?;
    let g = parse_ribbon_graph(&text)?;
    let mut r = Report::new("weight");
    match &a.marking {
        Some(bits) => {
            let marking: Vec<bool> = bits
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(arg_err(format!(
                        "marking must be a 0/1 string, got {bits:?}"
                    ))),
                })
                .collect::<Result<_, _>>()?;
            let s = g.classify_marking(&marking)?;
            r.put("marking", bits);
            r.put("genus", s.genus);
            r.put("boundary", s.boundary);
        }
        None => {
            let w = g.weight_gl_n()?;
            r.put("poly", w.poly_string());
            r.put("hbar_exp", w.hbar_exp);
        }
    }
    Ok(r)
}

fn cmd_enumerate(a: &EnumerateArgs) -> CmdResult {
    let rep = enumerate_trivalent(a.n_max)?;
    let mut r = Report::new("enumerate");
    r.put("n_max", a.n_max);
    r.put("total", rep.graphs.len());
    r.put("counts", &rep.counts);
    if a.list {
        r.put(
            "graphs",
            rep.graphs
                .iter()
                .map(write_ribbon_graph)
                .collect::<Vec<_>>(),
        );
    }
    r.table("counts");
    Ok(r)
}

fn cmd_lemma_bounds(a: &NMaxArgs) -> CmdResult {
    let rep = lemma_bounds_report(a.n_max)?;
    let mut r = Report::new("lemma-bounds");
    r.put("n_max", a.n_max);
    r.put("graphs", rep.entries.len());
    r.put("identity_pairs", rep.identity_pairs);
    r.put("identity_failures", rep.identity_failures);
    r.put("degree_violations", rep.degree_violations());
    r.put("marking_bound_violations", rep.marking_bound_violations());
    r.put("sharp_bound_violations", rep.sharp_bound_violations());
    let rows: Vec<Value> = rep
        .entries
        .iter()
        .map(|e| {
            json!({
                "degree": e.degree,
                "poly": e.weight.poly_string(),
                "poly_degree": e.poly_degree,
                "l1_norm": e.l1_norm.to_string(),
                "degree_ok": e.degree_ok(),
                "marking_bound_ok": e.marking_bound_ok(),
                "sharp_bound_ok": e.sharp_bound_ok(),
            })
        })
        .collect();
    r.put("entries", rows);
    if a.n_max >= 1 {
        r.put("graph_counts_vs_maps", graph_count_bounds(1)?);
    }
    r.table("entries");
    if rep.identity_failures > 0
        || rep.degree_violations() > 0
        || rep.marking_bound_violations() > 0
    {
        r.fail("degree identity or coefficient bound violated");
    }
    Ok(r)
}

fn cmd_count_maps(a: &CountMapsArgs) -> CmdResult {
    let mut r = Report::new("count-maps");
    match (a.g, a.n, a.g_max, a.n_max) {
        (Some(g), Some(n), _, _) => {
            r.put("g", g);
            r.put("n", n);
            r.put("count", count_rooted_maps(g, n)?);
        }
        (_, _, Some(g_max), Some(n_max)) => {
            r.put("g_max", g_max);
            r.put("n_max", n_max);
            r.put("counts", rooted_maps_table(g_max, n_max)?);
            r.table("counts");
        }
        _ => return Err(arg_err("give either --g and --n, or --g-max and --n-max")),
    }
    Ok(r)
}

/// Encoding of one cached sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Seq {
    A,
    U,
    Mu,
}

impl Seq {
    const ALL: [Seq; 3] = [Seq::A, Seq::U, Seq::Mu];

    fn name(self) -> &'static str {
        match self {
            Seq::A => "a",
            Seq::U => "u",
            Seq::Mu => "mu",
        }
    }

    fn parse(s: &str) -> Result<Seq, CliError> {
        Seq::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| arg_err(format!("unknown cache key {s:?} (expected a, u or mu)")))
    }

    /// Exact JSON values for indices `0..=max`.
    fn compute(self, max: usize) -> Result<Vec<Value>, CliError> {
        Ok(match self {
            Seq::A => a_seq(max).exact_vec(),
            Seq::U => map_constants(max)?.u.exact_vec(),
            Seq::Mu => mu_seq(max).exact_vec(),
        })
    }

    fn valid(self, v: &Value) -> bool {
        match self {
            Seq::A | Seq::U => v.as_str().and_then(parse_rational).is_some(),
            Seq::Mu => decode_sqrt3(v).is_some(),
        }
    }
}

trait ExactVec {
    fn exact_vec(&self) -> Vec<Value>;
}

impl<T: Exact> ExactVec for Vec<T> {
    fn exact_vec(&self) -> Vec<Value> {
        self.iter().map(Exact::exact).collect()
    }
}

fn decode_rational(v: &Value) -> Option<Rational> {
    v.as_str().and_then(parse_rational)
}

fn decode_sqrt3(v: &Value) -> Option<Sqrt3> {
    if v.get("surd")?.as_i64()? != 3 {
        return None;
    }
    let rational = parse_rational(v.get("rational")?.as_str()?)?;
    let radical = parse_rational(v.get("radical")?.as_str()?)?;
    Some(Sqrt3::new(rational, radical))
}

enum Lookup {
    Hit(Vec<Value>),
    Miss,
}

fn cache_lookup(ctx: &mut Ctx, seq: Seq, max: usize) -> Lookup {
    let Some(cache) = &ctx.cache else {
        return Lookup::Miss;
    };
    match cache.load(seq.name(), ctx.warn) {
        Some(vals) if vals.len() > max => {
            let vals: Vec<Value> = vals[..=max].to_vec();
            if vals.iter().all(|v| seq.valid(v)) {
                Lookup::Hit(vals)
            } else {
                let _ = writeln!(
                    ctx.warn,
                    "warning: cached sequence {} has malformed values; recomputing",
                    seq.name()
                );
                Lookup::Miss
            }
        }
        _ => Lookup::Miss,
    }
}

/// Values `0..=max` of `seq`, through the cache when one is configured.
fn cached_values(ctx: &mut Ctx, seq: Seq, max: usize) -> Result<(Vec<Value>, bool), CliError> {
    if let Lookup::Hit(v) = cache_lookup(ctx, seq, max) {
        return Ok((v, true));
    }
    let vals = seq.compute(max)?;
    if let Some(cache) = &ctx.cache {
        cache.store(seq.name(), &vals, ctx.warn);
    }
    Ok((vals, false))
}

fn cmd_a_seq(ctx: &mut Ctx, a: &GMaxArgs) -> CmdResult {
    let (vals, _) = cached_values(ctx, Seq::A, a.g_max)?;
    let a_g: Vec<Rational> = vals
        .iter()
        .map(|v| decode_rational(v).expect("validated"))
        .collect();
    let mut r = Report::new("a-seq");
    r.put("g_max", a.g_max);
    r.exact("values", a_g.as_slice(), &ctx.num);
    r.table("values");
    Ok(r)
}

fn cmd_map_constants(ctx: &mut Ctx, a: &GMaxArgs) -> CmdResult {
    let mc = map_constants(a.g_max)?;
    let num = &ctx.num;
    let rows: Vec<Value> = (0..=a.g_max)
        .map(|g| {
            let mut row =
                json!({"g": g, "f": mc.f[g].exact(), "t": mc.t[g].exact(), "u": mc.u[g].exact()});
            if num.approx {
                row["f_approx"] = mc.f[g].approx(num);
                row["t_approx"] = mc.t[g].approx(num);
                row["u_approx"] = mc.u[g].approx(num);
            }
            row
        })
        .collect();
    let mut r = Report::new("map-constants");
    r.put("g_max", a.g_max);
    r.put("rows", rows);
    r.table("rows");
    Ok(r)
}

fn cmd_mu_seq(ctx: &mut Ctx, a: &LMaxArgs) -> CmdResult {
    let (vals, _) = cached_values(ctx, Seq::Mu, a.l_max)?;
    let mu: Vec<Sqrt3> = vals
        .iter()
        .map(|v| decode_sqrt3(v).expect("validated"))
        .collect();
    let mut r = Report::new("mu-seq");
    r.put("l_max", a.l_max);
    r.exact("action", &instanton_action(), &ctx.num);
    r.exact("values", mu.as_slice(), &ctx.num);
    r.table("values");
    Ok(r)
}

fn cmd_painleve(a: &GMaxArgs) -> CmdResult {
    let res = painleve_residual(a.g_max)?;
    let mut r = Report::new("painleve-check");
    r.put("g_max", a.g_max);
    r.put("variable", "v = z^(-1/8)");
    r.put("horizon", res.order());
    r.put("vanishes", res.is_zero());
    Ok(r)
}

fn cmd_transseries(a: &TransseriesArgs) -> CmdResult {
    let g_max = a.g_max.unwrap_or(a.l_max / 2 + 1);
    let res = transseries_residual(g_max, a.l_max)?;
    let mut r = Report::new("transseries-check");
    r.put("g_max", g_max);
    r.put("l_max", a.l_max);
    r.put("variable", "v = z^(-1/8)");
    r.put("horizon", res.body.order());
    r.put("vanishes", res.is_zero());
    Ok(r)
}

fn cmd_richardson(ctx: &mut Ctx, a: &RichardsonArgs) -> CmdResult {
    let prec = ctx.num.precision;
    let (source, first, exact): (String, u64, Vec<Rational>) = match &a.values {
        Some(list) => {
            let vals = list
                .split(',')
                .map(|s| parse_number(s).ok_or_else(|| arg_err(format!("bad value {s:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            ("values".into(), a.first_index, vals)
        }
        None => {
            let (vals, _) = cached_values(ctx, Seq::U, a.g_max)?;
            let u: Vec<Rational> = vals[1..]
                .iter()
                .map(|v| decode_rational(v).expect("validated"))
                .collect();
            ("u".into(), 1, u)
        }
    };
    let seq: Vec<BigFloat> = exact
        .iter()
        .map(|q| BigFloat::from_rational(q, prec))
        .collect();
    let est = richardson_from(&seq, first, a.depth)?;
    let mut r = Report::new("richardson");
    r.put("sequence", &source);
    r.put("first_index", first);
    r.put("length", seq.len());
    r.put("depth", a.depth);
    r.float("value", &est.value, &ctx.num);
    r.put("stability", ctx.num.decimal(&est.stability));
    if source == "u" {
        let k = const_eval(&k_exact(), prec)?;
        r.put("reference", ctx.num.decimal(&k));
        r.put(
            "matching_digits",
            format!("{:.2}", est.value.matching_digits(&k)),
        );
    }
    Ok(r)
}

fn cmd_stokes(ctx: &mut Ctx, a: &StokesArgs) -> CmdResult {
    let est = estimate_stokes(a.g_max, a.l_max, a.depth, ctx.num.precision)?;
    let num = &ctx.num;
    let mut r = Report::new("stokes");
    r.put("g_max", a.g_max);
    r.put("l_max", a.l_max);
    r.put("depth", a.depth);
    r.float("value", &est.value, num);
    r.put("stability", num.decimal(&est.stability));
    r.put("raw", num.decimal(&est.raw));
    r.put("exact", num.decimal(&est.exact));
    r.put("matching_digits", format!("{:.2}", est.matching_digits()));
    r.put("all_negative", est.all_negative);
    if !est.all_negative {
        r.fail("the Stokes estimates change sign");
    }
    Ok(r)
}

fn cmd_tg_check(ctx: &mut Ctx, a: &TgArgs) -> CmdResult {
    let ratios = tg_asymptotic_check(a.g_max, ctx.num.precision)?;
    let num = &ctx.num;
    let mut r = Report::new("tg-check");
    r.put("g_max", a.g_max);
    let rows: Vec<Value> = ratios
        .iter()
        .map(|x| json!({"g": x.g, "ratio": num.decimal(&x.ratio)}))
        .collect();
    r.put("ratios", rows);
    r.float_meta(num.precision, num);
    if a.depth > 0 {
        let c = tg_corrected_ratio(&ratios, a.depth)?;
        r.put("depth", a.depth);
        r.put("corrected", num.decimal(&c.value));
        r.put("corrected_stability", num.decimal(&c.stability));
    }
    r.table("ratios");
    Ok(r)
}

fn cmd_verify(a: &VerifyArgs) -> CmdResult {
    let outcomes = run_suite(&a.suite)?;
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let rows: Vec<Value> = outcomes
        .iter()
        .map(|o| {
            json!({
                "suite": o.suite,
                "check": o.check,
                "status": if o.passed { "PASS" } else { "FAIL" },
                "detail": o.detail,
            })
        })
        .collect();
    let mut r = Report::new("verify");
    r.put("suite", &a.suite);
    r.put("checks", rows);
    r.put("passed", outcomes.len() - failed);
    r.put("failed", failed);
    r.table("checks");
    if failed > 0 {
        r.fail(format!("{failed} check(s) failed"));
    }
    Ok(r)
}

fn cmd_cache(ctx: &mut Ctx, a: &CacheArgs) -> CmdResult {
    let cache = ctx
        .cache
        .clone()
        .ok_or_else(|| arg_err("no cache directory; pass --cache-dir or set GEVREY_CACHE_DIR"))?;
    let mut r = Report::new("cache");
    r.put("dir", cache.dir().display().to_string());
    match a.op {
        CacheOp::Clear => {
            let names: Vec<&str> = match &a.key {
                Some(k) => vec![Seq::parse(k)?.name()],
                None => Seq::ALL.iter().map(|s| s.name()).collect(),
            };
            match cache.clear(&names) {
                Ok(n) => {
                    r.put("op", "clear");
                    r.put("removed", n);
                }
                Err(e) => {
                    let _ = writeln!(
                        ctx.warn,
                        "warning: cannot clear cache in {} ({e})",
                        cache.dir().display()
                    );
                    r.put("op", "clear");
                    r.put("removed", 0);
                }
            }
        }
        CacheOp::Read | CacheOp::Write => {
            let key = a
                .key
                .as_deref()
                .ok_or_else(|| arg_err("cache read/write needs --key"))?;
            let seq = Seq::parse(key)?;
            let max = a
                .max_index
                .ok_or_else(|| arg_err("cache read/write needs --max-index"))?;
            r.put("key", seq.name());
            r.put("max_index", max);
            if a.op == CacheOp::Read {
                r.put("op", "read");
                match cache_lookup(ctx, seq, max) {
                    Lookup::Hit(v) => {
                        r.put("status", "hit");
                        r.put("values", v);
                        r.table("values");
                    }
                    Lookup::Miss => r.put("status", "miss"),
                }
            } else {
                r.put("op", "write");
                let vals = seq.compute(max)?;
                let written = cache.store(seq.name(), &vals, ctx.warn);
                r.put("status", if written { "written" } else { "uncached" });
                r.put("values", vals);
                r.table("values");
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gevrey::numeric::scalar::{format_rational, rat};

    #[test]
    fn numbers_parse_exactly() {
        assert_eq!(parse_number("3/4"), Some(rat(3, 4)));
        assert_eq!(parse_number("-2"), Some(int(-2)));
        assert_eq!(parse_number("1.25"), Some(rat(5, 4)));
        assert_eq!(parse_number("-0.5e-2"), Some(rat(-1, 200)));
        assert_eq!(parse_number("2.e3"), Some(int(2000)));
        assert_eq!(parse_number("."), None);
        assert_eq!(parse_number("abc"), None);
        assert_eq!(format_rational(&parse_number("0.1").unwrap()), "1/10");
    }

    #[test]
    fn sqrt3_codec_round_trips() {
        for m in mu_seq(4) {
            assert_eq!(decode_sqrt3(&m.exact()), Some(m));
        }
        assert_eq!(
            decode_sqrt3(&json!({"rational": "1/1", "radical": "0/1", "surd": 6})),
            None
        );
    }
}
