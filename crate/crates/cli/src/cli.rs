//! Argument definitions.

use std::path::PathBuf;

use clap::{value_parser, Args, Parser, Subcommand, ValueEnum};
use gevrey::DEFAULT_PRECISION;

#[derive(Parser, Debug)]
#[command(
    name = "gevrey",
    version,
    about = "Exact Lens-space free energies, gl_N ribbon-graph weights and Painlevé I asymptotics"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add a decimal rendering next to every exact value.
    #[arg(long, global = true)]
    pub approx: bool,
    /// Working precision in bits for floating-point results.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION,
          value_parser = value_parser!(u32).range(64..=16384))]
    pub precision: u32,
    /// Significant digits printed for floating-point values.
    #[arg(long, global = true, default_value_t = 24, value_parser = value_parser!(u32).range(1..=4096))]
    pub digits: u32,
    /// Casson normalization: `default`, `dedekind*p/q` or a bare factor `p/q`.
    #[arg(long = "lambda-convention", global = true, default_value = "default")]
    pub lambda_convention: String,
    /// Sequence cache directory; overrides GEVREY_CACHE_DIR.
    #[arg(long = "cache-dir", global = true)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bernoulli number B_n, or the modified number with --modified.
    Bernoulli(BernoulliArgs),
    /// One operation on truncated series given as JSON.
    Series(SeriesArgs),
    /// Numeric value of an exact constant given as JSON terms.
    ConstEval(ConstEvalArgs),
    /// Li_alpha(x) as a rational function, or Li_alpha(e^t) with --order.
    Polylog(PolylogArgs),
    /// The series f(t).
    FSeries(OrderArgs),
    /// The auxiliary series f_g(t).
    FAux(FAuxArgs),
    /// Free energy F_{M,g}(tau) of a Lens space.
    LensFe(LensFeArgs),
    /// Table of coefficients a_{M,g,d'}.
    LensTable(LensBoundsArgs),
    /// Residual of the sl_N specialization identity.
    SlnCheck(SlnArgs),
    /// Empirical Gevrey-1 constant of the coefficient table.
    Gevrey(LensBoundsArgs),
    /// gl_N weight of a ribbon graph, or the surface of one marking.
    Weight(WeightArgs),
    /// Connected trivalent ribbon graphs up to a degree.
    Enumerate(EnumerateArgs),
    /// Degree identity and coefficient bounds over all graphs and markings.
    LemmaBounds(NMaxArgs),
    /// Rooted maps T_g(n) by brute force.
    CountMaps(CountMapsArgs),
    /// The sequence a_g.
    ASeq(GMaxArgs),
    /// f_g, t_g and u_g.
    MapConstants(GMaxArgs),
    /// Trans-series coefficients mu_l.
    MuSeq(LMaxArgs),
    /// Painlevé I residual of the perturbative solution.
    PainleveCheck(GMaxArgs),
    /// Linearized residual of the first trans-series correction.
    TransseriesCheck(TransseriesArgs),
    /// Richardson extrapolation of u_g or of given values.
    Richardson(RichardsonArgs),
    /// Stokes constant from the large-order behaviour of a_g.
    Stokes(StokesArgs),
    /// Ratio of t_g to its leading asymptotics.
    TgCheck(TgArgs),
    /// Run invariant suites and print a pass/fail table.
    Verify(VerifyArgs),
    /// Read, write or clear cached sequences.
    Cache(CacheArgs),
}

#[derive(Args, Debug)]
pub struct BernoulliArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub modified: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesOpArg {
    Add,
    Mul,
    Div,
    Exp,
    Log,
    Derivative,
    Antiderivative,
    Rescale,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub op: SeriesOpArg,
    /// Series JSON `{"valuation", "order", "terms"}`, or `@file`.
    #[arg(long)]
    pub a: String,
    /// Second series operand.
    #[arg(long, conflicts_with = "scalar")]
    pub b: Option<String>,
    /// Scalar operand `p/q`.
    #[arg(long, allow_negative_numbers = true)]
    pub scalar: Option<String>,
}

#[derive(Args, Debug)]
pub struct ConstEvalArgs {
    /// JSON list of `{"monomial", "coeff"}` terms, or `@file`.
    #[arg(long)]
    pub expr: String,
}

#[derive(Args, Debug)]
pub struct PolylogArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: i64,
    #[arg(long)]
    pub order: Option<i64>,
}

#[derive(Args, Debug)]
pub struct OrderArgs {
    #[arg(long)]
    pub order: i64,
}

#[derive(Args, Debug)]
pub struct FAuxArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub order: i64,
    /// Use the closed form in polylogarithms.
    #[arg(long)]
    pub closed: bool,
}

#[derive(Args, Debug)]
pub struct LensArgs {
    #[arg(long)]
    pub d: u64,
    #[arg(long)]
    pub b: u64,
}

#[derive(Args, Debug)]
pub struct LensFeArgs {
    #[command(flatten)]
    pub lens: LensArgs,
    #[arg(long, required_unless_present_any = ["casson", "dedekind"])]
    pub g: Option<u32>,
    #[arg(long, required_unless_present_any = ["casson", "dedekind"])]
    pub order: Option<i64>,
    /// Print the Casson invariant instead.
    #[arg(long, conflicts_with = "dedekind")]
    pub casson: bool,
    /// Print the Dedekind sum s(b,d) instead.
    #[arg(long)]
    pub dedekind: bool,
}

#[derive(Args, Debug)]
pub struct LensBoundsArgs {
    #[command(flatten)]
    pub lens: LensArgs,
    #[arg(long = "g-max")]
    pub g_max: u32,
    #[arg(long = "d-max")]
    pub d_max: u32,
}

#[derive(Args, Debug)]
pub struct SlnArgs {
    #[command(flatten)]
    pub lens: LensArgs,
    #[arg(long = "N")]
    pub n: u32,
    #[arg(long)]
    pub order: i64,
}

#[derive(Args, Debug)]
pub struct WeightArgs {
    /// Ribbon-graph file.
    #[arg(long)]
    pub graph: PathBuf,
    /// Vertices to flip, as a 0/1 string in vertex order.
    #[arg(long)]
    pub marking: Option<String>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long = "n-max")]
    pub n_max: usize,
    /// Include every graph in the ribbon-graph text format.
    #[arg(long)]
    pub list: bool,
}

#[derive(Args, Debug)]
pub struct NMaxArgs {
    #[arg(long = "n-max")]
    pub n_max: usize,
}

#[derive(Args, Debug)]
pub struct CountMapsArgs {
    #[arg(long, requires = "n", conflicts_with_all = ["g_max", "n_max"])]
    pub g: Option<u32>,
    #[arg(long, requires = "g")]
    pub n: Option<usize>,
    #[arg(long = "g-max", requires = "n_max")]
    pub g_max: Option<u32>,
    #[arg(long = "n-max", requires = "g_max")]
    pub n_max: Option<usize>,
}

#[derive(Args, Debug)]
pub struct GMaxArgs {
    #[arg(long = "g-max")]
    pub g_max: usize,
}

#[derive(Args, Debug)]
pub struct LMaxArgs {
    #[arg(long = "l-max")]
    pub l_max: usize,
}

#[derive(Args, Debug)]
pub struct TransseriesArgs {
    /// Defaults to the smallest admissible value, l_max/2 + 1.
    #[arg(long = "g-max")]
    pub g_max: Option<usize>,
    #[arg(long = "l-max")]
    pub l_max: usize,
}

#[derive(Args, Debug)]
pub struct RichardsonArgs {
    /// Comma-separated values s_first, s_first+1, ... (`p/q` or decimals); default is u_g.
    #[arg(long, allow_hyphen_values = true)]
    pub values: Option<String>,
    /// Index of the first value.
    #[arg(long = "first-index", default_value_t = 1)]
    pub first_index: u64,
    /// Length of the u_g sequence when no values are given.
    #[arg(long = "g-max", default_value_t = 120, conflicts_with = "values")]
    pub g_max: usize,
    #[arg(long, default_value_t = 8)]
    pub depth: usize,
}

#[derive(Args, Debug)]
pub struct StokesArgs {
    #[arg(long = "g-max", default_value_t = 120)]
    pub g_max: usize,
    /// Number of trans-series corrections divided out.
    #[arg(long = "l-max", default_value_t = 4)]
    pub l_max: usize,
    /// Richardson depth; 0 disables acceleration.
    #[arg(long, default_value_t = 6)]
    pub depth: usize,
}

#[derive(Args, Debug)]
pub struct TgArgs {
    #[arg(long = "g-max", default_value_t = 120)]
    pub g_max: usize,
    /// Richardson depth for the corrected ratio; 0 skips it.
    #[arg(long, default_value_t = 0)]
    pub depth: usize,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// numeric, polylog, lens, ribbon, asympt or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CacheOp {
    Read,
    Write,
    Clear,
}

#[derive(Args, Debug)]
pub struct CacheArgs {
    #[arg(value_enum)]
    pub op: CacheOp,
    /// Sequence name: a, u or mu. `clear` without a key removes every sequence.
    #[arg(long)]
    pub key: Option<String>,
    /// Largest index to read or write.
    #[arg(long = "max-index")]
    pub max_index: Option<usize>,
}
