//! Exact series engines for the genus expansion of Lens-space Chern–Simons
//! free energies, the gl_N weight system on trivalent ribbon graphs, and the
//! large-order asymptotics of rooted maps through Painlevé I.
//!
//! Exact work happens over [`Rational`] and the constant ring [`ConstElem`];
//! numeric comparisons use [`BigFloat`] or any `num_traits::Float`.

pub mod asympt;
pub mod error;
pub mod lens;
pub mod numeric;
pub mod polylog;
pub mod ribbon;
pub mod verify;

pub use error::{Error, Result};
pub use numeric::bernoulli::{bernoulli, modified_bernoulli};
pub use numeric::bigfloat::{BigFloat, DEFAULT_PRECISION};
pub use numeric::const_elem::{const_eval, ConstElem, Monomial};
pub use numeric::scalar::{Real, Scalar};
pub use numeric::series::{series_op, Operand, SeriesOp, TruncSeries};
pub use numeric::sqrt_ext::SqrtExt;

/// Reduced big fraction; the base scalar.
pub type Rational = num_rational::BigRational;
/// Truncated Laurent series over ℚ.
pub type QSeries = TruncSeries<Rational>;
/// Truncated Laurent series over the constant ring.
pub type ConstSeries = TruncSeries<ConstElem>;
/// `ℚ(√3)`.
pub type Sqrt3 = SqrtExt<3>;
/// `ℚ(√6)`.
pub type Sqrt6 = SqrtExt<6>;
