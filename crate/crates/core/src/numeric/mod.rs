//! Exact scalars, truncated series, Bernoulli numbers and the numeric backend.

pub mod bernoulli;
pub mod bigfloat;
pub mod const_elem;
pub mod scalar;
pub mod series;
pub mod sqrt_ext;
