//! Exact arithmetic over ℚ(k): polynomials, rational functions, symbolic
//! exponents and truncated Laurent series.

mod exponent;
mod poly;
mod ratfunc;
mod series;

pub use exponent::SymbolicExponent;
pub use poly::{rational_ln_abs, rational_to_f64, Poly};
pub use ratfunc::RatFunc;
pub use series::{LaurentSeries, Var};

use num_rational::BigRational;

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
