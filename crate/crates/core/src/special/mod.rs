//! Hypergeometric series and the numeric special functions the checks need.

mod gamma;
mod hfun;
mod hypergeometric;
pub mod quad;
mod whittaker;

pub use gamma::{gamma, gamma_inc, gamma_inc_scaled, ln_gamma};
pub use hfun::h_function;
pub use hypergeometric::{
    hyp1f1, pfq_formal, pfq_numeric, pfq_spec_numeric, pochhammer, pochhammer_f64, spec_quarter, ArgScale,
    HypergeometricSpec,
};
pub use whittaker::{
    kummer_u, whittaker, whittaker_m, whittaker_m_deriv, whittaker_w, whittaker_w_deriv, WhittakerKind,
};

use serde::{Deserialize, Serialize};

/// Tolerances for numeric evaluation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericPrecision {
    /// Relative tolerance for convergent series.
    pub rel_tol: f64,
    /// Maximum number of series terms.
    pub max_terms: usize,
    /// Tolerance for large-argument ratio checks.
    pub asymptotic_tol: f64,
}

impl Default for NumericPrecision {
    fn default() -> Self {
        NumericPrecision { rel_tol: 1e-9, max_terms: 20_000, asymptotic_tol: 5e-2 }
    }
}
