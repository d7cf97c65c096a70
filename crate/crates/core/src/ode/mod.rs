//! Linear differential operators on Laurent series and the finite-window
//! criterion for hypergeometric solutions.

pub mod catalog;
mod check;
mod op;

pub use check::{
    confluent_ode_check, finite_check, finite_check_series, phi_whittaker_ode_check, series_annihilated, ConfluentKind,
    FiniteCheck, SeriesCheck, Verdict,
};
pub use op::LinearDiffOp;
