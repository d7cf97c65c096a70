//! Jacobi group cosets, the skew slash action, skew-holomorphic Jacobi
//! Eisenstein sums, the heat and skew Casimir operators, Fourier extraction
//! and Kohnen's limit process.

pub mod cosets;
pub mod fourier;
pub mod group;
pub mod kohnen;
pub mod operators;
pub mod point;
pub mod series;
pub mod slash;

pub use cosets::{coset_key, jacobi_cosets, JacobiCosetFamily, JACOBI_CANONICAL_TAG};
pub use fourier::{class_fit, class_profile, fourier_coeff_jacobi, CoefficientClass, JacobiFourierData};
pub use group::JacobiGroupElement;
pub use kohnen::{
    eisenstein_fj_coeff, extrapolate_to_zero, fourier_jacobi_coeff, kohnen_limit, kohnen_slice, periodicity_defect,
    periodized_eisenstein, rank1_limit, rank1_slice, x_integral, DeltaGrid, KohnenLimit, SliceEvaluator,
};
pub use operators::{casimir_from_jet3, casimir_sk, heat_from_jet, heat_l, xi_sk, Jet3};
pub use point::{FjPoint, JacobiPoint};
pub use series::{series_evaluator, skew_eisenstein, JacobiSeries};
pub use slash::{holo_factor, holo_slash, monomial, plus_profile, skew_factor, skew_slash, y_power, JacobiEvaluator};
