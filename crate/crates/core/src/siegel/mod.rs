//! Degree-2 Siegel upper half space: slash action, cosets of `Γ_∞\Sp₂(ℤ)`,
//! truncated Poincaré-Eisenstein sums and the invariant operators.

pub mod cosets;
pub mod eisenstein;
pub mod orbits;
pub mod operators;
pub mod point;
pub mod slash;
pub mod symplectic;

pub use cosets::{canonical_form, coset_reps, CosetFamily, CosetRep, CANONICAL_TAG};
pub use eisenstein::{
    eisenstein_evaluator, eisenstein_ladder, eisenstein_p, holomorphic_eisenstein, holomorphic_evaluator, maass_eisenstein,
    LadderRung,
};
pub use operators::{
    casimir_c, maass_m, maass_m_evaluator, maass_n, numeric_partial, omega_apply, xi2, xi2_dual, xi2_evaluator, Coordinate,
    NESTED_STEP,
};
pub use orbits::{orbit_canonical, x_orbits, Orbit, OrbitFamily};
pub use point::{Mat2, SiegelPoint};
pub use slash::{automorphy_factor, det_y_power, exp_trace, slash, SiegelEvaluator, BRANCH_CONVENTION};
pub use symplectic::SymplecticMatrix;
