//! Fourier coefficient recursions, their towers, and growth diagnostics.

pub mod growth;
pub mod holonomic;
pub mod ratio;
pub mod tower;

pub use growth::{growth_diagnostic, Growth, GrowthReport};
pub use holonomic::{seed_values, HolonomicTower, SeedKind};
pub use ratio::{coeff_ratio_decay, RatioReport};
pub use tower::{
    companion_residual, g_residual, g_step, h0_from_h1, h_residual, h_step, RecursionTower, TowerCase,
};
