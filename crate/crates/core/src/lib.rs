pub mod algebra;
pub mod error;

pub use error::{Error, Result};
pub mod special;
pub mod ode;
pub mod exec;
pub mod fourier;
pub mod eval;
pub mod stencil;
pub mod siegel;
pub mod fit;
pub mod jacobi;
pub mod suites;
