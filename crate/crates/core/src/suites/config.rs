use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::jacobi::DeltaGrid;
use crate::siegel::NESTED_STEP;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub suite: Option<String>,
    /// Weights for the k-parametrized suites; empty selects each suite's own list.
    pub k: Vec<i64>,
    /// Top rung of the truncation ladders; the lower rung is `bound / 2`.
    pub bound: i64,
    /// Coset bound behind the x′-orbits of the Fourier-Jacobi slices.
    pub orbit_bound: i64,
    pub step: f64,
    pub nested_step: f64,
    /// Trapezoid nodes per direction for Fourier coefficients.
    pub quad_size: usize,
    pub delta_grid: DeltaGrid,
    /// Multiplies every numeric tolerance; exact checks stay exact.
    pub tolerance_scale: f64,
    /// Seed for the sample points.
    pub seed: u64,
    pub parallel: bool,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: None,
            k: Vec::new(),
            bound: 8,
            orbit_bound: 3,
            step: 1e-3,
            nested_step: NESTED_STEP,
            quad_size: 24,
            delta_grid: DeltaGrid::default(),
            tolerance_scale: 1.0,
            seed: 20240,
            parallel: true,
            out: None,
            cache_dir: None,
        }
    }
}

fn positive(name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Config(format!("{} must be positive and finite, got {}", name, x)))
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.bound < 2 {
            return Err(Error::Config(format!("bound must be at least 2, got {}", self.bound)));
        }
        if self.orbit_bound < 1 {
            return Err(Error::Config(format!("orbit_bound must be at least 1, got {}", self.orbit_bound)));
        }
        positive("step", self.step)?;
        positive("nested_step", self.nested_step)?;
        positive("tolerance_scale", self.tolerance_scale)?;
        if self.quad_size == 0 {
            return Err(Error::Config("quad_size must be positive".into()));
        }
        positive("delta_grid.start", self.delta_grid.start)?;
        positive("delta_grid.step", self.delta_grid.step)?;
        positive("delta_grid.max", self.delta_grid.max)?;
        if self.delta_grid.richardson_nodes < 2 {
            return Err(Error::Config("delta_grid.richardson_nodes must be at least 2".into()));
        }
        self.delta_grid.nodes()?;
        Ok(())
    }

    pub fn exec(&self) -> Exec {
        if self.parallel {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }

    /// `self.k`, or `default` when empty.
    pub fn ks(&self, default: &[i64]) -> Vec<i64> {
        if self.k.is_empty() {
            default.to_vec()
        } else {
            self.k.clone()
        }
    }

    pub fn tol(&self, base: f64) -> f64 {
        base * self.tolerance_scale
    }
}
