use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stencil::RealPoint;

/// `(τ, z) ∈ ℍ × ℂ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct JacobiPoint {
    pub tau: C64,
    pub z: C64,
}

impl JacobiPoint {
    pub fn new(tau: C64, z: C64) -> Result<Self> {
        if !(tau.im > 0.0) {
            return Err(Error::Domain(format!("Im τ = {} is not positive", tau.im)));
        }
        Ok(JacobiPoint { tau, z })
    }

    pub fn from_parts(x: f64, y: f64, u: f64, v: f64) -> Result<Self> {
        Self::new(C64::new(x, y), C64::new(u, v))
    }

    pub fn y(&self) -> f64 {
        self.tau.im
    }

    pub fn v(&self) -> f64 {
        self.z.im
    }
}

impl RealPoint for JacobiPoint {
    fn coords(&self) -> Vec<f64> {
        vec![self.tau.re, self.tau.im, self.z.re, self.z.im]
    }
    fn with_coords(c: &[f64]) -> Self {
        JacobiPoint { tau: C64::new(c[0], c[1]), z: C64::new(c[2], c[3]) }
    }
}

/// Arguments `(τ, z, y′)` of a Fourier-Jacobi coefficient `φ_m`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FjPoint {
    pub tau: C64,
    pub z: C64,
    pub y_p: f64,
}

impl FjPoint {
    /// Requires `Y = (y v; v y′)` positive definite.
    pub fn new(tau: C64, z: C64, y_p: f64) -> Result<Self> {
        if !(tau.im > 0.0) || !(tau.im * y_p - z.im * z.im > 0.0) {
            return Err(Error::Domain(format!("Y not positive definite at y = {}, v = {}, y′ = {}", tau.im, z.im, y_p)));
        }
        Ok(FjPoint { tau, z, y_p })
    }

    pub fn det_y(&self) -> f64 {
        self.tau.im * self.y_p - self.z.im * self.z.im
    }
}
