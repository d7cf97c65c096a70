use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Complex 2×2 matrix, row major.
pub type Mat2 = [[C64; 2]; 2];

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[C64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn mat_add(a: &Mat2, b: &Mat2) -> Mat2 {
    [[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]]
}

pub fn mat_det(a: &Mat2) -> C64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

pub fn mat_inv(a: &Mat2) -> Result<Mat2> {
    let d = mat_det(a);
    if d.norm() == 0.0 {
        return Err(Error::Domain("singular 2x2 matrix".into()));
    }
    Ok([[a[1][1] / d, -a[0][1] / d], [-a[1][0] / d, a[0][0] / d]])
}

pub fn mat_scale(a: &Mat2, c: C64) -> Mat2 {
    [[a[0][0] * c, a[0][1] * c], [a[1][0] * c, a[1][1] * c]]
}

pub fn mat_from_int(m: &[[i64; 2]; 2]) -> Mat2 {
    let c = |x: i64| C64::new(x as f64, 0.0);
    [[c(m[0][0]), c(m[0][1])], [c(m[1][0]), c(m[1][1])]]
}

pub fn mat_zero() -> Mat2 {
    [[C64::new(0.0, 0.0); 2]; 2]
}

/// `Z = (τ z; z τ′)` in the degree-2 Siegel upper half space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SiegelPoint {
    pub tau: C64,
    pub z: C64,
    pub tau_p: C64,
}

impl SiegelPoint {
    pub fn new(tau: C64, z: C64, tau_p: C64) -> Result<Self> {
        let p = SiegelPoint { tau, z, tau_p };
        if !(tau.im > 0.0 && p.det_y() > 0.0) {
            return Err(Error::Domain(format!("Im Z not positive definite at {:?}", p)));
        }
        Ok(p)
    }

    /// From the six real coordinates `(x, y, u, v, x′, y′)`.
    pub fn from_real(c: [f64; 6]) -> Result<Self> {
        Self::new(C64::new(c[0], c[1]), C64::new(c[2], c[3]), C64::new(c[4], c[5]))
    }

    /// No domain check; for stencil nodes that are validated by the evaluator.
    pub fn from_real_unchecked(c: [f64; 6]) -> Self {
        SiegelPoint { tau: C64::new(c[0], c[1]), z: C64::new(c[2], c[3]), tau_p: C64::new(c[4], c[5]) }
    }

    pub fn real_coords(&self) -> [f64; 6] {
        [self.tau.re, self.tau.im, self.z.re, self.z.im, self.tau_p.re, self.tau_p.im]
    }

    pub fn matrix(&self) -> Mat2 {
        [[self.tau, self.z], [self.z, self.tau_p]]
    }

    pub fn from_matrix(m: &Mat2) -> Result<Self> {
        // symmetrize away rounding in the off-diagonal entries
        Self::new(m[0][0], 0.5 * (m[0][1] + m[1][0]), m[1][1])
    }

    pub fn y(&self) -> [[f64; 2]; 2] {
        [[self.tau.im, self.z.im], [self.z.im, self.tau_p.im]]
    }

    pub fn det_y(&self) -> f64 {
        self.tau.im * self.tau_p.im - self.z.im * self.z.im
    }

    pub fn trace_y(&self) -> f64 {
        self.tau.im + self.tau_p.im
    }

    /// `−Z̄`
    pub fn neg_conj(&self) -> Self {
        SiegelPoint { tau: -self.tau.conj(), z: -self.z.conj(), tau_p: -self.tau_p.conj() }
    }

    /// `i·Y` for a positive definite `Y = t·I₂`.
    pub fn scalar(t: f64) -> Self {
        SiegelPoint { tau: C64::new(0.0, t), z: C64::new(0.0, 0.0), tau_p: C64::new(0.0, t) }
    }
}
