//! Extraction of `(n, r)` Fourier coefficients and their `y`-profiles.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::point::JacobiPoint;
use super::slash::JacobiEvaluator;
use crate::error::{Error, Result};
use crate::exec::{pairwise_sum, Exec};
use crate::special::h_function;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoefficientClass {
    /// `y^{3/2−k} qⁿζʳ`, `D = 0`
    Zero,
    /// `e^{−πDy/m} qⁿζʳ`
    Plus,
    /// `H(πDy/2m) e^{−πDy/2m} qⁿζʳ`
    Minus,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct JacobiFourierData {
    pub n: i64,
    pub r: i64,
    pub discriminant: i64,
    pub class: CoefficientClass,
    pub value: C64,
}

impl JacobiFourierData {
    pub fn new(n: i64, r: i64, m: i64, class: CoefficientClass, value: C64) -> Result<Self> {
        let discriminant = r * r - 4 * m * n;
        if class == CoefficientClass::Zero && discriminant != 0 {
            return Err(Error::Domain(format!("class c⁰ needs D = 0, got {}", discriminant)));
        }
        Ok(JacobiFourierData { n, r, discriminant, class, value })
    }
}

/// `∫∫_{[0,1]²} φ(x+iy, u+iv) e^{−2πi(nx+ru)} dx du` by the `N×N` trapezoid rule.
pub fn fourier_coeff_jacobi(phi: &JacobiEvaluator, n: i64, r: i64, y: f64, v: f64, size: usize, exec: Exec) -> Result<C64> {
    if size == 0 {
        return Err(Error::Config("quadrature size must be positive".into()));
    }
    let nodes: Vec<(usize, usize)> = (0..size).flat_map(|a| (0..size).map(move |b| (a, b))).collect();
    let h = 1.0 / size as f64;
    let vals: Vec<Result<C64>> = exec.map(&nodes, |&(a, b)| {
        let (x, u) = (a as f64 * h, b as f64 * h);
        let p = JacobiPoint::from_parts(x, y, u, v)?;
        let phase = C64::new(0.0, -2.0 * PI * (n as f64 * x + r as f64 * u)).exp();
        Ok(phi.eval(&p)? * phase)
    });
    let vals: Vec<C64> = vals.into_iter().collect::<Result<_>>()?;
    Ok(pairwise_sum(&vals) * h * h)
}

/// The `(y, v)` dependence a single term of the given class contributes to
/// [`fourier_coeff_jacobi`], including `|qⁿζʳ|`.
pub fn class_profile(class: CoefficientClass, n: i64, r: i64, k: i64, m: i64, y: f64, v: f64) -> Result<C64> {
    let d = (r * r - 4 * m * n) as f64;
    let base = (-2.0 * PI * (n as f64 * y + r as f64 * v)).exp();
    Ok(match class {
        CoefficientClass::Zero => C64::new(y.powf(1.5 - k as f64) * base, 0.0),
        CoefficientClass::Plus => C64::new((-PI * d * y / m as f64).exp() * base, 0.0),
        CoefficientClass::Minus => {
            let w = PI * d * y / (2.0 * m as f64);
            h_function(w, k as f64)? * (-w).exp() * base
        }
    })
}

/// Relative mismatch of the two-height ratio `c(y₁)/c(y₂)` against each
/// class profile.
pub fn class_fit(c1: C64, c2: C64, n: i64, r: i64, k: i64, m: i64, (y1, y2): (f64, f64), v: f64) -> Result<Vec<(CoefficientClass, f64)>> {
    let got = c1 / c2;
    let mut out = Vec::new();
    for class in [CoefficientClass::Zero, CoefficientClass::Plus, CoefficientClass::Minus] {
        if class == CoefficientClass::Zero && r * r != 4 * m * n {
            continue;
        }
        let want = class_profile(class, n, r, k, m, y1, v)? / class_profile(class, n, r, k, m, y2, v)?;
        out.push((class, ((got - want) / want).norm()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobi::slash::monomial;

    #[test]
    fn orthogonality() {
        let phi = monomial(2.0, -1.0);
        let y = 0.8;
        let c = fourier_coeff_jacobi(&phi, 2, -1, y, 0.1, 8, Exec::Sequential).unwrap();
        let want = (-2.0 * PI * (2.0 * y - 0.1)).exp();
        assert!((c - want).norm() < 1e-14);
        let z = fourier_coeff_jacobi(&phi, 1, -1, y, 0.1, 8, Exec::Sequential).unwrap();
        assert!(z.norm() < 1e-14);
    }

    #[test]
    fn class_tag_consistency() {
        assert!(JacobiFourierData::new(1, 1, 1, CoefficientClass::Zero, C64::new(1.0, 0.0)).is_err());
        assert!(JacobiFourierData::new(1, 2, 1, CoefficientClass::Zero, C64::new(1.0, 0.0)).is_ok());
    }
}
