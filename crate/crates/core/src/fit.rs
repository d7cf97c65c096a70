//! Single-scalar proportionality fits across sample points.

use num_complex::Complex64;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Proportionality {
    /// least-squares `c` with `a ≈ c·b`
    pub scalar: Complex64,
    /// `max_i |a_i − c b_i| / |c b_i|`
    pub spread: f64,
}

pub fn proportionality(a: &[Complex64], b: &[Complex64]) -> Proportionality {
    let num: Complex64 = a.iter().zip(b).map(|(x, y)| x * y.conj()).sum();
    let den: f64 = b.iter().map(|y| y.norm_sqr()).sum();
    let scalar = if den == 0.0 { Complex64::new(f64::NAN, f64::NAN) } else { num / den };
    let spread = a.iter().zip(b).map(|(x, y)| (x - scalar * y).norm() / (scalar * y).norm()).fold(0.0, |m: f64, x: f64| if m.is_nan() || x.is_nan() { f64::NAN } else { m.max(x) });
    Proportionality { scalar, spread }
}
