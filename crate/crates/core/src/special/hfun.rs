//! `H(w) = e^{−w} ∫_{−2w}^∞ e^{−t} t^{½−k} dt`.

use num_complex::Complex64;

use super::gamma::{gamma, gamma_inc};
use crate::error::{Error, Result};

/// `H(w)` for real `w ≠ 0`.
///
/// For `w < 0` this is `e^{−w} Γ(3/2−k, −2w)`. For `w > 0` the path crosses
/// the negative axis, where `t^{½−k}` is taken on the principal branch; with
/// `c = 3/2 − k` the value is `e^{−w}(Γ(c) + e^{iπ(c−1)} Σ (2w)^{n+c}/(n!(n+c)))`,
/// which also continues the definition to `k ≥ 3/2`.
pub fn h_function(w: f64, k: f64) -> Result<Complex64> {
    if w == 0.0 {
        return Err(Error::Domain("H(w) is not defined at w = 0".into()));
    }
    let c = 1.5 - k;
    if w < 0.0 {
        return Ok(Complex64::new((-w).exp() * gamma_inc(c, -2.0 * w)?, 0.0));
    }
    if c <= 0.0 && c.fract() == 0.0 {
        return Err(Error::Domain(format!("H(w): 3/2 − k = {} is a pole of Γ", c)));
    }
    let x = 2.0 * w;
    let mut term = 1.0; // x^n / n!
    let mut sum = 0.0;
    for n in 0..10_000 {
        if n > 0 {
            term *= x / n as f64;
        }
        let t = term / (n as f64 + c);
        sum += t;
        if n as f64 > x && t.abs() < 1e-17 * sum.abs() {
            let lower = sum * x.powf(c);
            let phase = Complex64::from_polar(1.0, std::f64::consts::PI * (c - 1.0));
            return Ok((Complex64::new(gamma(c), 0.0) + phase * lower) * (-w).exp());
        }
    }
    Err(Error::NoConvergence(format!("H({}) series", w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_for_negative_w() {
        let v = h_function(-1.0, -1.0).unwrap();
        assert!((v.re - 1f64.exp() * gamma_inc(2.5, 2.0).unwrap()).abs() < 1e-14);
        assert_eq!(v.im, 0.0);
        let v = h_function(-0.5, 0.0).unwrap();
        assert!((v.re - 0.5f64.exp() * gamma_inc(1.5, 1.0).unwrap()).abs() < 1e-14);
        assert!(h_function(0.0, 1.0).is_err());
    }

    #[test]
    fn continuation_formula_matches_on_negative_side() {
        // Γ(c, x) = Γ(c) − Σ (−1)^n x^{n+c}/(n!(n+c)) on x > 0
        let (k, x): (f64, f64) = (-3.0, 1.7);
        let c = 1.5 - k;
        let mut s = 0.0;
        let mut t = 1.0;
        for n in 0..80 {
            if n > 0 {
                t *= -x / n as f64;
            }
            s += t / (n as f64 + c);
        }
        let expect = gamma(c) - s * x.powf(c);
        assert!(((gamma_inc(c, x).unwrap() - expect) / expect).abs() < 1e-12);
    }

    #[test]
    fn positive_w_solves_its_first_order_equation() {
        // H'(w) = −H(w) + 2 e^{w} (−2w)^{½−k}
        for &k in &[-3.0, 0.0, 5.0] {
            let w = 0.8;
            let h = 1e-4;
            let d = (h_function(w + h, k).unwrap() - h_function(w - h, k).unwrap()) / (2.0 * h);
            let src = Complex64::new(-2.0 * w, 0.0).powc(Complex64::new(0.5 - k, 0.0)) * (2.0 * w.exp());
            let res = d + h_function(w, k).unwrap() - src;
            assert!(res.norm() < 1e-6 * src.norm().max(1.0), "k = {}: {}", k, res);
        }
    }
}
