//! Double-exponential quadrature: tanh-sinh on finite intervals and
//! exp-sinh on half lines. Both tolerate integrable endpoint singularities.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

const MAX_LEVEL: u32 = 10;

fn converged(new: f64, old: f64, tol: f64) -> bool {
    (new - old).abs() <= tol * new.abs().max(1e-300)
}

/// `∫_a^b f(x) dx` for finite `a < b`.
pub fn tanh_sinh(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return tanh_sinh(f, b, a, tol).map(|v| -v);
    }
    let len = b - a;
    let node = |t: f64| -> Option<(f64, f64)> {
        let s = FRAC_PI_2 * t.sinh();
        let ch = s.cosh();
        let w = 0.5 * len * FRAC_PI_2 * t.cosh() / (ch * ch);
        // distance to the nearer endpoint, kept accurate near it
        let x = if s < 0.0 { a + len / (1.0 + (-2.0 * s).exp()) } else { b - len / (1.0 + (2.0 * s).exp()) };
        if x <= a || x >= b || w == 0.0 {
            None
        } else {
            Some((x, w))
        }
    };
    let sum_level = |h: f64| -> f64 {
        let n = (4.5 / h).ceil() as i64;
        let mut acc = 0.0;
        for i in -n..=n {
            if let Some((x, w)) = node(i as f64 * h) {
                let fx = f(x);
                if fx.is_finite() {
                    acc += w * fx;
                }
            }
        }
        acc * h
    };
    let mut h = 0.5;
    let mut prev = sum_level(h);
    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        let cur = sum_level(h);
        if level >= 3 && converged(cur, prev, tol) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NoConvergence(format!("tanh-sinh on [{}, {}]", a, b)))
}

/// `∫_a^∞ f(x) dx` for integrands decaying at infinity.
pub fn exp_sinh(f: impl Fn(f64) -> f64, a: f64, tol: f64) -> Result<f64> {
    let sum_level = |h: f64| -> f64 {
        let mut acc = 0.0;
        // walk outward from t = 0 and stop once terms are negligible
        for dir in [1.0f64, -1.0] {
            let start = if dir > 0.0 { 0 } else { 1 };
            let mut quiet = 0;
            let mut i = start;
            loop {
                let t = dir * i as f64 * h;
                if t.abs() > 7.0 {
                    break;
                }
                let s = FRAC_PI_2 * t.sinh();
                let e = s.exp();
                let x = a + e;
                if !x.is_finite() {
                    break;
                }
                if x > a {
                    let fx = f(x);
                    let term = FRAC_PI_2 * t.cosh() * e * fx;
                    if term.is_finite() {
                        acc += term;
                        if term.abs() <= 1e-18 * acc.abs() {
                            quiet += 1;
                        } else {
                            quiet = 0;
                        }
                    }
                } else {
                    quiet += 1;
                }
                if quiet >= 4 {
                    break;
                }
                i += 1;
            }
        }
        acc * h
    };
    let mut h = 0.5;
    let mut prev = sum_level(h);
    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        let cur = sum_level(h);
        if level >= 3 && converged(cur, prev, tol) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NoConvergence(format!("exp-sinh on [{}, ∞)", a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_singular_endpoints() {
        let v = tanh_sinh(|x| x * x, 0.0, 3.0, 1e-13).unwrap();
        assert!((v - 9.0).abs() < 1e-12);
        let v = tanh_sinh(|x| 1.0 / x.sqrt(), 0.0, 1.0, 1e-12).unwrap();
        assert!((v - 2.0).abs() < 1e-11);
        let v = tanh_sinh(|x| x.ln(), 0.0, 1.0, 1e-12).unwrap();
        assert!((v + 1.0).abs() < 1e-11);
    }

    #[test]
    fn half_line() {
        let v = exp_sinh(|x| (-x).exp(), 0.0, 1e-13).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
        // ∫_0^∞ e^{-x} x^{-1/2} = √π
        let v = exp_sinh(|x| (-x).exp() / x.sqrt(), 0.0, 1e-12).unwrap();
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-11);
        let v = exp_sinh(|x| 1.0 / (x * x), 1.0, 1e-12).unwrap();
        assert!((v - 1.0).abs() < 1e-11);
    }

    #[test]
    fn reversed_interval() {
        let v = tanh_sinh(|x| x, 2.0, 0.0, 1e-13).unwrap();
        assert!((v + 2.0).abs() < 1e-12);
    }
}
