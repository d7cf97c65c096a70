//! Whittaker functions `M_{ν,μ}`, `W_{ν,μ}` and Tricomi's `U(a, b, y)`.

use serde::{Deserialize, Serialize};

use super::gamma::{gamma, gamma_inc_scaled};
use super::hypergeometric::hyp1f1;
use super::quad::exp_sinh;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WhittakerKind {
    M,
    W,
}

fn is_nonpos_int(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

pub fn whittaker(kind: WhittakerKind, nu: f64, mu: f64, y: f64) -> Result<f64> {
    match kind {
        WhittakerKind::M => whittaker_m(nu, mu, y),
        WhittakerKind::W => whittaker_w(nu, mu, y),
    }
}

/// `M_{ν,μ}(y) = e^{−y/2} y^{μ+½} 1F1(μ−ν+½; 1+2μ; y)`.
pub fn whittaker_m(nu: f64, mu: f64, y: f64) -> Result<f64> {
    if !(y > 0.0) {
        return Err(Error::Domain(format!("Whittaker M needs y > 0, got {}", y)));
    }
    let b = 1.0 + 2.0 * mu;
    if is_nonpos_int(b) {
        return Err(Error::Domain(format!("M_{{{},{}}}: 1 + 2μ = {} is a nonpositive integer", nu, mu, b)));
    }
    let f = hyp1f1(mu - nu + 0.5, b, y)?;
    Ok(f * ((mu + 0.5) * y.ln() - 0.5 * y).exp())
}

/// `W_{ν,μ}(y) = e^{−y/2} y^{μ+½} U(μ−ν+½, 1+2μ, y)`, using `|μ|`.
pub fn whittaker_w(nu: f64, mu: f64, y: f64) -> Result<f64> {
    if !(y > 0.0) {
        return Err(Error::Domain(format!("Whittaker W needs y > 0, got {}", y)));
    }
    let mu = mu.abs();
    let u = kummer_u(mu - nu + 0.5, 1.0 + 2.0 * mu, y)?;
    Ok(u * ((mu + 0.5) * y.ln() - 0.5 * y).exp())
}

/// `M'_{ν,μ}(y) = ((y/2 − ν) M_{ν,μ} + (½ + μ + ν) M_{ν+1,μ}) / y`.
pub fn whittaker_m_deriv(nu: f64, mu: f64, y: f64) -> Result<f64> {
    Ok(((0.5 * y - nu) * whittaker_m(nu, mu, y)? + (0.5 + mu + nu) * whittaker_m(nu + 1.0, mu, y)?) / y)
}

/// `W'_{ν,μ}(y) = ((y/2 − ν) W_{ν,μ} − W_{ν+1,μ}) / y`.
pub fn whittaker_w_deriv(nu: f64, mu: f64, y: f64) -> Result<f64> {
    Ok(((0.5 * y - nu) * whittaker_w(nu, mu, y)? - whittaker_w(nu + 1.0, mu, y)?) / y)
}

/// Tricomi's confluent hypergeometric function.
///
/// Routes: the incomplete-Gamma closed forms for `a = b` and `a = 1`, a finite
/// sum for nonpositive integer `a`, the Laplace integral for `a > 0`, and
/// Kummer's transformation to reach one of those. Anything else is refused.
pub fn kummer_u(a: f64, b: f64, y: f64) -> Result<f64> {
    if !(y > 0.0) {
        return Err(Error::Domain(format!("U needs y > 0, got {}", y)));
    }
    if a == b {
        return gamma_inc_scaled(1.0 - a, y);
    }
    if a == 1.0 {
        return Ok(y.powf(1.0 - b) * gamma_inc_scaled(b - 1.0, y)?);
    }
    if is_nonpos_int(a) {
        return Ok(u_polynomial(-a as u64, b, y));
    }
    if a > 0.0 {
        return u_integral(a, b, y);
    }
    let a2 = a - b + 1.0;
    if a2 > 0.0 || is_nonpos_int(a2) {
        return Ok(y.powf(1.0 - b) * kummer_u(a2, 2.0 - b, y)?);
    }
    Err(Error::Domain(format!("U({}, {}, ·): neither a nor a − b + 1 is positive or a nonpositive integer", a, b)))
}

/// `U(−n, b, y) = (−1)^n Σ_j (−1)^j C(n,j) (b+j)_{n−j} y^j`.
fn u_polynomial(n: u64, b: f64, y: f64) -> f64 {
    let mut sum = 0.0;
    let mut binom = 1.0;
    for j in 0..=n {
        let mut poch = 1.0;
        for i in j..n {
            poch *= b + i as f64;
        }
        let sign = if (n + j) % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * binom * poch * y.powi(j as i32);
        binom *= (n - j) as f64 / (j + 1) as f64;
    }
    sum
}

/// `U(a,b,y) = y^{−a}/Γ(a) ∫_0^∞ e^{−s} s^{a−1} (1 + s/y)^{b−a−1} ds`, `a > 0`.
pub(crate) fn u_integral(a: f64, b: f64, y: f64) -> Result<f64> {
    let e = b - a - 1.0;
    let integrand = |s: f64| (-s + (a - 1.0) * s.ln() + e * (s / y).ln_1p()).exp();
    let i = exp_sinh(integrand, 0.0, 1e-13)?;
    Ok(i * (-a * y.ln()).exp() / gamma(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn m_with_sinh_closed_form() {
        // M_{0,1/2}(y) = 2 sinh(y/2), oracle summed directly
        let y = 2.0f64;
        let mut t = 1.0;
        let mut s = 1.0;
        for n in 0..60 {
            t *= y / ((2.0 + n as f64) * (n as f64 + 1.0)) * (1.0 + n as f64);
            s += t;
        }
        let oracle = (-y / 2.0).exp() * y * s;
        let v = whittaker_m(0.0, 0.5, y).unwrap();
        assert!(rel(v, oracle) < 1e-14);
        assert!(rel(v, 2.0 * 1f64.sinh()) < 1e-14);
    }

    #[test]
    fn all_u_routes_agree_with_the_integral() {
        for &(a, b) in &[(2.0, 2.0), (8.0, 8.0), (1.0, 14.0), (1.0, 0.5), (0.5, 7.0), (0.5, -3.0)] {
            for &y in &[0.7, 3.0, 25.0] {
                let direct = kummer_u(a, b, y).unwrap();
                let integral = u_integral(a, b, y).unwrap();
                assert!(rel(direct, integral) < 1e-10, "U({}, {}, {}): {} vs {}", a, b, y, direct, integral);
            }
        }
    }

    #[test]
    fn kummer_transformation_and_polynomial_case() {
        let y = 2.3;
        // U(-2, b, y) = y^2 - 2(b+1) y + b(b+1)
        let b: f64 = 0.4;
        let expect = y * y - 2.0 * (b + 1.0) * y + b * (b + 1.0);
        assert!(rel(kummer_u(-2.0, b, y).unwrap(), expect) < 1e-14);
        let lhs = kummer_u(-0.5, -1.0, y).unwrap();
        let rhs = y.powf(2.0) * u_integral(1.5, 3.0, y).unwrap();
        assert!(rel(lhs, rhs) < 1e-10);
    }

    #[test]
    fn refuses_unsupported_parameters() {
        assert!(kummer_u(-0.5, 3.0, 1.0).is_err());
        assert!(whittaker_m(0.0, -1.0, 1.0).is_err());
    }

    fn ode_residual(kind: WhittakerKind, nu: f64, mu: f64, y: f64) -> f64 {
        let h = 1e-3;
        let f = |t: f64| whittaker(kind, nu, mu, t).unwrap();
        let f0 = f(y);
        let d2 = (-f(y + 2.0 * h) + 16.0 * f(y + h) - 30.0 * f0 + 16.0 * f(y - h) - f(y - 2.0 * h)) / (12.0 * h * h);
        ((d2 + (-0.25 + nu / y + (0.25 - mu * mu) / (y * y)) * f0) / f0).abs()
    }

    #[test]
    fn whittaker_equation_residuals() {
        for &(nu, mu) in &[(-4.0, 3.5), (6.0, 6.5), (3.0, -3.0), (-1.0, 0.5), (0.3, 0.8)] {
            for &y in &[1.5, 3.0, 8.0] {
                assert!(ode_residual(WhittakerKind::W, nu, mu, y) < 1e-6, "W {} {} {}", nu, mu, y);
                if 1.0 + 2.0 * mu > 0.0 {
                    assert!(ode_residual(WhittakerKind::M, nu, mu, y) < 1e-6, "M {} {} {}", nu, mu, y);
                }
            }
        }
    }

    #[test]
    fn derivative_identities_match_differences() {
        let h = 1e-5;
        for &(nu, mu, y) in &[(-4.0, 3.5, 3.3), (6.0, 6.5, 7.1), (-3.0, 3.5, 5.0)] {
            let dw = (whittaker_w(nu, mu, y + h).unwrap() - whittaker_w(nu, mu, y - h).unwrap()) / (2.0 * h);
            assert!(rel(whittaker_w_deriv(nu, mu, y).unwrap(), dw) < 1e-7);
            let dm = (whittaker_m(nu, mu, y + h).unwrap() - whittaker_m(nu, mu, y - h).unwrap()) / (2.0 * h);
            assert!(rel(whittaker_m_deriv(nu, mu, y).unwrap(), dm) < 1e-7);
        }
    }

    #[test]
    fn w_large_argument_ratio() {
        let y = 40.0f64;
        let r = whittaker_w(-1.0, 0.5, y).unwrap() / (y.powf(-1.0) * (-y / 2.0).exp());
        assert!((r - 1.0).abs() < 5e-2);
    }
}
