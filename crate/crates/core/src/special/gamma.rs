//! Gamma and the upper incomplete Gamma function `Γ(a, y)` for real `a`.

use crate::error::{Error, Result};

pub use statrs::function::gamma::{gamma, ln_gamma};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const EPS: f64 = 1e-16;
const MAX_IT: usize = 10_000;

/// `Γ(a, y) = ∫_y^∞ e^{−w} w^{a−1} dw` for `y > 0`.
pub fn gamma_inc(a: f64, y: f64) -> Result<f64> {
    if y < 1.0 || (a > 0.0 && y < a + 1.0) {
        return gamma_inc_small(a, y);
    }
    Ok(gamma_inc_scaled(a, y)? * (-y).exp())
}

/// `e^y Γ(a, y)`, finite for large `y` where `Γ(a, y)` underflows.
pub fn gamma_inc_scaled(a: f64, y: f64) -> Result<f64> {
    if !(y > 0.0) {
        return Err(Error::Domain(format!("incomplete gamma needs y > 0, got {}", y)));
    }
    if y < 1.0 || (a > 0.0 && y < a + 1.0) {
        return Ok(gamma_inc_small(a, y)? * y.exp());
    }
    Ok((a * y.ln()).exp() * continued_fraction(a, y)?)
}

fn gamma_inc_small(a: f64, y: f64) -> Result<f64> {
    if !(y > 0.0) {
        return Err(Error::Domain(format!("incomplete gamma needs y > 0, got {}", y)));
    }
    if a > 0.0 {
        return Ok(gamma(a) - lower_series(a, y)?);
    }
    if a.fract() == 0.0 {
        // Γ(0, y) = E1(y), then down to a
        let mut g = e1_series(y)?;
        let mut b = 0.0;
        while b > a {
            b -= 1.0;
            g = (g - y.powf(b) * (-y).exp()) / b;
        }
        return Ok(g);
    }
    let n = (-a).floor() as i64 + 1;
    let mut b = a + n as f64;
    let mut g = gamma(b) - lower_series(b, y)?;
    for _ in 0..n {
        b -= 1.0;
        g = (g - y.powf(b) * (-y).exp()) / b;
    }
    Ok(g)
}

/// Lower incomplete Gamma `γ(a, y)` by its power series, `a > 0`.
fn lower_series(a: f64, y: f64) -> Result<f64> {
    let mut ap = a;
    let mut del = 1.0 / a;
    let mut sum = del;
    for _ in 0..MAX_IT {
        ap += 1.0;
        del *= y / ap;
        sum += del;
        if del.abs() < sum.abs() * EPS {
            return Ok(sum * (-y + a * y.ln()).exp());
        }
    }
    Err(Error::NoConvergence(format!("lower incomplete gamma series at a = {}, y = {}", a, y)))
}

/// Modified Lentz evaluation of `y^{−a} e^y Γ(a, y)`.
fn continued_fraction(a: f64, y: f64) -> Result<f64> {
    const TINY: f64 = 1e-300;
    let mut b = y + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_IT {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            return Ok(h);
        }
    }
    Err(Error::NoConvergence(format!("incomplete gamma continued fraction at a = {}, y = {}", a, y)))
}

fn e1_series(y: f64) -> Result<f64> {
    let mut sum = 0.0;
    let mut term = 1.0;
    for n in 1..MAX_IT {
        term *= -y / n as f64;
        let t = term / n as f64;
        sum += t;
        if t.abs() < EPS * sum.abs().max(1e-300) {
            return Ok(-EULER_GAMMA - y.ln() - sum);
        }
    }
    Err(Error::NoConvergence(format!("E1 series at y = {}", y)))
}
