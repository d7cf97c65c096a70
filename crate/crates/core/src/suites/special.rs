//! special-asymptotics

use serde_json::json;

use super::report::{Check, Outcome};
use super::SuiteConfig;
use crate::error::Result;
use crate::fourier::holonomic::whittaker_indices;
use crate::special::quad::exp_sinh;
use crate::special::{gamma_inc_scaled, h_function, whittaker_w};

const AT: f64 = 40.0;
const BAND: f64 = 5e-2;
/// `10, 20, 40, …, 640`
const Y_GRID: [f64; 7] = [10.0, 20.0, 40.0, 80.0, 160.0, 320.0, 640.0];
const H_PAIRS: [(f64, f64); 6] = [(-5.0, -0.3), (-2.0, -1.0), (0.0, -0.5), (1.0, -2.0), (3.0, -0.7), (5.0, -1.5)];

fn ratio_outcome(f: impl Fn(f64) -> Result<f64>) -> Result<Outcome> {
    let ratios: Vec<f64> = Y_GRID.iter().map(|&y| f(y)).collect::<Result<_>>()?;
    let entered = Y_GRID.iter().zip(&ratios).position(|(_, r)| (r - 1.0).abs() <= BAND).map(|i| Y_GRID[i]);
    Ok(Outcome::new(vec![(f(AT)? - 1.0).abs()], json!({ "y": Y_GRID, "ratio": ratios, "band_entered_at": entered })))
}

/// `e^{−w} ∫_{−2w}^∞ e^{−t} t^{½−k} dt`
fn h_by_quadrature(w: f64, k: f64) -> Result<f64> {
    Ok((-w).exp() * exp_sinh(|t| (-t).exp() * t.powf(0.5 - k), -2.0 * w, 1e-13)?)
}

pub fn asymptotics(config: &SuiteConfig) -> Result<Vec<Check>> {
    let ks = config.ks(&[5, -5]);
    let mut w_sets = vec![(-1.0, 0.5)];
    w_sets.extend(ks.iter().map(|&k| whittaker_indices(k)));
    let mut g_sets = vec![-2.0];
    for &k in &ks {
        g_sets.extend([2.0 - k as f64, 1.5 - k as f64]);
    }
    let mut out = Vec::new();
    for (nu, mu) in w_sets {
        out.push(Check::new(
            format!("whittaker-w/nu={}/mu={}", nu, mu),
            "W_{nu,mu}(y) / (y^nu e^(-y/2)) is within the band around 1 at y = 40",
            json!({ "nu": nu, "mu": mu, "y": AT, "band": BAND }),
            config.tol(BAND),
            move || ratio_outcome(|y| Ok(whittaker_w(nu, mu, y)? / (y.powf(nu) * (-y / 2.0).exp()))),
        ));
    }
    for a in g_sets {
        out.push(Check::new(
            format!("gamma-inc/a={}", a),
            "Gamma(a, y) / (y^(a-1) e^(-y)) is within the band around 1 at y = 40",
            json!({ "a": a, "y": AT, "band": BAND }),
            config.tol(BAND),
            move || ratio_outcome(|y| Ok(gamma_inc_scaled(a, y)? / y.powf(a - 1.0))),
        ));
    }
    out.push(Check::new(
        "h-function/negative-w",
        "H(w) = e^(-w) Gamma(3/2-k, -2w) agrees with quadrature of its defining integral for w < 0",
        json!({ "pairs": H_PAIRS.iter().map(|(k, w)| json!({ "k": k, "w": w })).collect::<Vec<_>>() }),
        config.tol(1e-9),
        || {
            let mut res = Vec::new();
            let mut vals = Vec::new();
            for (k, w) in H_PAIRS {
                let h = h_function(w, k)?;
                let q = h_by_quadrature(w, k)?;
                res.push(((h.re - q) / q).abs().max(h.im.abs() / q.abs()));
                vals.push([h.re, q]);
            }
            Ok(Outcome::new(res, json!({ "closed_form_vs_quadrature": vals })))
        },
    ));
    Ok(out)
}
