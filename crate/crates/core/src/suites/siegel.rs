//! siegel-operators, eisenstein

use std::f64::consts::PI;
use std::sync::Arc;

use serde_json::json;

use super::cache::siegel_family;
use super::points::siegel_points;
use super::report::{Check, Outcome};
use super::SuiteConfig;
use crate::error::Result;
use crate::fit::proportionality;
use crate::siegel::point::C64;
use crate::siegel::*;
use crate::stencil::Stencil;

const OMEGA_PAIRS: [(i64, f64); 4] = [(5, 0.0), (5, -0.5), (-5, 6.5), (-5, 7.0)];
/// Coarse steps for the order check; at the working step the residual is
/// already at the rounding floor.
const HALVING_STEPS: (f64, f64) = (0.08, 0.04);

fn max(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(0.0, |m: f64, x| if x.is_nan() || m.is_nan() { f64::NAN } else { m.max(x) })
}

/// Largest entry of `Ω − λ·det Y^s·I₂`, relative to `max(|λ|, 1)·det Y^s`.
fn omega_residual(s: f64, k: i64, z: &SiegelPoint, st: &Stencil) -> Result<f64> {
    let o = omega_apply(&det_y_power(s), z, 0.5, k as f64 - 0.5, st)?;
    let lambda = -s * (s - (1.5 - k as f64));
    let d = z.det_y().powf(s);
    let want = C64::new(lambda * d, 0.0);
    let scale = lambda.abs().max(1.0) * d;
    Ok(max([(o[0][0] - want).norm(), (o[1][1] - want).norm(), o[0][1].norm(), o[1][0].norm()]) / scale)
}

pub fn operators(config: &SuiteConfig) -> Result<Vec<Check>> {
    let st = Stencil::new(config.step)?.with_exec(config.exec());
    let nested = Stencil::new(config.nested_step)?.with_exec(config.exec());
    let pts = Arc::new(siegel_points(config.seed, 10));
    let mut out = Vec::new();
    for (k, s) in OMEGA_PAIRS {
        let z = pts[0];
        let pts = pts.clone();
        out.push(Check::new(
            format!("omega-eigen/k={}/s={}", k, s),
            "Omega_{1/2,k-1/2} det Y^s = -s(s-(3/2-k)) det Y^s I_2 at 10 points",
            json!({ "k": k, "s": s, "points": pts.len(), "step": config.step }),
            config.tol(1e-6),
            move || {
                let r: Vec<f64> = pts.iter().map(|z| omega_residual(s, k, z, &st)).collect::<Result<_>>()?;
                Ok(Outcome::new(r, json!({})))
            },
        ));
        if s != 0.0 {
            // det Y^0 is constant and has no truncation error to halve
            out.push(Check::new(
                format!("omega-halving/k={}/s={}", k, s),
                "halving the stencil step shrinks the Omega residual at least 8-fold",
                json!({ "k": k, "s": s, "steps": [HALVING_STEPS.0, HALVING_STEPS.1] }),
                1.0 / 8.0,
                move || {
                    let e1 = omega_residual(s, k, &z, &Stencil::new(HALVING_STEPS.0)?)?;
                    let e2 = omega_residual(s, k, &z, &Stencil::new(HALVING_STEPS.1)?)?;
                    Ok(Outcome::new(vec![e2 / e1], json!({ "residual_h": e1, "residual_h_over_2": e2 })))
                },
            ));
        }
    }
    for (n, r, m) in [(1.0, 1.0, 1.0), (2.0, -1.0, 1.0), (1.0, 0.0, 3.0)] {
        let pts = pts.clone();
        out.push(Check::new(
            format!("omega-holomorphic/T=({},{},{})", n, r, m),
            "Omega_{k,0} annihilates exp(2 pi i tr(TZ)) for positive definite T at 10 points (relative to the size of its second-order terms)",
            json!({ "k": 5, "T": [[n, r / 2.0], [r / 2.0, m]], "points": pts.len() }),
            config.tol(1e-6),
            move || {
                let g = exp_trace(n, r, m);
                let res: Vec<f64> = pts
                    .iter()
                    .map(|z| {
                        let o = omega_apply(&g, z, 5.0, 0.0, &st)?;
                        // every term of Ω_{k,0} is a second-order derivative of size ~(2π tr(TY))²|g|
                        let y = z.y();
                        let tr = n * y[0][0] + r * y[0][1] + m * y[1][1];
                        let scale = g.eval(z)?.norm() * (1.0 + 2.0 * PI * tr).powi(2);
                        Ok(max(o.iter().flatten().map(|x| x.norm())) / scale)
                    })
                    .collect::<Result<_>>()?;
                Ok(Outcome::new(res, json!({})))
            },
        ));
    }
    for s in [0.9, 2.5, -1.3] {
        let pts = pts.clone();
        out.push(Check::new(
            format!("maass-m/s={}", s),
            "M_{1/2} det Y^s = s(s+1/2) det Y^s",
            json!({ "s": s, "points": pts.len() }),
            config.tol(1e-6),
            move || {
                let res: Vec<f64> = pts
                    .iter()
                    .map(|z| {
                        let want = s * (s + 0.5) * z.det_y().powf(s);
                        Ok((maass_m(&det_y_power(s), 0.5, z, &st)? - want).norm() / want.abs())
                    })
                    .collect::<Result<_>>()?;
                Ok(Outcome::new(res, json!({})))
            },
        ));
    }
    for k in [5i64, -5] {
        let pts = pts.clone();
        let s = 1.5 - k as f64;
        out.push(Check::new(
            format!("xi2-constant/k={}", k),
            "xi^(2) det Y^(3/2-k) is the constant (3/2-k)(2-k)",
            json!({ "k": k, "points": pts.len() }),
            config.tol(1e-6),
            move || {
                let want = s * (s + 0.5);
                let res: Vec<f64> =
                    pts.iter().map(|z| Ok((xi2(&det_y_power(s), k, z, &st)? - want).norm() / want.abs())).collect::<Result<_>>()?;
                Ok(Outcome::new(res, json!({ "constant": want })))
            },
        ));
    }
    let kernel = [(5i64, 0.0), (5, -3.5), (5, -0.5), (-5, 0.0), (-5, 6.5), (-5, 7.0)];
    for (k, s) in kernel {
        let pts = pts.clone();
        out.push(Check::new(
            format!("casimir-kernel/k={}/s={}", k, s),
            "C = N_{k-3/2} M_{1/2} annihilates det Y^s (nested stencils)",
            json!({ "k": k, "s": s, "points": 3, "nested_step": config.nested_step }),
            config.tol(1e-4),
            move || {
                let res: Vec<f64> = pts[..3]
                    .iter()
                    .map(|z| Ok(casimir_c(&det_y_power(s), k, z, nested, &nested)?.norm() / z.det_y().powf(s)))
                    .collect::<Result<_>>()?;
                Ok(Outcome::new(res, json!({})))
            },
        ));
    }
    let z = pts[0];
    out.push(Check::new(
        "casimir-control/k=5/s=1",
        "control: C det Y^1 is far from zero and equals the product of the M and N eigenvalues",
        json!({ "k": 5, "s": 1.0 }),
        config.tol(1e-4),
        move || {
            let d = z.det_y();
            let c = casimir_c(&det_y_power(1.0), 5, &z, nested, &nested)? / d;
            let m = maass_m(&det_y_power(1.0), 0.5, &z, &st)? / d;
            let n = maass_n(&det_y_power(1.0), 3.5, &z, &st)? / d;
            // the first residual is below 1e-4 only if |C| exceeds 1e4·(kernel tolerance)
            Ok(Outcome::new(vec![1e-4 / c.norm(), (c - m * n).norm() / (m * n).norm()], json!({ "value": [c.re, c.im], "m_times_n": [(m * n).re, (m * n).im] })))
        },
    ));
    Ok(out)
}

pub fn eisenstein(config: &SuiteConfig) -> Result<Vec<Check>> {
    let exec = config.exec();
    let (lo, hi) = (config.bound / 2, config.bound);
    let full = Arc::new(siegel_family(hi, config.cache_dir.as_deref())?);
    let low = Arc::new(full.restrict(lo));
    let st = Stencil::new(config.step)?.with_exec(exec);
    let pts = Arc::new(siegel_points(config.seed.wrapping_add(1), 5));
    let mut out = Vec::new();
    {
        let (full, low, pts) = (full.clone(), low.clone(), pts.clone());
        out.push(Check::new(
            format!("xi2-ladder/k=5/s=0/bounds={}-{}", lo, hi),
            "|xi^(2) P_{5,0}| at least halves from the lower to the upper truncation at each point",
            json!({ "k": 5, "s": 0.0, "bounds": [lo, hi], "cosets": [low.len(), full.len()], "points": pts.len() }),
            0.5,
            move || {
                let f = |fam: &Arc<CosetFamily>| -> Result<Vec<f64>> {
                    let p = eisenstein_evaluator(5, 0.0, fam.clone(), exec)?;
                    pts.iter().map(|z| Ok(xi2(&p, 5, z, &st)?.norm())).collect()
                };
                let (a, b) = (f(&low)?, f(&full)?);
                let ratios: Vec<f64> = a.iter().zip(&b).map(|(a, b)| b / a).collect();
                Ok(Outcome::new(ratios, json!({ "lower": a, "upper": b })))
            },
        ));
    }
    {
        let (low, pts) = (low.clone(), pts.clone());
        out.push(Check::new(
            format!("xi2-holomorphic/k=-5/s=6.5/bound={}", lo),
            "xi^(2) P_{-5,13/2} is proportional to the weight-8 holomorphic Eisenstein truncation (single fitted scalar)",
            json!({ "k": -5, "s": 6.5, "weight": 8, "bound": lo, "cosets": low.len(), "points": pts.len() }),
            config.tol(5e-2),
            move || {
                let p = eisenstein_evaluator(-5, 6.5, low.clone(), exec)?;
                let a: Vec<C64> = pts.iter().map(|z| xi2(&p, -5, z, &st)).collect::<Result<_>>()?;
                let b: Vec<C64> = pts.iter().map(|z| holomorphic_eisenstein(8, z, &low, exec)).collect::<Result<_>>()?;
                let fit = proportionality(&a, &b);
                Ok(Outcome::new(vec![fit.spread], json!({ "scalar": [fit.scalar.re, fit.scalar.im], "expected_scalar": 45.5 })))
            },
        ));
    }
    {
        let (full, pts) = (full.clone(), pts.clone());
        out.push(Check::new(
            format!("truncation-ladder/k=5/s=0/bound={}", hi),
            "successive truncations of P_{5,0} settle: relative change over the top two bounds",
            json!({ "k": 5, "s": 0.0, "bounds": (1..=hi).collect::<Vec<_>>() }),
            config.tol(5e-2),
            move || {
                let bounds: Vec<i64> = (1..=hi).collect();
                let mut res = Vec::new();
                let mut rungs = Vec::new();
                for z in pts.iter() {
                    let l = eisenstein_ladder(5, 0.0, z, &full, &bounds, exec)?;
                    let (a, b) = (l[l.len() - 2].value, l[l.len() - 1].value);
                    res.push((b - a).norm() / b.norm());
                    rungs.push(l.iter().map(|r| [r.value.re, r.value.im]).collect::<Vec<_>>());
                }
                Ok(Outcome::new(res, json!({ "rungs": rungs })))
            },
        ));
    }
    Ok(out)
}
