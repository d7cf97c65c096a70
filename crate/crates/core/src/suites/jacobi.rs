//! jacobi-operators, kohnen-limit

use std::sync::Arc;
use std::time::Instant;

use serde_json::json;

use super::cache::jacobi_family;
use super::points::jacobi_points;
use super::report::{Check, Outcome};
use super::SuiteConfig;
use crate::error::Result;
use crate::fit::proportionality;
use crate::jacobi::*;
use crate::siegel::x_orbits;
use crate::stencil::Stencil;
use num_complex::Complex64 as C64;

const M: i64 = 1;

fn pair(c: C64) -> [f64; 2] {
    [c.re, c.im]
}

pub fn operators(config: &SuiteConfig) -> Result<Vec<Check>> {
    let exec = config.exec();
    let (lo, hi) = (config.bound / 2, config.bound);
    let full = Arc::new(jacobi_family(hi, config.cache_dir.as_deref())?);
    let low = Arc::new(full.restrict(lo));
    let st = Stencil::new(config.step)?.with_exec(exec);
    let nested = Stencil::new(config.nested_step)?.with_exec(exec);
    let pts = Arc::new(jacobi_points(config.seed.wrapping_add(2), 5));
    let skew = JacobiSeries::Skew { k: 5, seed: 0.0 };
    let psi = JacobiSeries::Skew { k: -5, seed: 6.5 };
    let mut out = Vec::new();

    {
        let (full, low, pts) = (full.clone(), low.clone(), pts.clone());
        out.push(Check::new(
            format!("heat-ladder/k=5/bounds={}-{}", lo, hi),
            "|L_1 E| for the skew Eisenstein truncation at least halves from the lower to the upper bound at each point",
            json!({ "k": 5, "m": M, "bounds": [lo, hi], "cosets": [low.len(), full.len()], "points": pts.len() }),
            0.5,
            move || {
                let run = |fam: &Arc<JacobiCosetFamily>| -> Result<Vec<f64>> {
                    let f = series_evaluator(skew, M, fam.clone(), exec)?;
                    pts.iter().map(|p| Ok(heat_l(&f, M, p, &st)?.norm())).collect()
                };
                let (a, b) = (run(&low)?, run(&full)?);
                let values: Vec<f64> = pts.iter().map(|p| Ok(skew_eisenstein(skew, M, p, &full, exec)?.norm())).collect::<Result<_>>()?;
                Ok(Outcome::new(a.iter().zip(&b).map(|(a, b)| b / a).collect(), json!({ "lower": a, "upper": b, "function_size": values })))
            },
        ));
    }
    {
        let (full, low, pts) = (full.clone(), low.clone(), pts.clone());
        out.push(Check::new(
            format!("casimir-ladder/k=-5/bounds={}-{}", lo, hi),
            "|C^sk psi| for the truncated psi at least halves from the lower to the upper bound at each point",
            json!({ "k": -5, "m": M, "seed": "y^(3/2-k)", "bounds": [lo, hi], "cosets": [low.len(), full.len()], "points": pts.len(), "nested_step": config.nested_step }),
            0.5,
            move || {
                let run = |fam: &Arc<JacobiCosetFamily>| -> Result<Vec<f64>> {
                    let f = series_evaluator(psi, M, fam.clone(), exec)?;
                    pts.iter().map(|p| Ok(casimir_sk(&f, -5, M, p, &nested, &nested)?.norm())).collect()
                };
                let (a, b) = (run(&low)?, run(&full)?);
                Ok(Outcome::new(a.iter().zip(&b).map(|(a, b)| b / a).collect(), json!({ "lower": a, "upper": b })))
            },
        ));
    }
    {
        let (low, pts) = (low.clone(), pts.clone());
        out.push(Check::new(
            format!("xi-sk-holomorphic/k=-5/bound={}", lo),
            "xi^sk psi is proportional to the weight-8 holomorphic Jacobi Eisenstein truncation (single fitted scalar)",
            json!({ "k": -5, "m": M, "weight": 8, "bound": lo, "cosets": low.len(), "points": pts.len() }),
            config.tol(5e-2),
            move || {
                let f = series_evaluator(psi, M, low.clone(), exec)?;
                let xi = xi_sk(&f, -5, M, st)?;
                let a: Vec<C64> = pts.iter().map(|p| xi.eval(p)).collect::<Result<_>>()?;
                let hol = JacobiSeries::Holomorphic { k: 8, seed: 0.0 };
                let b: Vec<C64> = pts.iter().map(|p| skew_eisenstein(hol, M, p, &low, exec)).collect::<Result<_>>()?;
                let fit = proportionality(&a, &b);
                Ok(Outcome::new(vec![fit.spread], json!({ "scalar": pair(fit.scalar), "expected_scalar": 6.5 })))
            },
        ));
    }
    {
        let full = full.clone();
        let size = config.quad_size;
        let lo6 = (3 * hi / 4).max(1);
        out.push(Check::new(
            format!("nonvanishing/k=5/bounds={}-{}", lo6, hi),
            "the (0,0) coefficient of the skew Eisenstein truncation exceeds ten times its drift between the two bounds",
            json!({ "k": 5, "m": M, "n": 0, "r": 0, "y": 1.0, "v": 0.0, "bounds": [lo6, hi], "quad_size": size }),
            0.1,
            move || {
                let coeff = |b: i64| -> Result<C64> {
                    let f = series_evaluator(skew, M, Arc::new(full.restrict(b)), exec)?;
                    fourier_coeff_jacobi(&f, 0, 0, 1.0, 0.0, size, exec)
                };
                let (a, b) = (coeff(lo6)?, coeff(hi)?);
                Ok(Outcome::new(vec![(b - a).norm() / b.norm()], json!({ "lower": pair(a), "upper": pair(b) })))
            },
        ));
    }
    {
        let full = full.clone();
        let size = config.quad_size;
        out.push(Check::new(
            "class-fit/k=5/(0,1)",
            "the (0,1) coefficient (D = 1) follows the c+ profile exp(-pi D y / m) between two heights",
            json!({ "k": 5, "m": M, "n": 0, "r": 1, "heights": [0.9, 1.3], "bound": hi, "quad_size": size }),
            config.tol(1e-3),
            move || {
                let f = series_evaluator(skew, M, full.clone(), exec)?;
                let c1 = fourier_coeff_jacobi(&f, 0, 1, 0.9, 0.0, size, exec)?;
                let c2 = fourier_coeff_jacobi(&f, 0, 1, 1.3, 0.0, size, exec)?;
                let fits = class_fit(c1, c2, 0, 1, 5, M, (0.9, 1.3), 0.0)?;
                let plus = fits.iter().find(|(c, _)| *c == CoefficientClass::Plus).map_or(f64::NAN, |x| x.1);
                Ok(Outcome::new(vec![plus], json!({ "fits": fits })))
            },
        ));
    }
    Ok(out)
}

pub fn kohnen(config: &SuiteConfig) -> Result<Vec<Check>> {
    let exec = config.exec();
    let grid = config.delta_grid;
    let cauchy_tol = config.tol(1e-3);
    let pts = Arc::new(jacobi_points(config.seed.wrapping_add(3), 5));
    let orbits = Arc::new(x_orbits(config.orbit_bound)?);
    let jac = Arc::new(jacobi_family(config.orbit_bound, config.cache_dir.as_deref())?);
    let k = 5;
    // shared by the Cauchy and proportionality checks
    let started = Instant::now();
    let slice = kohnen_slice(k, 0.0, M, orbits.clone(), exec)?;
    let limits: Arc<Vec<KohnenLimit>> =
        Arc::new(pts.iter().map(|p| kohnen_limit(&slice, M, p.tau, p.z, &grid, cauchy_tol)).collect::<Result<_>>()?);
    let shared_secs = started.elapsed().as_secs_f64();
    let mut out = Vec::new();
    {
        let (limits, orbits) = (limits.clone(), orbits.clone());
        out.push(Check::new(
            format!("kohnen-cauchy/k=5/orbit-bound={}", config.orbit_bound),
            "the compensated delta-sequence of the P_{5,0} slice settles: largest relative step over the last three nodes",
            json!({ "k": k, "m": M, "s": 0.0, "orbit_bound": config.orbit_bound, "free_orbits": orbits.free().count(), "delta_grid": grid, "points": pts.len() }),
            cauchy_tol,
            move || {
                let detail = json!({ "limits": &*limits, "shared_wall_time_s": shared_secs });
                Ok(Outcome::new(limits.iter().map(|r| r.cauchy).collect(), detail))
            },
        ));
    }
    {
        let (limits, pts, jac) = (limits.clone(), pts.clone(), jac.clone());
        out.push(Check::new(
            format!("kohnen-proportional/k=5/orbit-bound={}", config.orbit_bound),
            "y^(1/2-k) times the limit is proportional to the direct skew Eisenstein truncation (single fitted scalar)",
            json!({ "k": k, "m": M, "jacobi_bound": config.orbit_bound, "points": pts.len() }),
            config.tol(5e-2),
            move || {
                let a: Vec<C64> = limits.iter().zip(pts.iter()).map(|(r, p)| p.y().powf(0.5 - k as f64) * r.limit).collect();
                let series = JacobiSeries::Skew { k, seed: 0.0 };
                let b: Vec<C64> = pts.iter().map(|p| skew_eisenstein(series, M, p, &jac, exec)).collect::<Result<_>>()?;
                let fit = proportionality(&a, &b);
                Ok(Outcome::new(
                    vec![fit.spread],
                    json!({ "scalar": pair(fit.scalar), "limits": a.iter().map(|c| pair(*c)).collect::<Vec<_>>(), "direct": b.iter().map(|c| pair(*c)).collect::<Vec<_>>() }),
                ))
            },
        ));
    }
    {
        let pts = pts.clone();
        let (kr, n, r) = (-5, 1, 1);
        let c2 = C64::new(0.7, -0.2);
        out.push(Check::new(
            "rank1-limit/k=-5/(n,r)=(1,1)",
            "the limit of the rank-1 W-term slice reproduces the closed-form limit",
            json!({ "k": kr, "m": M, "n": n, "r": r, "c2": pair(c2), "delta_grid": grid, "points": pts.len() }),
            config.tol(1e-4),
            move || {
                let slice = rank1_slice(kr, M, n, r, c2)?;
                let mut res = Vec::new();
                let mut cauchy = Vec::new();
                for p in pts.iter() {
                    let l = kohnen_limit(&slice, M, p.tau, p.z, &grid, cauchy_tol)?;
                    let got = p.y().powf(0.5 - kr as f64) * l.limit;
                    let want = rank1_limit(kr, M, n, r, c2, p.tau, p.z)?;
                    res.push((got - want).norm() / want.norm());
                    cauchy.push(l.cauchy);
                }
                Ok(Outcome::new(res, json!({ "cauchy": cauchy })))
            },
        ));
    }
    Ok(out)
}
