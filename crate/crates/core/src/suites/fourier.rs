//! growth, ratio-decay

use std::sync::Arc;

use serde_json::json;

use super::report::{Check, Outcome};
use super::SuiteConfig;
use crate::error::{Error, Result};
use crate::fourier::growth::{grid, growth_from_tower, GROWTH_DEPTH};
use crate::fourier::{coeff_ratio_decay, Growth, HolonomicTower, SeedKind};

const RATIO_N: usize = 400;
const RATIO_THRESHOLD: f64 = 1e-6;

pub fn growth(config: &SuiteConfig) -> Result<Vec<Check>> {
    let u_grid = grid(4.0, 40.0, 1.0);
    let exec = config.exec();
    let mut out = Vec::new();
    for k in config.ks(&[5, -5]) {
        let tower = Arc::new(HolonomicTower::new(k, GROWTH_DEPTH)?);
        let expected = [
            (SeedKind::Laurent, Growth::Rapid),
            (SeedKind::MIntegral, Growth::Rapid),
            (SeedKind::WIntegral, Growth::Moderate),
            (SeedKind::Zero, Growth::Moderate),
        ];
        for (seed, want) in expected {
            let (tower, u_grid) = (tower.clone(), u_grid.clone());
            out.push(Check::new(
                format!("growth/k={}/{}", k, seed.name()),
                "partial sums along the path classify as expected against u^(|1-k|+4) on the top half of [4, 40]",
                json!({ "k": k, "seed": seed.name(), "expected": want, "depth": GROWTH_DEPTH, "u_grid": [4.0, 40.0, 1.0] }),
                0.0,
                move || {
                    let r = growth_from_tower(&tower, seed, &u_grid, exec)?;
                    let miss = if r.verdict == want { 0.0 } else { 1.0 };
                    Ok(Outcome::new(vec![miss], serde_json::to_value(&r)?))
                },
            ));
        }
    }
    Ok(out)
}

pub fn ratio_decay(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in config.ks(&[-2, -5]) {
        if k >= 0 {
            return Err(Error::Config(format!("ratio-decay needs k < 0, got {}", k)));
        }
        out.push(Check::new(
            format!("ratio-decay/k={}", k),
            "the exact coefficient ratio falls below the threshold by n = 400 and decreases monotonically from a reported index",
            json!({ "k": k, "n_max": RATIO_N, "threshold": RATIO_THRESHOLD }),
            config.tol(RATIO_THRESHOLD),
            move || {
                let r = coeff_ratio_decay(k, RATIO_N)?;
                // a missing monotone tail counts as an infinite residual
                let monotone = if r.monotone_from.is_some() { 0.0 } else { f64::INFINITY };
                Ok(Outcome::new(vec![r.last.abs(), monotone], serde_json::to_value(&r)?))
            },
        ));
    }
    Ok(out)
}
