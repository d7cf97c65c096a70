//! Growth classification of `Σ g_n(u) v^n` along `V = U²/2`.
//!
//! Coordinates: `U = 2πu`, `V = 4π²v`; the grid is given in `u`. The verdict
//! is read off the recorded values only.

use num_rational::BigRational;
use serde::Serialize;

use super::holonomic::{m_seed_exact, seed_values, HolonomicTower, SeedKind, SEED_TOL};
use crate::error::Result;
use crate::exec::Exec;

/// Default depth of the tower used by the diagnostic.
pub const GROWTH_DEPTH: usize = 180;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Growth {
    Moderate,
    Rapid,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthPoint {
    pub u: f64,
    pub value: f64,
    /// `ψ`, `φ`, `φ'` contributions; their spread shows the cancellation.
    pub parts: [f64; 3],
    /// bound on the error of `value` from the seed values
    pub abs_error: f64,
    pub threshold: f64,
    /// `|last term / sum|`
    pub tail_ratio: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthReport {
    pub k: i64,
    pub seed: SeedKind,
    pub depth: usize,
    /// `κ = 2b`, recorded alongside the run.
    pub kappa: f64,
    pub coefficient_bound: f64,
    /// `V = λ U²`
    pub path_lambda: String,
    /// threshold `u^(|1−k| + margin)`
    pub threshold_exponent: f64,
    /// the verdict is read on `u ≥ rapid_from`
    pub rapid_from: f64,
    pub grid: Vec<GrowthPoint>,
    pub verdict: Growth,
}

/// Threshold margin over `|1 − k|`.
pub const THRESHOLD_MARGIN: f64 = 4.0;

/// `u ∈ {lo, lo+step, ..., hi}`.
pub fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    (0..=n).map(|i| lo + i as f64 * step).collect()
}

pub fn growth_diagnostic(seed: SeedKind, k: i64, depth: usize, u_grid: &[f64], exec: Exec) -> Result<GrowthReport> {
    let tower = HolonomicTower::new(k, depth)?;
    growth_from_tower(&tower, seed, u_grid, exec)
}

pub fn growth_from_tower(tower: &HolonomicTower, seed: SeedKind, u_grid: &[f64], exec: Exec) -> Result<GrowthReport> {
    let k = tower.k;
    let lambda = BigRational::new(1.into(), 2.into());
    let exponent = (1 - k).abs() as f64 + THRESHOLD_MARGIN;
    let n = tower.depth();
    let full = tower.path_polys(&lambda, n);
    let short = tower.path_polys(&lambda, n.saturating_sub(1));
    let points: Vec<Result<GrowthPoint>> = exec.map(u_grid, |&u| {
        let big_u = 2.0 * std::f64::consts::PI * u;
        let (value, parts, prev, abs_error) = match seed {
            SeedKind::MIntegral => {
                // the three parts cancel far beyond double precision
                let uq = BigRational::from_float(big_u).unwrap();
                let s = m_seed_exact(k, &uq)?;
                let (value, parts) = full.sum_exact(&uq, &s)?;
                let (prev, _) = short.sum_exact(&uq, &s)?;
                (value, parts, prev, value.abs() * 1e-15)
            }
            _ => {
                let s = seed_values(seed, k, big_u)?;
                let parts = full.sum_parts(big_u, &s)?;
                let prev: f64 = short.sum_parts(big_u, &s)?.iter().sum();
                let value: f64 = parts.iter().sum();
                let scale: f64 = parts.iter().map(|p| p.abs()).sum();
                let tol = if seed == SeedKind::WIntegral { SEED_TOL } else { 1e-15 };
                (value, parts, prev, scale * tol)
            }
        };
        let last = value - prev;
        let tail_ratio = if value == 0.0 { 0.0 } else { (last / value).abs() };
        Ok(GrowthPoint { u, value, parts, abs_error, threshold: u.powf(exponent), tail_ratio })
    });
    let grid: Vec<GrowthPoint> = points.into_iter().collect::<Result<_>>()?;
    let (lo, hi) = match (u_grid.first(), u_grid.last()) {
        (Some(a), Some(b)) => (*a, *b),
        _ => (0.0, 0.0),
    };
    let rapid_from = 0.5 * (lo + hi);
    let top: Vec<&GrowthPoint> = grid.iter().filter(|p| p.u >= rapid_from).collect();
    let rapid = !top.is_empty() && top.iter().all(|p| p.value.abs() - p.abs_error > p.threshold);
    let b = tower.coefficient_bound(seed);
    Ok(GrowthReport {
        k,
        seed,
        depth: n,
        kappa: 2.0 * b,
        coefficient_bound: b,
        path_lambda: lambda.to_string(),
        threshold_exponent: exponent,
        rapid_from,
        grid,
        verdict: if rapid { Growth::Rapid } else { Growth::Moderate },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_seed_is_moderate() {
        let r = growth_diagnostic(SeedKind::Zero, 5, 8, &grid(4.0, 10.0, 2.0), Exec::Sequential).unwrap();
        assert_eq!(r.verdict, Growth::Moderate);
        assert!(r.grid.iter().all(|p| p.value == 0.0));
    }

    #[test]
    fn grid_endpoints() {
        let g = grid(4.0, 40.0, 1.0);
        assert_eq!(g.len(), 37);
        assert_eq!(g[36], 40.0);
    }
}
