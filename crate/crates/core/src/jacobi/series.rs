//! Truncated Jacobi Eisenstein and Poincaré sums.

use std::sync::Arc;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::cosets::JacobiCosetFamily;
use super::point::JacobiPoint;
use super::slash::{holo_factor, skew_factor, JacobiEvaluator};
use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::exec::{pairwise_sum, Exec};

/// Which slash and which `y`-power seed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum JacobiSeries {
    /// `Σ (y^seed |^{sk}_{k,m} A)`
    Skew { k: i64, seed: f64 },
    /// `Σ (y^seed |_{k,m} A)`
    Holomorphic { k: i64, seed: f64 },
}

impl JacobiSeries {
    pub fn weight(&self) -> i64 {
        match *self {
            JacobiSeries::Skew { k, .. } | JacobiSeries::Holomorphic { k, .. } => k,
        }
    }

    pub fn seed(&self) -> f64 {
        match *self {
            JacobiSeries::Skew { seed, .. } | JacobiSeries::Holomorphic { seed, .. } => seed,
        }
    }

    /// `Re(s′) > (3 − k′)/2`. A skew sum of weight `k` with seed `y^a` is
    /// `y^{½−k}` times the holomorphic-slash sum of weight `1 − k` with seed
    /// `y^{a+k−½}`, which puts both under the same inequality `a > (3 − k)/2`.
    pub fn check_regime(&self) -> Result<()> {
        let (k, a) = (self.weight() as f64, self.seed());
        if a <= (3.0 - k) / 2.0 {
            return Err(Error::Domain(format!("{:?} outside the convergence regime seed > (3 − k)/2", self)));
        }
        Ok(())
    }

    fn term(&self, g: &super::group::JacobiGroupElement, p: &JacobiPoint, m: i64) -> Result<C64> {
        let q = g.act(p)?;
        let f = match *self {
            JacobiSeries::Skew { k, .. } => skew_factor(g, p.tau, k),
            JacobiSeries::Holomorphic { k, .. } => holo_factor(g, p.tau, k),
        };
        let seed = self.seed();
        let s = if seed == 0.0 { 1.0 } else { q.y().powf(seed) };
        Ok(f * g.index_factor(p, m) * s)
    }
}

/// Truncated sum over the family, pairwise-reduced in family order.
pub fn skew_eisenstein(series: JacobiSeries, m: i64, p: &JacobiPoint, family: &JacobiCosetFamily, exec: Exec) -> Result<C64> {
    series.check_regime()?;
    let terms: Vec<Result<C64>> = exec.map(&family.reps, |g| series.term(g, p, m));
    let terms: Vec<C64> = terms.into_iter().collect::<Result<_>>()?;
    Ok(pairwise_sum(&terms))
}

pub fn series_evaluator(series: JacobiSeries, m: i64, family: Arc<JacobiCosetFamily>, exec: Exec) -> Result<JacobiEvaluator> {
    series.check_regime()?;
    let weight = match series {
        JacobiSeries::Skew { k, .. } => format!("skew ({}, {})", k, m),
        JacobiSeries::Holomorphic { k, .. } => format!("({}, {})", k, m),
    };
    Ok(Evaluator::new(format!("{:?} bound {}", series, family.bound), weight, move |p: &JacobiPoint| {
        skew_eisenstein(series, m, p, &family, exec)
    }))
}
