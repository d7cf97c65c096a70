//! Truncated coset sums.

use std::sync::Arc;

use serde::Serialize;

use super::cosets::CosetFamily;
use super::point::{SiegelPoint, C64};
use super::slash::{automorphy_factor, SiegelEvaluator};
use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::exec::Exec;

fn check_regime(k: i64, s: f64) -> Result<()> {
    if 2.0 * s + k as f64 <= 3.0 {
        return Err(Error::Domain(format!("P_(k,s) needs 2s + k > 3, got k = {}, s = {}", k, s)));
    }
    Ok(())
}

/// `Σ ((det Y)^s |_{(½, k−½)} M)(Z)` over the family.
pub fn eisenstein_p(k: i64, s: f64, z: &SiegelPoint, family: &CosetFamily, exec: Exec) -> Result<C64> {
    check_regime(k, s)?;
    let dy = z.det_y();
    let beta = k as f64 - 0.5;
    let terms: Vec<Result<C64>> = exec.map(&family.reps, |r| {
        let m = &r.matrix;
        let d = m.j_factor(z)?;
        // det Im(M∘Z) = det Y / |det(CZ+D)|²
        Ok(automorphy_factor(m, z, 0.5, beta)? * (dy / d.norm_sqr()).powf(s))
    });
    let terms: Vec<C64> = terms.into_iter().collect::<Result<_>>()?;
    Ok(crate::exec::pairwise_sum(&terms))
}

/// Maass' `E_{α,β}(Z) = Σ det(CZ+D)^{−α} det(CZ̄+D)^{−β}`, truncated.
pub fn maass_eisenstein(alpha: f64, beta: f64, z: &SiegelPoint, family: &CosetFamily, exec: Exec) -> Result<C64> {
    let terms: Vec<Result<C64>> = exec.map(&family.reps, |r| automorphy_factor(&r.matrix, z, alpha, beta));
    let terms: Vec<C64> = terms.into_iter().collect::<Result<_>>()?;
    Ok(crate::exec::pairwise_sum(&terms))
}

/// Holomorphic `E_w(Z) = Σ det(CZ+D)^{−w}`, integral `w`, truncated.
pub fn holomorphic_eisenstein(w: i64, z: &SiegelPoint, family: &CosetFamily, exec: Exec) -> Result<C64> {
    let terms: Vec<Result<C64>> = exec.map(&family.reps, |r| Ok(r.matrix.j_factor(z)?.powi(-w as i32)));
    let terms: Vec<C64> = terms.into_iter().collect::<Result<_>>()?;
    Ok(crate::exec::pairwise_sum(&terms))
}

pub fn eisenstein_evaluator(k: i64, s: f64, family: Arc<CosetFamily>, exec: Exec) -> Result<SiegelEvaluator> {
    check_regime(k, s)?;
    Ok(Evaluator::new(format!("P_({},{}) bound {}", k, s, family.bound), format!("(1/2, {}-1/2)", k), move |z: &SiegelPoint| {
        eisenstein_p(k, s, z, &family, exec)
    }))
}

pub fn holomorphic_evaluator(w: i64, family: Arc<CosetFamily>, exec: Exec) -> SiegelEvaluator {
    Evaluator::new(format!("E_{} bound {}", w, family.bound), format!("({}, 0)", w), move |z: &SiegelPoint| {
        holomorphic_eisenstein(w, z, &family, exec)
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LadderRung {
    pub bound: i64,
    pub cosets: usize,
    pub value: C64,
}

/// Values of the truncation at each bound, for convergence assessment.
pub fn eisenstein_ladder(k: i64, s: f64, z: &SiegelPoint, family: &CosetFamily, bounds: &[i64], exec: Exec) -> Result<Vec<LadderRung>> {
    bounds
        .iter()
        .map(|&b| {
            let f = family.restrict(b);
            Ok(LadderRung { bound: b, cosets: f.len(), value: eisenstein_p(k, s, z, &f, exec)? })
        })
        .collect()
}
