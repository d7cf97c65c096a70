use std::sync::Arc;

use super::point::{SiegelPoint, C64};
use super::symplectic::SymplecticMatrix;
use crate::error::{Error, Result};
use crate::eval::Evaluator;

pub type SiegelEvaluator = Evaluator<SiegelPoint>;

/// Branch convention carried into reports.
pub const BRANCH_CONVENTION: &str = "L = principal Log det(CZ+D); det(CZ+D)^-a det(CZbar+D)^-b = exp(-a L - b conj(L))";

/// `det(CZ+D)^{−α} det(CZ̄+D)^{−β}` with `L = Log det(CZ+D)` principal and
/// `conj(L)` used for the second factor. For integral `α − β` this is a
/// single-valued function of `det(CZ+D)`, so the cocycle relation holds.
pub fn automorphy_factor(m: &SymplecticMatrix, z: &SiegelPoint, alpha: f64, beta: f64) -> Result<C64> {
    let l = m.j_factor(z)?.ln();
    Ok((-alpha * l - beta * l.conj()).exp())
}

/// `(G |_{(α,β)} M)(Z)`
pub fn slash(g: &SiegelEvaluator, m: SymplecticMatrix, alpha: f64, beta: f64) -> Result<SiegelEvaluator> {
    if (alpha - beta).fract() != 0.0 {
        return Err(Error::Domain(format!("α − β = {} is not integral", alpha - beta)));
    }
    let g = g.clone();
    let name = format!("{}|({},{})M", g.name, alpha, beta);
    let weight = g.weight.clone();
    let g = Arc::new(g);
    Ok(Evaluator::new(name, weight, move |z: &SiegelPoint| {
        Ok(automorphy_factor(&m, z, alpha, beta)? * g.eval(&m.act(z)?)?)
    }))
}

/// `(det Y)^s`
pub fn det_y_power(s: f64) -> SiegelEvaluator {
    Evaluator::total(format!("detY^{}", s), "seed", move |z: &SiegelPoint| C64::new(z.det_y().powf(s), 0.0))
}

/// `e^{2πi tr(TZ)}` for a half-integral `T = (n r/2; r/2 m)`.
pub fn exp_trace(n: f64, r: f64, m: f64) -> SiegelEvaluator {
    Evaluator::total(format!("e(tr(TZ)) T=({},{},{})", n, r, m), "holomorphic", move |z: &SiegelPoint| {
        let tr = n * z.tau + r * z.z + m * z.tau_p;
        (C64::new(0.0, 2.0 * std::f64::consts::PI) * tr).exp()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_slash_is_trivial() {
        let g = exp_trace(1.0, 1.0, 1.0);
        let h = slash(&g, SymplecticMatrix::identity(), 0.5, 4.5).unwrap();
        let z = SiegelPoint::from_real([0.1, 1.0, 0.2, 0.3, -0.4, 1.2]).unwrap();
        assert_eq!(g.eval(&z).unwrap(), h.eval(&z).unwrap());
    }

    #[test]
    fn refuses_nonintegral_difference() {
        assert!(slash(&det_y_power(1.0), SymplecticMatrix::j(), 0.5, 1.0).is_err());
    }
}
