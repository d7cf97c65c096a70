//! `Ω_{α,β}`, `M_α`, `N_β`, `ξ^{(2)}` and `C` by finite differences.

use serde::{Deserialize, Serialize};

use super::point::{Mat2, SiegelPoint, C64};
use super::slash::SiegelEvaluator;
use crate::error::Result;
use crate::eval::Evaluator;
use crate::stencil::{Jet, RealPoint, Stencil};

/// Default step for the nested stencils of [`casimir_c`].
pub const NESTED_STEP: f64 = 5e-3;

impl RealPoint for SiegelPoint {
    fn coords(&self) -> Vec<f64> {
        self.real_coords().to_vec()
    }
    fn with_coords(c: &[f64]) -> Self {
        SiegelPoint::from_real_unchecked([c[0], c[1], c[2], c[3], c[4], c[5]])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coordinate {
    Tau,
    TauBar,
    Z,
    ZBar,
    TauP,
    TauPBar,
}

impl Coordinate {
    fn var(self) -> (usize, bool) {
        match self {
            Coordinate::Tau => (0, false),
            Coordinate::TauBar => (0, true),
            Coordinate::Z => (1, false),
            Coordinate::ZBar => (1, true),
            Coordinate::TauP => (2, false),
            Coordinate::TauPBar => (2, true),
        }
    }
}

pub fn numeric_partial(g: &SiegelEvaluator, coordinate: Coordinate, z: &SiegelPoint, stencil: &Stencil) -> Result<C64> {
    let (v, c) = coordinate.var();
    stencil.wirtinger_partial(g, z, v, c)
}

/// Entry `(i, j)` of `∂_Z` (or `∂_Z̄`) applied through the jet.
fn d_entry(i: usize, j: usize) -> (usize, f64) {
    match (i, j) {
        (0, 0) => (0, 1.0),
        (1, 1) => (2, 1.0),
        _ => (1, 0.5),
    }
}

fn first(jet: &Jet, i: usize, j: usize, conj: bool) -> C64 {
    let (v, f) = d_entry(i, j);
    f * jet.d(v, conj)
}

/// `∂̄_{ab} ∂_{cd}`
fn mixed(jet: &Jet, a: usize, b: usize, c: usize, d: usize) -> C64 {
    let (v1, f1) = d_entry(a, b);
    let (v2, f2) = d_entry(c, d);
    f1 * f2 * jet.dd(v1, true, v2, false)
}

/// `Ω_{α,β} G = −4 Y ᵗ(Y ∂_Z̄) ∂_Z G − 2iβ Y ∂_Z G + 2iα Y ∂_Z̄ G`
pub fn omega_from_jet(jet: &Jet, z: &SiegelPoint, alpha: f64, beta: f64) -> Mat2 {
    let y = z.y();
    let i = C64::new(0.0, 1.0);
    let mut out = [[C64::new(0.0, 0.0); 2]; 2];
    for (r, row) in out.iter_mut().enumerate() {
        for (l, entry) in row.iter_mut().enumerate() {
            let mut t = C64::new(0.0, 0.0);
            for p in 0..2 {
                for m in 0..2 {
                    for j in 0..2 {
                        t += -4.0 * y[r][p] * y[m][j] * mixed(jet, j, p, m, l);
                    }
                }
                t += -2.0 * i * beta * y[r][p] * first(jet, p, l, false);
                t += 2.0 * i * alpha * y[r][p] * first(jet, p, l, true);
            }
            *entry = t;
        }
    }
    out
}

pub fn omega_apply(g: &SiegelEvaluator, z: &SiegelPoint, alpha: f64, beta: f64, stencil: &Stencil) -> Result<Mat2> {
    Ok(omega_from_jet(&stencil.jet(g, z)?, z, alpha, beta))
}

/// `M_α` from the jet at `Z`.
pub fn maass_m_from_jet(jet: &Jet, z: &SiegelPoint, alpha: f64) -> C64 {
    let i2 = C64::new(0.0, 2.0);
    let euler = i2 * (z.tau.im * jet.d(0, false) + z.z.im * jet.d(1, false) + z.tau_p.im * jet.d(2, false));
    let lap = jet.dd(0, false, 2, false) - 0.25 * jet.dd(1, false, 1, false);
    alpha * (alpha - 0.5) * jet.value + (alpha - 0.5) * euler - 4.0 * z.det_y() * lap
}

pub fn maass_m(g: &SiegelEvaluator, alpha: f64, z: &SiegelPoint, stencil: &Stencil) -> Result<C64> {
    Ok(maass_m_from_jet(&stencil.jet(g, z)?, z, alpha))
}

/// `G ↦ G(−Z̄)`
pub fn involution(g: &SiegelEvaluator) -> SiegelEvaluator {
    let g = g.clone();
    Evaluator::new(format!("i({})", g.name), g.weight.clone(), move |z: &SiegelPoint| g.eval(&z.neg_conj()))
}

/// `N_β = 𝔦 M_β 𝔦`
pub fn maass_n(g: &SiegelEvaluator, beta: f64, z: &SiegelPoint, stencil: &Stencil) -> Result<C64> {
    maass_m(&involution(g), beta, &z.neg_conj(), stencil)
}

pub fn maass_m_evaluator(g: &SiegelEvaluator, alpha: f64, stencil: Stencil) -> SiegelEvaluator {
    let g = g.clone();
    Evaluator::new(format!("M_{}({})", alpha, g.name), g.weight.clone(), move |z: &SiegelPoint| maass_m(&g, alpha, z, &stencil))
}

/// `ξ^{(2)}_{½,k−½} = det(Y)^{k−3/2} M_½`
pub fn xi2(g: &SiegelEvaluator, k: i64, z: &SiegelPoint, stencil: &Stencil) -> Result<C64> {
    Ok(z.det_y().powf(k as f64 - 1.5) * maass_m(g, 0.5, z, stencil)?)
}

/// `ξ^{(2)}_{w,0} = det(Y)^{w−3/2} N_0`
pub fn xi2_dual(g: &SiegelEvaluator, w: i64, z: &SiegelPoint, stencil: &Stencil) -> Result<C64> {
    Ok(z.det_y().powf(w as f64 - 1.5) * maass_n(g, 0.0, z, stencil)?)
}

pub fn xi2_evaluator(g: &SiegelEvaluator, k: i64, stencil: Stencil) -> SiegelEvaluator {
    let g = g.clone();
    Evaluator::new(format!("xi2({})", g.name), format!("({}, 0)", 3 - k), move |z: &SiegelPoint| xi2(&g, k, z, &stencil))
}

/// `C = N_{k−3/2} ∘ M_½`, nested stencils.
pub fn casimir_c(g: &SiegelEvaluator, k: i64, z: &SiegelPoint, inner: Stencil, outer: &Stencil) -> Result<C64> {
    let m = maass_m_evaluator(g, 0.5, inner);
    maass_n(&m, k as f64 - 1.5, z, outer)
}
