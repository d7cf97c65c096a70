//! `L_m`, `ξ^{sk}_{k,m}` and `𝒞^{sk}_{k,m}` by finite differences.
//!
//! Third derivatives come from a 5-point first-derivative stencil applied to
//! Hessians computed at the 16 outer nodes.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use super::point::JacobiPoint;
use super::slash::JacobiEvaluator;
use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::stencil::{wirtinger, Jet, RealPoint, Stencil};

const TAU: usize = 0;
const Z: usize = 1;

fn i() -> C64 {
    C64::new(0.0, 1.0)
}

/// `L_m = 8πim ∂_τ − ∂_zz` from a jet.
pub fn heat_from_jet(jet: &Jet, m: i64) -> C64 {
    8.0 * PI * i() * m as f64 * jet.d(TAU, false) - jet.dd(Z, false, Z, false)
}

pub fn heat_l(phi: &JacobiEvaluator, m: i64, p: &JacobiPoint, stencil: &Stencil) -> Result<C64> {
    Ok(heat_from_jet(&stencil.jet(phi, p)?, m))
}

/// `ξ^{sk}_{k,m} = y^{k−½}/(4πm) · L_m`
pub fn xi_sk(phi: &JacobiEvaluator, k: i64, m: i64, stencil: Stencil) -> Result<JacobiEvaluator> {
    if m == 0 {
        return Err(Error::Domain("ξ^sk needs m > 0".into()));
    }
    let phi = phi.clone();
    Ok(Evaluator::new(format!("xi_sk({})", phi.name), format!("({}, {})", 3 - k, m), move |p: &JacobiPoint| {
        Ok(p.y().powf(k as f64 - 0.5) / (4.0 * PI * m as f64) * heat_l(&phi, m, p, &stencil)?)
    }))
}

/// Jet plus `∂_i` of the Hessian in real coordinates.
pub struct Jet3 {
    pub jet: Jet,
    pub t: Vec<Vec<Vec<C64>>>,
}

impl Jet3 {
    pub fn new(f: &JacobiEvaluator, p: &JacobiPoint, inner: &Stencil, outer: &Stencil) -> Result<Self> {
        const D1: [(i32, f64); 4] = [(-2, 1.0), (-1, -8.0), (1, 8.0), (2, -1.0)];
        let c = p.coords();
        let n = c.len();
        let jet = inner.jet(f, p)?;
        let mut nodes = Vec::with_capacity(4 * n);
        for i in 0..n {
            let h = outer.step_at(c[i]);
            for &(o, _) in &D1 {
                let mut x = c.clone();
                x[i] += o as f64 * h;
                nodes.push(x);
            }
        }
        let hs: Vec<Result<Vec<Vec<C64>>>> = outer.exec.map(&nodes, |x| Ok(inner.jet(f, &JacobiPoint::with_coords(x))?.hess));
        let hs: Vec<Vec<Vec<C64>>> = hs.into_iter().collect::<Result<_>>()?;
        let mut t = vec![vec![vec![C64::new(0.0, 0.0); n]; n]; n];
        for (i, ti) in t.iter_mut().enumerate() {
            let h = outer.step_at(c[i]);
            for (o, &(_, w)) in D1.iter().enumerate() {
                let hess = &hs[4 * i + o];
                for a in 0..n {
                    for b in 0..n {
                        ti[a][b] += w * hess[a][b] / (12.0 * h);
                    }
                }
            }
        }
        Ok(Jet3 { jet, t })
    }

    /// Third Wirtinger derivative; `(var, conj)` triples.
    pub fn d3(&self, a: (usize, bool), b: (usize, bool), c: (usize, bool)) -> C64 {
        let n = self.t.len();
        let (wa, wb, wc) = (wirtinger(n, a.0, a.1), wirtinger(n, b.0, b.1), wirtinger(n, c.0, c.1));
        let mut s = C64::new(0.0, 0.0);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let w = wa[x] * wb[y] * wc[z];
                    if w.norm() != 0.0 {
                        s += w * self.t[x][y][z];
                    }
                }
            }
        }
        s
    }
}

/// The nine-term skew Casimir operator.
pub fn casimir_from_jet3(j3: &Jet3, k: i64, m: i64, p: &JacobiPoint) -> C64 {
    let jet = &j3.jet;
    let (kf, mf) = (k as f64, m as f64);
    let t = 2.0 * i() * p.y(); // τ − τ̄
    let zd = 2.0 * i() * p.v(); // z − z̄
    let c8 = 8.0 * PI * i() * mf;
    let (tb, zz, zb) = ((TAU, true), (Z, false), (Z, true));
    let ta = (TAU, false);
    let l = heat_from_jet(jet, m);
    let dbar_l = c8 * jet.dd(TAU, true, TAU, false) - j3.d3(tb, zz, zz);
    -2.0 * t * t * dbar_l + (2.0 * kf - 1.0) * t * l + 2.0 * (1.0 - kf) * t * jet.dd(Z, false, Z, true)
        + 2.0 * t * zd * j3.d3(zz, zz, zb)
        - 16.0 * PI * i() * mf * t * zd * jet.dd(TAU, false, Z, true)
        + c8 * (1.0 - kf) * zd * jet.d(Z, true)
        + 2.0 * t * t * j3.d3(ta, zb, zb)
        + (4.0 * PI * i() * mf * zd * zd + t) * jet.dd(Z, true, Z, true)
        + 2.0 * t * zd * j3.d3(zz, zb, zb)
}

pub fn casimir_sk(phi: &JacobiEvaluator, k: i64, m: i64, p: &JacobiPoint, inner: &Stencil, outer: &Stencil) -> Result<C64> {
    Ok(casimir_from_jet3(&Jet3::new(phi, p, inner, outer)?, k, m, p))
}
