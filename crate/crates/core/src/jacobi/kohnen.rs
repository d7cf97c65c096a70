//! Fourier-Jacobi slices of Siegel-side sums and Kohnen's limit process.
//!
//! The height-truncated coset sum is not periodic in `x′`, so its slices are
//! taken over orbit-saturated families (see [`crate::siegel::orbits`]). For a
//! free orbit, `det(CZ+D) = a₁(τ′ − ζ₀)` and the `x′`-integral over the whole
//! orbit is the closed form [`x_integral`]; a direct periodized sum serves as
//! the quadrature route.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::point::FjPoint;
use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::exec::{pairwise_sum, Exec};
use crate::siegel::{OrbitFamily, SiegelEvaluator, SiegelPoint};
use crate::special::{gamma, kummer_u, whittaker_w};

pub type SliceEvaluator = Evaluator<FjPoint>;

/// `∫₀¹ F(τ, z, x′+iy′) e^{−2πimx′} dx′`, `N`-point periodic trapezoid.
pub fn fourier_jacobi_coeff(f: &SiegelEvaluator, m: i64, p: &FjPoint, size: usize, exec: Exec) -> Result<C64> {
    if size == 0 {
        return Err(Error::Config("quadrature size must be positive".into()));
    }
    let xs: Vec<f64> = (0..size).map(|j| j as f64 / size as f64).collect();
    let vals: Vec<Result<C64>> = exec.map(&xs, |&x| {
        let z = SiegelPoint::new(p.tau, p.z, C64::new(x, p.y_p))?;
        Ok(f.eval(&z)? * C64::new(0.0, -2.0 * PI * m as f64 * x).exp())
    });
    let vals: Vec<C64> = vals.into_iter().collect::<Result<_>>()?;
    Ok(pairwise_sum(&vals) / size as f64)
}

/// `|F(Z + E₂₂) − F(Z)| / |F(Z)|`
pub fn periodicity_defect(f: &SiegelEvaluator, z: &SiegelPoint) -> Result<f64> {
    let shifted = SiegelPoint { tau_p: z.tau_p + 1.0, ..*z };
    let (a, b) = (f.eval(z)?, f.eval(&shifted)?);
    Ok((b - a).norm() / a.norm())
}

/// `det(CZ+D)^{−½} det(CZ̄+D)^{−(k−½)} (det Y/|det(CZ+D)|²)^s` from `j = det(CZ+D)`.
fn p_term(j: C64, k: i64, s: f64, det_y: f64) -> C64 {
    let l = j.ln();
    let f = (-0.5 * l - (k as f64 - 0.5) * l.conj()).exp();
    if s == 0.0 {
        f
    } else {
        f * (det_y / j.norm_sqr()).powf(s)
    }
}

/// The `P_{k,s}` sum over whole orbits, with free orbits summed over
/// translates `|n| ≤ translates`.
pub fn periodized_eisenstein(k: i64, s: f64, orbits: Arc<OrbitFamily>, translates: i64, exec: Exec) -> Result<SiegelEvaluator> {
    if 2.0 * s + k as f64 <= 3.0 {
        return Err(Error::Domain(format!("P_(k,s) needs 2s + k > 3, got k = {}, s = {}", k, s)));
    }
    Ok(Evaluator::new(
        format!("P_({},{}) orbits {} x′-periodized", k, s, orbits.bound),
        format!("(1/2, {}-1/2)", k),
        move |z: &SiegelPoint| {
            let dy = z.det_y();
            let terms = exec.map(&orbits.orbits, |o| {
                let (a0, a1) = o.affine_det(z.tau, z.z);
                if !o.free {
                    return p_term(a0 + a1 * z.tau_p, k, s, dy);
                }
                let t: Vec<C64> = (-translates..=translates).map(|n| p_term(a0 + a1 * (z.tau_p + n as f64), k, s, dy)).collect();
                pairwise_sum(&t)
            });
            Ok(pairwise_sum(&terms))
        },
    ))
}

/// `∫_ℝ (t+iY)^p (t−iY)^q e^{−2πimt} dt` for `m > 0`:
/// `2π/Γ(−p) · e^{iπ(p−q)/2} e^{−2πmY} (2Y)^{p+q+1} U(p+1, p+q+2, 4πmY)`.
pub fn x_integral(p: f64, q: f64, y: f64, m: f64) -> Result<C64> {
    if !(m > 0.0) || !(y > 0.0) {
        return Err(Error::Domain(format!("x-integral needs m > 0 and Y > 0, got m = {}, Y = {}", m, y)));
    }
    if p >= 0.0 && p.fract() == 0.0 {
        return Ok(C64::new(0.0, 0.0));
    }
    let x = 4.0 * PI * m * y;
    let u = kummer_u(p + 1.0, p + q + 2.0, x)?;
    let mag = 2.0 * PI / gamma(-p) * (-2.0 * PI * m * y).exp() * (2.0 * y).powf(p + q + 1.0) * u;
    Ok(C64::from_polar(1.0, PI * (p - q) / 2.0) * mag)
}

/// `m`-th Fourier-Jacobi coefficient of the orbit-saturated `P_{k,s}`, in closed form.
pub fn eisenstein_fj_coeff(k: i64, s: f64, m: i64, orbits: &OrbitFamily, p: &FjPoint, exec: Exec) -> Result<C64> {
    if m <= 0 {
        return Err(Error::Domain(format!("closed-form slice needs m > 0, got {}", m)));
    }
    let (pp, qq) = (-0.5 - s, 0.5 - k as f64 - s);
    let dy = p.det_y();
    let free: Vec<_> = orbits.free().collect();
    let terms: Vec<Result<C64>> = exec.map(&free, |o| {
        let (a0, a1) = o.affine_det(p.tau, p.z);
        let zeta0 = -a0 / a1;
        let y0 = p.y_p - zeta0.im;
        let phase = C64::new(0.0, -2.0 * PI * m as f64 * zeta0.re).exp();
        let amp = a1.powi(k as i32 - 1) * a1.norm().powf(2.0 * qq);
        Ok(amp * phase * x_integral(pp, qq, y0, m as f64)?)
    });
    let terms: Vec<C64> = terms.into_iter().collect::<Result<_>>()?;
    Ok(dy.powf(s) * pairwise_sum(&terms))
}

/// `det Y^{k−½} φ_m` for the orbit-saturated `P_{k,s}`.
pub fn kohnen_slice(k: i64, s: f64, m: i64, orbits: Arc<OrbitFamily>, exec: Exec) -> Result<SliceEvaluator> {
    if m <= 0 {
        return Err(Error::Domain(format!("slice needs m > 0, got {}", m)));
    }
    Ok(Evaluator::new(format!("detY^(k-1/2) phi_{} of P_({},{}) orbits {}", m, k, s, orbits.bound), "slice", move |p: &FjPoint| {
        Ok(p.det_y().powf(k as f64 - 0.5) * eisenstein_fj_coeff(k, s, m, &orbits, p, exec)?)
    }))
}

fn check_rank1(m: i64, n: i64, r: i64) -> Result<()> {
    if m <= 0 || n < 0 || n * m != r * r {
        return Err(Error::Domain(format!("T = ({} {}; {} {}) is not rank 1 with m > 0", n, r, r, m)));
    }
    Ok(())
}

/// `det Y^{k−½} c₂ 𝚞^{−k/2} W_{(1−k)/2,(k−1)/2}(4π𝚞) e^{2πi(nx+2ru)}` with `𝚞 = tr(YT)`.
pub fn rank1_slice(k: i64, m: i64, n: i64, r: i64, c2: C64) -> Result<SliceEvaluator> {
    check_rank1(m, n, r)?;
    let kf = k as f64;
    Ok(Evaluator::new(format!("rank-1 W term T=({},{},{})", n, r, m), "slice", move |p: &FjPoint| {
        let u = n as f64 * p.tau.im + 2.0 * r as f64 * p.z.im + m as f64 * p.y_p;
        let w = whittaker_w((1.0 - kf) / 2.0, (kf - 1.0) / 2.0, 4.0 * PI * u)?;
        let phase = C64::new(0.0, 2.0 * PI * (n as f64 * p.tau.re + 2.0 * r as f64 * p.z.re)).exp();
        Ok(c2 * p.det_y().powf(kf - 0.5) * u.powf(-kf / 2.0) * w * phase)
    }))
}

/// `c₂ (4π)^{(1−k)/2} m^{½−k} e^{2πi(nτ+2rz)}`
pub fn rank1_limit(k: i64, m: i64, n: i64, r: i64, c2: C64, tau: C64, z: C64) -> Result<C64> {
    check_rank1(m, n, r)?;
    let kf = k as f64;
    let e = (C64::new(0.0, 2.0 * PI) * (n as f64 * tau + 2.0 * r as f64 * z)).exp();
    Ok(c2 * (4.0 * PI).powf((1.0 - kf) / 2.0) * (m as f64).powf(0.5 - kf) * e)
}

/// `δ ∈ {start, start + step, …, max}`
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeltaGrid {
    pub start: f64,
    pub step: f64,
    pub max: f64,
    /// nodes used for the extrapolation, spread over `[max/4, max]`
    pub richardson_nodes: usize,
}

impl Default for DeltaGrid {
    fn default() -> Self {
        DeltaGrid { start: 4.0, step: 2.0, max: 200.0, richardson_nodes: 7 }
    }
}

impl DeltaGrid {
    pub fn with_max(max: f64) -> Self {
        DeltaGrid { max, ..Default::default() }
    }

    pub fn nodes(&self) -> Result<Vec<f64>> {
        if !(self.step > 0.0) || !(self.start > 0.0) || !(self.max >= self.start + 2.0 * self.step) {
            return Err(Error::Config(format!("δ-grid needs positive start and step and at least three nodes: {:?}", self)));
        }
        let n = ((self.max - self.start) / self.step + 1e-9).floor() as usize;
        Ok((0..=n).map(|i| self.start + i as f64 * self.step).collect())
    }

    /// Indices of the grid nodes nearest to evenly spaced targets in `[max/4, max]`.
    fn richardson_indices(&self, deltas: &[f64]) -> Vec<usize> {
        let last = *deltas.last().unwrap();
        let lo = (last / 4.0).max(deltas[0]);
        let n = self.richardson_nodes.max(2);
        let mut idx: Vec<usize> = (0..n)
            .map(|i| {
                let t = lo + (last - lo) * i as f64 / (n - 1) as f64;
                (0..deltas.len()).min_by(|&a, &b| (deltas[a] - t).abs().total_cmp(&(deltas[b] - t).abs())).unwrap()
            })
            .collect();
        idx.dedup();
        idx
    }
}

/// Polynomial extrapolation of `(h_i, v_i)` to `h = 0` (Neville).
pub fn extrapolate_to_zero(h: &[f64], v: &[C64]) -> C64 {
    let mut p = v.to_vec();
    let n = p.len();
    for j in 1..n {
        for i in (j..n).rev() {
            p[i] = (h[i] * p[i - 1] - h[i - j] * p[i]) / (h[i] - h[i - j]);
        }
    }
    p[n - 1]
}

#[derive(Clone, Debug, Serialize)]
pub struct KohnenLimit {
    pub deltas: Vec<f64>,
    /// `e^{δ/2} e^{2πmv²/y} φ_m(τ, z, δ/(4πm) + v²/y)`
    pub compensated: Vec<C64>,
    /// `|c_i − c_{i−1}| / |c_i|`
    pub relative_steps: Vec<f64>,
    /// largest relative step over the last three nodes
    pub cauchy: f64,
    pub tolerance: f64,
    pub converged: bool,
    pub richardson_deltas: Vec<f64>,
    pub limit: C64,
    pub flag: Option<String>,
}

pub fn kohnen_limit(phi: &SliceEvaluator, m: i64, tau: C64, z: C64, grid: &DeltaGrid, tolerance: f64) -> Result<KohnenLimit> {
    if m <= 0 {
        return Err(Error::Domain(format!("Kohnen's limit needs m > 0, got {}", m)));
    }
    let deltas = grid.nodes()?;
    let (y, v) = (tau.im, z.im);
    let mf = m as f64;
    let mut compensated = Vec::with_capacity(deltas.len());
    for &d in &deltas {
        let p = FjPoint::new(tau, z, d / (4.0 * PI * mf) + v * v / y)?;
        compensated.push((d / 2.0 + 2.0 * PI * mf * v * v / y).exp() * phi.eval(&p)?);
    }
    let mut relative_steps = vec![f64::NAN];
    for w in compensated.windows(2) {
        relative_steps.push((w[1] - w[0]).norm() / w[1].norm());
    }
    let n = relative_steps.len();
    let cauchy = if compensated.iter().rev().take(3).all(|c| c.norm() == 0.0) {
        0.0
    } else {
        relative_steps[n - 2].max(relative_steps[n - 1])
    };
    let converged = cauchy < tolerance;
    let idx = grid.richardson_indices(&deltas);
    let hs: Vec<f64> = idx.iter().map(|&i| 1.0 / deltas[i]).collect();
    let vs: Vec<C64> = idx.iter().map(|&i| compensated[i]).collect();
    let limit = extrapolate_to_zero(&hs, &vs);
    let flag = (!converged).then(|| format!("relative step {:.3e} over the last three nodes exceeds {:.1e}", cauchy, tolerance));
    Ok(KohnenLimit {
        deltas: deltas.clone(),
        compensated,
        relative_steps,
        cauchy,
        tolerance,
        converged,
        richardson_deltas: idx.iter().map(|&i| deltas[i]).collect(),
        limit,
        flag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neville_recovers_polynomials() {
        let h = [0.5, 0.25, 0.1, 0.05];
        let v: Vec<C64> = h.iter().map(|&x| C64::new(2.0 + 3.0 * x - x * x * x, x)).collect();
        assert!((extrapolate_to_zero(&h, &v) - C64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn grid_validation() {
        assert!(DeltaGrid::with_max(5.0).nodes().is_err());
        let g = DeltaGrid { max: 24.0, ..Default::default() };
        assert_eq!(g.nodes().unwrap().len(), 11);
    }

    #[test]
    fn holomorphic_shape_gives_psi() {
        let psi = C64::new(0.3, -1.2);
        let f = Evaluator::total("psi e(-2 pi m y')", "", move |p: &FjPoint| psi * (-2.0 * PI * p.y_p).exp());
        let r = kohnen_limit(&f, 1, C64::new(0.1, 1.1), C64::new(0.2, 0.3), &DeltaGrid::with_max(24.0), 1e-3).unwrap();
        assert!(r.converged);
        assert!((r.limit - psi).norm() < 1e-10);
        let zero = Evaluator::total("0", "", |_: &FjPoint| C64::new(0.0, 0.0));
        let r = kohnen_limit(&zero, 1, C64::new(0.1, 1.1), C64::new(0.2, 0.3), &DeltaGrid::default(), 1e-3).unwrap();
        assert_eq!(r.limit, C64::new(0.0, 0.0));
        assert!(kohnen_limit(&zero, 0, C64::new(0.1, 1.1), C64::new(0.2, 0.3), &DeltaGrid::default(), 1e-3).is_err());
    }
}
