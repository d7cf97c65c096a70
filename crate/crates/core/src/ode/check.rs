//! Exact annihilation checks: the finite window for hypergeometric inputs and
//! whole-series checks for the confluent and Whittaker-type equations.

use serde::Serialize;

use super::catalog::{confluent_phi, confluent_psi, whittaker_phi};
use super::op::LinearDiffOp;
use crate::algebra::{LaurentSeries, RatFunc, SymbolicExponent};
use crate::error::{Error, Result};
use crate::special::{pfq_formal, HypergeometricSpec};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Verdict {
    Verified,
    /// First offset (relative to the prefactor) with a nonzero coefficient.
    Failed { t: i64, residual: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct FiniteCheck {
    pub verdict: Verdict,
    /// Inclusive offset window `[−D, D + m_v]` relative to the prefactor.
    pub window: (i64, i64),
    pub checked: Vec<i64>,
    /// Offsets no term of the operator can reach.
    pub vacuous: Vec<i64>,
    /// Highest series coefficient generated.
    pub series_order: usize,
}

impl FiniteCheck {
    pub fn verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }
}

/// Checks `op (x^ℓ F) = 0` for `F = pFq(a; b; σx)` through the window
/// `ℓ − D ≤ t ≤ ℓ + D + m_v`.
pub fn finite_check(op: &LinearDiffOp, spec: &HypergeometricSpec) -> Result<FiniteCheck> {
    spec.check_lower()?;
    if !op.has_polynomial_coefficients() {
        return Err(Error::Domain("finite check needs polynomial coefficients in the variable and k".into()));
    }
    let order = 2 * op.order() + op.m_v().max(0) as usize;
    let mut body = spec.clone();
    body.prefactor = SymbolicExponent::zero();
    let f = pfq_formal(&body, order)?;
    finite_check_series(op, &spec.prefactor, &f)
}

/// Window check for `op (x^ℓ f)` with an integer-lattice series `f` starting at offset 0.
pub fn finite_check_series(op: &LinearDiffOp, ell: &SymbolicExponent, f: &LaurentSeries) -> Result<FiniteCheck> {
    let d = op.order() as i64;
    let m_v = op.m_v().max(0);
    let window = (-d, d + m_v);
    let conj = op.conjugate(ell);
    let r = conj.apply(f)?;
    if let Some(p) = r.precision() {
        if p <= window.1 {
            return Err(Error::BeyondPrecision { requested: window.1, precision: p });
        }
    }
    let base = f.valuation().unwrap_or(0).min(0);
    let min_shift = conj.shifts().min().unwrap_or(0);
    let mut vacuous = Vec::new();
    let mut checked = Vec::new();
    let mut verdict = Verdict::Verified;
    for t in window.0..=window.1 {
        if t < base + min_shift {
            vacuous.push(t);
        }
        checked.push(t);
        let c = r.coeff(t)?;
        if !c.is_zero() && verdict == Verdict::Verified {
            verdict = Verdict::Failed { t, residual: c.to_string() };
        }
    }
    Ok(FiniteCheck { verdict, window, checked, vacuous, series_order: f.degree().unwrap_or(0).max(0) as usize })
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesCheck {
    pub verdict: Verdict,
    /// Offsets known to vanish, as `(first, last)`.
    pub known: Option<(i64, i64)>,
}

impl SeriesCheck {
    pub fn verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }
}

/// Applies `op` and requires every known coefficient of the result to vanish.
pub fn series_annihilated(op: &LinearDiffOp, f: &LaurentSeries) -> Result<SeriesCheck> {
    let r = op.apply(f)?;
    let known = match (f.valuation(), r.precision()) {
        (Some(v), Some(p)) => Some((v - op.order() as i64, p - 1)),
        _ => None,
    };
    let verdict = match r.terms().next() {
        None => Verdict::Verified,
        Some((t, c)) => Verdict::Failed { t, residual: c.to_string() },
    };
    Ok(SeriesCheck { verdict, known })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConfluentKind {
    Phi,
    Psi,
}

/// `u φ'' + (3−α−β)φ' + (α−β−u)φ = 0` or `u ψ'' + (α+β)ψ' + (α−β−u)ψ = 0`.
pub fn confluent_ode_check(kind: ConfluentKind, alpha: &RatFunc, beta: &RatFunc, f: &LaurentSeries) -> Result<SeriesCheck> {
    let op = match kind {
        ConfluentKind::Phi => confluent_phi(alpha, beta),
        ConfluentKind::Psi => confluent_psi(alpha, beta),
    };
    series_annihilated(&op, f)
}

/// `φ'' = (1 + 2(β−α)/u + (α+β−1)(α+β−2)/u²) φ`.
pub fn phi_whittaker_ode_check(f: &LaurentSeries, alpha: &RatFunc, beta: &RatFunc) -> Result<SeriesCheck> {
    series_annihilated(&whittaker_phi(alpha, beta), f)
}
