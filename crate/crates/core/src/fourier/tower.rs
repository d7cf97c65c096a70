//! The `g_n` and `h_n` coefficient recursions and their exact towers.

use serde::Serialize;

use crate::algebra::{LaurentSeries, RatFunc, Var};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TowerCase {
    /// `Σ g_n(u) v^n`, `|v| < u²`
    PositiveDefinite,
    /// `Σ h_n(v) u^n`, `u² < v`
    Indefinite,
}

fn c(n: i64) -> RatFunc {
    RatFunc::from_int(n)
}

/// Residual `4(n+1)² u g_{n+1} + u g_n'' + 2(2n+α+β) g_n' + (2(α−β) − u) g_n`.
pub fn g_residual(g_n: &LaurentSeries, g_next: &LaurentSeries, n: usize, alpha: &RatFunc, beta: &RatFunc) -> Result<LaurentSeries> {
    let n_i = n as i64;
    let d1 = g_n.diff();
    let d2 = d1.diff();
    let s = alpha + beta;
    let mut r = g_next.shift(1).scale(&c(4 * (n_i + 1) * (n_i + 1)));
    r = r.add(&d2.shift(1))?;
    r = r.add(&d1.scale(&(&c(2) * &(&c(2 * n_i) + &s))))?;
    r = r.add(&g_n.scale(&(&c(2) * &(alpha - beta))))?;
    r = r.sub(&g_n.shift(1))?;
    Ok(r)
}

/// `g_{n+1}` from `g_n`; the division by `4(n+1)² u` is a shift.
pub fn g_step(g_n: &LaurentSeries, n: usize, alpha: &RatFunc, beta: &RatFunc) -> Result<LaurentSeries> {
    let zero = LaurentSeries::zero(g_n.var());
    let rest = g_residual(g_n, &zero, n, alpha, beta)?;
    let n_i = n as i64;
    Ok(rest.shift(-1).scale(&RatFunc::from_frac(-1, 4 * (n_i + 1) * (n_i + 1))))
}

/// Residual `(n+2)(n+1) h_{n+2} + 4v h_n'' + 4(α+β+n) h_n' − h_n`.
pub fn h_residual(h_n: &LaurentSeries, h_next2: &LaurentSeries, n: usize, alpha: &RatFunc, beta: &RatFunc) -> Result<LaurentSeries> {
    let n_i = n as i64;
    let d1 = h_n.diff();
    let d2 = d1.diff();
    let mut r = h_next2.scale(&c((n_i + 2) * (n_i + 1)));
    r = r.add(&d2.shift(1).scale(&c(4)))?;
    r = r.add(&d1.scale(&(&c(4) * &(&(alpha + beta) + &c(n_i)))))?;
    r.sub(h_n)
}

/// `h_{n+2}` from `h_n`. The recursion never involves `h_{n+1}`.
pub fn h_step(h_n: &LaurentSeries, n: usize, alpha: &RatFunc, beta: &RatFunc) -> Result<LaurentSeries> {
    let zero = LaurentSeries::zero(h_n.var());
    let rest = h_residual(h_n, &zero, n, alpha, beta)?;
    let n_i = n as i64;
    Ok(rest.scale(&RatFunc::from_frac(-1, (n_i + 2) * (n_i + 1))))
}

/// `(β − α) h_0 = 2v h_1' + (α + β) h_1`.
pub fn h0_from_h1(h1: &LaurentSeries, alpha: &RatFunc, beta: &RatFunc) -> Result<LaurentSeries> {
    let diff = beta - alpha;
    if diff.is_zero() {
        return Err(Error::Domain("h_0 is undetermined when α = β".into()));
    }
    let rhs = h1.diff().shift(1).scale(&c(2)).add(&h1.scale(&(alpha + beta)))?;
    Ok(rhs.scale(&diff.recip()?))
}

/// `8v² h_0''' + 4(2+3α+3β) v h_0'' + (4(α+β)² + 2(α+β−1) − 2v) h_0' − (α+β) h_0 − (α−β) h_1`.
pub fn companion_residual(h0: &LaurentSeries, h1: &LaurentSeries, alpha: &RatFunc, beta: &RatFunc) -> Result<LaurentSeries> {
    let s = alpha + beta;
    let d1 = h0.diff();
    let d2 = d1.diff();
    let d3 = d2.diff();
    let mut r = d3.shift(2).scale(&c(8));
    r = r.add(&d2.shift(1).scale(&(&c(4) * &(&c(2) + &(&c(3) * &s)))))?;
    let lin = &(&(&c(4) * &(&s * &s)) + &(&c(2) * &s)) - &c(2);
    r = r.add(&d1.scale(&lin))?;
    r = r.sub(&d1.shift(1).scale(&c(2)))?;
    r = r.sub(&h0.scale(&s))?;
    r.sub(&h1.scale(&(alpha - beta)))
}

#[derive(Clone, Debug)]
pub struct RecursionTower {
    pub case: TowerCase,
    pub alpha: RatFunc,
    pub beta: RatFunc,
    pub rungs: Vec<LaurentSeries>,
    pub seed: String,
}

impl RecursionTower {
    /// `g_0, ..., g_depth`.
    pub fn positive_definite(g0: LaurentSeries, alpha: RatFunc, beta: RatFunc, depth: usize, seed: impl Into<String>) -> Result<Self> {
        let mut rungs = vec![g0];
        for n in 0..depth {
            let next = g_step(&rungs[n], n, &alpha, &beta)?;
            rungs.push(next);
        }
        Ok(RecursionTower { case: TowerCase::PositiveDefinite, alpha, beta, rungs, seed: seed.into() })
    }

    /// `h_0, ..., h_depth` with `h_0` derived from the seed `h_1`.
    pub fn indefinite(h1: LaurentSeries, alpha: RatFunc, beta: RatFunc, depth: usize, seed: impl Into<String>) -> Result<Self> {
        let h0 = h0_from_h1(&h1, &alpha, &beta)?;
        let mut rungs = vec![h0, h1];
        while rungs.len() <= depth {
            let n = rungs.len() - 2;
            let next = h_step(&rungs[n], n, &alpha, &beta)?;
            rungs.push(next);
        }
        rungs.truncate(depth + 1);
        Ok(RecursionTower { case: TowerCase::Indefinite, alpha, beta, rungs, seed: seed.into() })
    }

    pub fn depth(&self) -> usize {
        self.rungs.len() - 1
    }

    /// Defining-recursion residual at every rung.
    pub fn residuals(&self) -> Result<Vec<LaurentSeries>> {
        let (a, b) = (&self.alpha, &self.beta);
        match self.case {
            TowerCase::PositiveDefinite => {
                (0..self.depth()).map(|n| g_residual(&self.rungs[n], &self.rungs[n + 1], n, a, b)).collect()
            }
            TowerCase::Indefinite => {
                let mut out = vec![companion_residual(&self.rungs[0], &self.rungs[1], a, b)?];
                for n in 0..self.depth().saturating_sub(1) {
                    out.push(h_residual(&self.rungs[n], &self.rungs[n + 2], n, a, b)?);
                }
                Ok(out)
            }
        }
    }

    /// Numeric `Σ_{n ≤ N} rung_n(x) y^n` at a numeric `k`, with `x` the rung
    /// variable and `y` the expansion variable.
    pub fn partial_sum(&self, k: f64, x: f64, y: f64, n_max: usize) -> Result<f64> {
        match self.case {
            TowerCase::PositiveDefinite if !(y.abs() < x * x) => {
                return Err(Error::Domain(format!("need |v| < u², got u = {}, v = {}", x, y)));
            }
            TowerCase::Indefinite if !(y * y < x) => {
                return Err(Error::Domain(format!("need u² < v, got u = {}, v = {}", y, x)));
            }
            _ => {}
        }
        if !(x > 0.0) {
            return Err(Error::Domain(format!("rung variable must be positive, got {}", x)));
        }
        let mut acc = 0.0;
        let mut yn = 1.0;
        for r in self.rungs.iter().take(n_max + 1) {
            acc += r.eval_f64(k, x) * yn;
            yn *= y;
        }
        Ok(acc)
    }
}

/// Offsets bounds `(V, max)` for one `g` step: the recursion moves offsets by
/// `−2` (second derivative, and first derivative over `u`), `−1` and `0`.
pub fn g_step_shift_bounds() -> (i64, i64) {
    (-2, 0)
}

pub fn seed_var(case: TowerCase) -> Var {
    match case {
        TowerCase::PositiveDefinite => Var::U,
        TowerCase::Indefinite => Var::V,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SymbolicExponent;
    use crate::ode::catalog::harmonic_type;

    #[test]
    fn zero_seeds_stay_zero() {
        let (a, b) = harmonic_type();
        assert!(g_step(&LaurentSeries::zero(Var::U), 0, &a, &b).unwrap().is_zero());
        assert!(h_step(&LaurentSeries::zero(Var::V), 0, &a, &b).unwrap().is_zero());
        assert!(h0_from_h1(&LaurentSeries::zero(Var::V), &a, &b).unwrap().is_zero());
    }

    #[test]
    fn first_g_step_from_laurent_seed() {
        let (a, b) = harmonic_type();
        let one_minus_k = SymbolicExponent::frac(1, 1, -1, 1);
        let g0 = LaurentSeries::power(Var::U, one_minus_k.clone());
        let g1 = g_step(&g0, 0, &a, &b).unwrap();
        let omk = one_minus_k.to_ratfunc();
        let expect = LaurentSeries::exact(
            Var::U,
            one_minus_k,
            -2,
            vec![
                &(&(-&RatFunc::k()) * &omk) * &RatFunc::from_frac(1, 4),
                &omk * &RatFunc::from_frac(-1, 2),
                RatFunc::from_frac(1, 4),
            ],
        );
        assert_eq!(g1, expect);
        assert!(g_residual(&g0, &g1, 0, &a, &b).unwrap().is_zero());
    }

    #[test]
    fn h0_of_constant() {
        let (a, b) = harmonic_type();
        let h1 = LaurentSeries::monomial(Var::V, SymbolicExponent::zero(), 0, RatFunc::from_int(3));
        let h0 = h0_from_h1(&h1, &a, &b).unwrap();
        let expect = (&RatFunc::from_int(3) * &(&a + &b)).checked_div(&(&b - &a)).unwrap();
        assert_eq!(h0, LaurentSeries::monomial(Var::V, SymbolicExponent::zero(), 0, expect));
        assert!(h0_from_h1(&h1, &a, &a).is_err());
    }

    #[test]
    fn partial_sum_domain() {
        let (a, b) = harmonic_type();
        let g0 = LaurentSeries::power(Var::U, SymbolicExponent::frac(1, 1, -1, 1));
        let t = RecursionTower::positive_definite(g0, a, b, 3, "laurent").unwrap();
        assert!(t.partial_sum(5.0, 2.0, 5.0, 3).is_err());
        let v = t.partial_sum(5.0, 2.0, 0.0, 3).unwrap();
        assert!((v - 2f64.powi(-4)).abs() < 1e-15);
    }
}
