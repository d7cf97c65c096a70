//! Generalized hypergeometric series `pFq(a; b; σx)`, formally over ℚ(k)
//! and numerically in double precision.

use num_rational::BigRational;
use num_traits::Signed;

use super::NumericPrecision;
use crate::algebra::{rational_to_f64, LaurentSeries, RatFunc, SymbolicExponent, Var};
use crate::error::{Error, Result};

/// Rising factorial `a (a+1) ... (a+n−1)`.
pub fn pochhammer(a: &RatFunc, n: usize) -> RatFunc {
    let mut acc = RatFunc::one();
    for i in 0..n {
        acc = &acc * &(a + &RatFunc::from_int(i as i64));
    }
    acc
}

pub fn pochhammer_f64(a: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |acc, i| acc * (a + i as f64))
}

/// Argument scale `coeff · π^pi_power`, kept symbolic until numeric use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArgScale {
    pub coeff: BigRational,
    pub pi_power: u32,
}

impl ArgScale {
    pub fn rational(n: i64, d: i64) -> Self {
        ArgScale { coeff: BigRational::new(n.into(), d.into()), pi_power: 0 }
    }

    pub fn with_pi(n: i64, d: i64, pi_power: u32) -> Self {
        ArgScale { coeff: BigRational::new(n.into(), d.into()), pi_power }
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.coeff) * std::f64::consts::PI.powi(self.pi_power as i32)
    }
}

/// `x^ℓ · pFq(a; b; σ x)` in the variable `var`.
#[derive(Clone, Debug, PartialEq)]
pub struct HypergeometricSpec {
    pub upper: Vec<RatFunc>,
    pub lower: Vec<RatFunc>,
    pub scale: ArgScale,
    pub prefactor: SymbolicExponent,
    pub var: Var,
}

fn is_nonpositive_integer(q: &BigRational) -> bool {
    q.is_integer() && !q.is_positive()
}

impl HypergeometricSpec {
    pub fn new(upper: Vec<RatFunc>, lower: Vec<RatFunc>, scale: ArgScale, prefactor: SymbolicExponent, var: Var) -> Self {
        HypergeometricSpec { upper, lower, scale, prefactor, var }
    }

    pub fn p(&self) -> usize {
        self.upper.len()
    }

    pub fn q(&self) -> usize {
        self.lower.len()
    }

    /// Lower parameters must be positive or nonintegral. Parameters that still
    /// depend on `k` pass formally; they are rechecked on specialization.
    pub fn check_lower(&self) -> Result<()> {
        for b in &self.lower {
            if let Some(c) = b.as_constant() {
                if is_nonpositive_integer(&c) {
                    return Err(Error::Domain(format!("lower parameter {} is a nonpositive integer", c)));
                }
            }
        }
        Ok(())
    }

    /// Parameters with a rational `k` substituted.
    pub fn specialize(&self, k: &BigRational) -> Result<HypergeometricSpec> {
        let sp = |v: &[RatFunc]| v.iter().map(|a| a.specialize(k)).collect::<Result<Vec<_>>>();
        let s = HypergeometricSpec {
            upper: sp(&self.upper)?,
            lower: sp(&self.lower)?,
            scale: self.scale.clone(),
            prefactor: self.prefactor.specialize(k),
            var: self.var,
        };
        s.check_lower()?;
        Ok(s)
    }

    /// Index of the first vanishing term if some upper parameter is a nonpositive integer.
    fn terminates_at(&self) -> Option<usize> {
        self.upper
            .iter()
            .filter_map(|a| a.as_constant())
            .filter(is_nonpositive_integer)
            .map(|a| (-a.to_integer()).try_into().unwrap_or(usize::MAX))
            .min()
            .map(|m: usize| m + 1)
    }

    /// Coefficients `c_0..=c_N` of the series in `x` (π-free scale only).
    pub fn coefficients(&self, order: usize) -> Result<Vec<RatFunc>> {
        self.check_lower()?;
        if self.scale.pi_power != 0 {
            return Err(Error::Domain("formal series need a rational argument scale".into()));
        }
        let sigma = RatFunc::from_rational(self.scale.coeff.clone());
        let mut out = Vec::with_capacity(order + 1);
        let mut c = RatFunc::one();
        for n in 0..=order {
            out.push(c.clone());
            if c.is_zero() {
                continue;
            }
            let nn = RatFunc::from_int(n as i64);
            let mut num = sigma.clone();
            for a in &self.upper {
                num = &num * &(a + &nn);
            }
            let mut den = RatFunc::from_int(n as i64 + 1);
            for b in &self.lower {
                den = &den * &(b + &nn);
            }
            c = &c * &num.checked_div(&den)?;
        }
        Ok(out)
    }
}

/// Formal series `x^ℓ Σ_{n≤N} c_n x^n`. Terminating series come back exact.
pub fn pfq_formal(spec: &HypergeometricSpec, order: usize) -> Result<LaurentSeries> {
    let coeffs = spec.coefficients(order)?;
    let precision = match spec.terminates_at() {
        Some(m) if m <= order + 1 => None,
        _ => Some(order as i64 + 1),
    };
    Ok(LaurentSeries::new(spec.var, spec.prefactor.clone(), 0, coeffs, precision))
}

/// Numeric `pFq(a; b; z)` by direct summation.
///
/// Fails rather than returning a value whose rounding error, estimated from
/// the largest term, exceeds the requested relative tolerance.
pub fn pfq_numeric(upper: &[f64], lower: &[f64], z: f64, prec: &NumericPrecision) -> Result<f64> {
    for &b in lower {
        if b <= 0.0 && b.fract() == 0.0 {
            return Err(Error::Domain(format!("lower parameter {} is a nonpositive integer", b)));
        }
    }
    let terminating = upper.iter().any(|&a| a <= 0.0 && a.fract() == 0.0);
    let (p, q) = (upper.len(), lower.len());
    if !terminating {
        if p > q + 1 && z != 0.0 {
            return Err(Error::Domain(format!("{}F{} diverges for z ≠ 0", p, q)));
        }
        if p == q + 1 && z.abs() >= 1.0 {
            return Err(Error::Domain(format!("{}F{} needs |z| < 1, got {}", p, q, z)));
        }
    }
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut max_term = 1.0f64;
    let mut small = 0;
    for n in 0..prec.max_terms {
        let nf = n as f64;
        let mut r = z / (nf + 1.0);
        for &a in upper {
            r *= a + nf;
        }
        for &b in lower {
            r /= b + nf;
        }
        term *= r;
        if term == 0.0 {
            return finish(sum, max_term, prec);
        }
        if !term.is_finite() {
            return Err(Error::NoConvergence(format!("overflow in pFq at z = {}", z)));
        }
        sum += term;
        max_term = max_term.max(term.abs());
        // only stop once terms are shrinking
        if term.abs() <= 0.25 * f64::EPSILON * sum.abs() && r.abs() < 1.0 {
            small += 1;
            if small >= 3 {
                return finish(sum, max_term, prec);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NoConvergence(format!("pFq not converged after {} terms", prec.max_terms)))
}

fn finish(sum: f64, max_term: f64, prec: &NumericPrecision) -> Result<f64> {
    let err = 4.0 * f64::EPSILON * max_term;
    if sum == 0.0 || err > prec.rel_tol * sum.abs() {
        return Err(Error::Cancellation(format!("pFq sum {:e} with terms up to {:e}", sum, max_term)));
    }
    Ok(sum)
}

/// `x^ℓ(k) · pFq(a(k); b(k); σ x)` at a numeric `k` and `x > 0`.
pub fn pfq_spec_numeric(spec: &HypergeometricSpec, k: f64, x: f64, prec: &NumericPrecision) -> Result<f64> {
    let up: Vec<f64> = spec.upper.iter().map(|a| a.eval_f64(k)).collect();
    let lo: Vec<f64> = spec.lower.iter().map(|b| b.eval_f64(k)).collect();
    let f = pfq_numeric(&up, &lo, spec.scale.to_f64() * x, prec)?;
    Ok(f * x.powf(spec.prefactor.eval_f64(k)))
}

/// `1F1(a; b; z)`.
pub fn hyp1f1(a: f64, b: f64, z: f64) -> Result<f64> {
    pfq_numeric(&[a], &[b], z, &NumericPrecision::default())
}

/// Shorthand used by the catalog: `x^ℓ · pFq(a; b; x/4)` over ℚ(k).
pub fn spec_quarter(upper: Vec<RatFunc>, lower: Vec<RatFunc>, prefactor: SymbolicExponent, var: Var) -> HypergeometricSpec {
    HypergeometricSpec::new(upper, lower, ArgScale::rational(1, 4), prefactor, var)
}
