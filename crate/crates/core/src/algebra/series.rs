//! Truncated Laurent series `x^p · Σ c_n x^n` over [`RatFunc`].
//!
//! The prefactor exponent `p = a + b·k` is global to the series and kept
//! normalized with `a ∈ [0, 1)`; integer parts live in the coefficient
//! offsets. `precision = Some(P)` means every offset `n ≥ P` is unknown;
//! `None` marks an exact Laurent polynomial.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};

use super::exponent::SymbolicExponent;
use super::poly::rational_ln_abs;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    U,
    V,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::U => "u",
            Var::V => "v",
        })
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    var: Var,
    prefactor: SymbolicExponent,
    val: i64,
    coeffs: Vec<RatFunc>,
    precision: Option<i64>,
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl LaurentSeries {
    pub fn new(
        var: Var,
        prefactor: SymbolicExponent,
        val: i64,
        coeffs: Vec<RatFunc>,
        precision: Option<i64>,
    ) -> Self {
        let (shift, prefactor) = prefactor.split_integer();
        let mut s = LaurentSeries {
            var,
            prefactor,
            val: val + shift,
            coeffs,
            precision: precision.map(|p| p + shift),
        };
        s.normalize();
        s
    }

    /// Exact Laurent polynomial.
    pub fn exact(var: Var, prefactor: SymbolicExponent, val: i64, coeffs: Vec<RatFunc>) -> Self {
        Self::new(var, prefactor, val, coeffs, None)
    }

    /// Series with `n_terms` known coefficients starting at offset `val`.
    pub fn from_fn(
        var: Var,
        prefactor: SymbolicExponent,
        val: i64,
        n_terms: usize,
        f: impl FnMut(usize) -> RatFunc,
    ) -> Self {
        let coeffs = (0..n_terms).map(f).collect();
        Self::new(var, prefactor, val, coeffs, Some(val + n_terms as i64))
    }

    pub fn zero(var: Var) -> Self {
        Self::exact(var, SymbolicExponent::zero(), 0, Vec::new())
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, SymbolicExponent::zero(), 0, RatFunc::one())
    }

    pub fn monomial(var: Var, prefactor: SymbolicExponent, offset: i64, c: RatFunc) -> Self {
        Self::exact(var, prefactor, offset, vec![c])
    }

    /// `x^e` for a symbolic exponent `e`.
    pub fn power(var: Var, e: SymbolicExponent) -> Self {
        Self::monomial(var, e, 0, RatFunc::one())
    }

    fn normalize(&mut self) {
        if let Some(p) = self.precision {
            let keep = (p - self.val).max(0) as usize;
            if self.coeffs.len() > keep {
                self.coeffs.truncate(keep);
            }
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.val = 0;
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn prefactor(&self) -> &SymbolicExponent {
        &self.prefactor
    }

    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Least offset with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.val)
        }
    }

    /// Largest offset with a nonzero known coefficient.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.val + self.coeffs.len() as i64 - 1)
        }
    }

    /// Coefficient at an offset relative to the prefactor; errors past the precision.
    pub fn coeff(&self, n: i64) -> Result<RatFunc> {
        if let Some(p) = self.precision {
            if n >= p {
                return Err(Error::BeyondPrecision { requested: n, precision: p });
            }
        }
        if self.is_zero() || n < self.val {
            return Ok(RatFunc::zero());
        }
        Ok(self.coeffs.get((n - self.val) as usize).cloned().unwrap_or_else(RatFunc::zero))
    }

    /// Nonzero terms as (offset, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (i64, &RatFunc)> {
        let v = self.val;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (v + i as i64, c))
    }

    /// Lower bound on the offsets this series can carry (valuation or precision).
    fn order_floor(&self) -> Option<i64> {
        if self.is_zero() {
            self.precision
        } else {
            Some(self.val)
        }
    }

    fn check_var(&self, o: &Self) -> Result<()> {
        if self.var != o.var {
            return Err(Error::VariableMismatch(self.var, o.var));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_var(o)?;
        if o.is_zero() && o.is_exact() {
            return Ok(self.clone());
        }
        if self.is_zero() && self.is_exact() {
            return Ok(o.clone());
        }
        if self.prefactor != o.prefactor {
            return Err(Error::PrefactorMismatch(self.prefactor.to_string(), o.prefactor.to_string()));
        }
        let precision = min_opt(self.precision, o.precision);
        let lo = match (self.is_zero(), o.is_zero()) {
            (true, true) => 0,
            (true, false) => o.val,
            (false, true) => self.val,
            (false, false) => self.val.min(o.val),
        };
        let hi = self.degree().unwrap_or(i64::MIN).max(o.degree().unwrap_or(i64::MIN));
        let mut coeffs = Vec::new();
        if hi >= lo {
            coeffs.reserve((hi - lo + 1) as usize);
            for n in lo..=hi {
                let a = self.raw(n);
                let b = o.raw(n);
                coeffs.push(match (a, b) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => RatFunc::zero(),
                });
            }
        }
        let mut s = LaurentSeries { var: self.var, prefactor: self.prefactor.clone(), val: lo, coeffs, precision };
        s.normalize();
        Ok(s)
    }

    fn raw(&self, n: i64) -> Option<&RatFunc> {
        if n < self.val {
            return None;
        }
        self.coeffs.get((n - self.val) as usize)
    }

    pub fn neg(&self) -> Self {
        let mut s = self.clone();
        for c in s.coeffs.iter_mut() {
            *c = -&*c;
        }
        s
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        let mut s = self.clone();
        for x in s.coeffs.iter_mut() {
            *x = &*x * c;
        }
        s
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        self.scale(&RatFunc::from_rational(q.clone()))
    }

    /// Multiplies by `x^j`.
    pub fn shift(&self, j: i64) -> Self {
        let mut s = self.clone();
        if !s.is_zero() {
            s.val += j;
        }
        s.precision = s.precision.map(|p| p + j);
        s
    }

    /// Multiplies by `x^e` for a symbolic exponent.
    pub fn mul_power(&self, e: &SymbolicExponent) -> Self {
        Self::new(self.var, &self.prefactor + e, self.val, self.coeffs.clone(), self.precision)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check_var(o)?;
        if (self.is_zero() && self.is_exact()) || (o.is_zero() && o.is_exact()) {
            return Ok(Self::zero(self.var));
        }
        let fa = self.order_floor().unwrap();
        let fb = o.order_floor().unwrap();
        let precision = min_opt(self.precision.map(|p| p + fb), o.precision.map(|p| p + fa));
        let prefactor = &self.prefactor + &o.prefactor;
        if self.is_zero() || o.is_zero() {
            return Ok(Self::new(self.var, prefactor, 0, Vec::new(), precision));
        }
        let lo = self.val + o.val;
        let mut len = self.coeffs.len() + o.coeffs.len() - 1;
        if let Some(p) = precision {
            len = len.min((p - lo).max(0) as usize);
        }
        let mut coeffs = vec![RatFunc::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(Self::new(self.var, prefactor, lo, coeffs, precision))
    }

    /// Termwise derivative, including the symbolic prefactor.
    pub fn diff(&self) -> Self {
        let coeffs: Vec<RatFunc> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_zero() {
                    return RatFunc::zero();
                }
                let e = self.prefactor.add_int(self.val + i as i64);
                c * &e.to_ratfunc()
            })
            .collect();
        let mut s = LaurentSeries {
            var: self.var,
            prefactor: self.prefactor.clone(),
            val: self.val - 1,
            coeffs,
            precision: self.precision.map(|p| p - 1),
        };
        s.normalize();
        s
    }

    pub fn diff_n(&self, n: usize) -> Self {
        let mut s = self.clone();
        for _ in 0..n {
            s = s.diff();
        }
        s
    }

    /// Termwise antiderivative with zero constant; errors where a term would need a logarithm.
    pub fn integrate(&self) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                coeffs.push(RatFunc::zero());
                continue;
            }
            let e = self.prefactor.add_int(self.val + i as i64 + 1).to_ratfunc();
            if e.is_zero() {
                return Err(Error::Domain(format!("x^-1 term at offset {} has no Laurent antiderivative", self.val + i as i64)));
            }
            coeffs.push(c.checked_div(&e)?);
        }
        Ok(Self::new(self.var, self.prefactor.clone(), self.val + 1, coeffs, self.precision.map(|p| p + 1)))
    }

    /// Exact value of the stored terms at a rational point, for series with
    /// constant coefficients and an integer prefactor.
    pub fn eval_rational(&self, x: &BigRational) -> Result<BigRational> {
        let shift = self.prefactor.as_integer().ok_or_else(|| {
            Error::Domain(format!("prefactor {} is not an integer", self.prefactor))
        })?;
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            let cq = c.as_constant().ok_or_else(|| Error::Domain("coefficient still depends on k".into()))?;
            acc = acc * x + cq;
        }
        let e = self.val + shift;
        let p = if e >= 0 { Pow::pow(x, e as u32) } else { Pow::pow(&x.recip(), (-e) as u32) };
        Ok(acc * p)
    }

    /// Exact value at the binary rational `x` (any finite `x > 0`), rounded
    /// once at the end. Needs constant coefficients and an integer prefactor.
    pub fn eval_exact_f64(&self, x: f64) -> Result<f64> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::One;
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::Domain(format!("exact evaluation needs finite x > 0, got {}", x)));
        }
        let shift = self.prefactor.as_integer().ok_or_else(|| {
            Error::Domain(format!("prefactor {} is not an integer", self.prefactor))
        })?;
        if self.is_zero() {
            return Ok(0.0);
        }
        let qs = self
            .coeffs
            .iter()
            .map(|c| c.as_constant().ok_or_else(|| Error::Domain("coefficient still depends on k".into())))
            .collect::<Result<Vec<_>>>()?;
        let mut l = BigInt::one();
        for c in &qs {
            l = l.lcm(c.denom());
        }
        let xq = BigRational::from_float(x).expect("finite");
        let (m, d) = (xq.numer().clone(), xq.denom().clone());
        let n = qs.len() - 1;
        // d^n P(m/d) by homogeneous Horner
        let mut dpow = vec![BigInt::one()];
        for i in 0..n {
            let next = &dpow[i] * &d;
            dpow.push(next);
        }
        let mut acc = BigInt::from(0);
        for (j, c) in qs.iter().enumerate().rev() {
            let a = c.numer() * (&l / c.denom());
            acc = acc * &m + a * &dpow[n - j];
        }
        let mut num = acc;
        let mut den = l * &dpow[n];
        let e = self.val + shift;
        if e >= 0 {
            num *= Pow::pow(&m, e as u32);
            den *= Pow::pow(&d, e as u32);
        } else {
            num *= Pow::pow(&d, (-e) as u32);
            den *= Pow::pow(&m, (-e) as u32);
        }
        Ok(super::rational_to_f64(&BigRational::new(num, den)))
    }

    /// Drops every offset ≥ `p`.
    pub fn truncate(&self, p: i64) -> Self {
        let precision = min_opt(self.precision, Some(p));
        Self::new(self.var, self.prefactor.clone(), self.val, self.coeffs.clone(), precision)
    }

    /// Substitutes a rational value for `k` in coefficients and prefactor.
    pub fn specialize(&self, k: &BigRational) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.specialize(k)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(self.var, self.prefactor.specialize(k), self.val, coeffs, self.precision))
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        Self::new(self.var, self.prefactor.clone(), self.val, self.coeffs.iter().map(f).collect(), self.precision)
    }

    /// Numeric value of the stored terms at `x > 0` for a numeric `k`.
    ///
    /// Coefficients are combined in log space, so huge or tiny exact
    /// rationals do not overflow before multiplying by `x^n`.
    pub fn eval_f64(&self, k: f64, x: f64) -> f64 {
        let lx = x.ln();
        let p = self.prefactor.eval_f64(k);
        let mut acc = 0.0;
        for (n, c) in self.terms() {
            let (s, l) = match c.as_constant() {
                Some(q) => rational_ln_abs(&q),
                None => {
                    let v = c.eval_f64(k);
                    (v.signum() as i8, v.abs().ln())
                }
            };
            if s == 0 {
                continue;
            }
            acc += s as f64 * (l + (p + n as f64) * lx).exp();
        }
        acc
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.var;
        if !self.prefactor.is_zero() {
            write!(f, "{}^({}) * ", x, self.prefactor)?;
        }
        write!(f, "[")?;
        let mut first = true;
        for (n, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}){}^{}", c, x, n)?;
        }
        if first {
            write!(f, "0")?;
        }
        if let Some(p) = self.precision {
            write!(f, " + O({}^{})", x, p)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }

    #[test]
    fn exponent_cancellation() {
        let a = LaurentSeries::power(Var::U, SymbolicExponent::frac(1, 1, -1, 1));
        let b = LaurentSeries::power(Var::U, SymbolicExponent::frac(0, 1, 1, 1));
        let p = a.mul(&b).unwrap();
        assert_eq!(p, LaurentSeries::monomial(Var::U, SymbolicExponent::zero(), 1, RatFunc::one()));
    }

    #[test]
    fn truncated_product() {
        let a = LaurentSeries::new(Var::U, SymbolicExponent::zero(), 0, vec![c(1), c(1)], Some(5));
        let b = LaurentSeries::new(Var::U, SymbolicExponent::zero(), 0, vec![c(1), c(-1)], Some(5));
        let p = a.mul(&b).unwrap();
        assert_eq!(p.precision(), Some(5));
        assert_eq!(p.coeff(0).unwrap(), c(1));
        assert_eq!(p.coeff(1).unwrap(), c(0));
        assert_eq!(p.coeff(2).unwrap(), c(-1));
        assert!(p.coeff(5).is_err());
    }

    #[test]
    fn min_rule_under_multiplication() {
        // (u^2 + O(u^4)) * (1 + O(u^3)) is known up to u^4
        let a = LaurentSeries::new(Var::U, SymbolicExponent::zero(), 2, vec![c(1)], Some(4));
        let b = LaurentSeries::new(Var::U, SymbolicExponent::zero(), 0, vec![c(1)], Some(3));
        assert_eq!(a.mul(&b).unwrap().precision(), Some(4));
    }

    #[test]
    fn derivative_of_symbolic_power() {
        let a = LaurentSeries::power(Var::U, SymbolicExponent::frac(1, 1, -1, 1));
        let d = a.diff();
        let expect = LaurentSeries::monomial(
            Var::U,
            SymbolicExponent::frac(0, 1, -1, 1),
            0,
            SymbolicExponent::frac(1, 1, -1, 1).to_ratfunc(),
        );
        assert_eq!(d, expect);
    }

    #[test]
    fn derivative_of_polynomial_and_constant() {
        let p = LaurentSeries::exact(Var::U, SymbolicExponent::zero(), 1, vec![c(3), c(1)]);
        assert_eq!(p.diff(), LaurentSeries::exact(Var::U, SymbolicExponent::zero(), 0, vec![c(3), c(2)]));
        assert!(LaurentSeries::one(Var::V).diff().is_zero());
    }

    #[test]
    fn integrate_inverts_diff() {
        let a = LaurentSeries::new(Var::U, SymbolicExponent::frac(1, 2, -1, 1), -2, vec![c(3), c(0), c(-1)], Some(4));
        assert_eq!(a.integrate().unwrap().diff(), a);
        assert!(LaurentSeries::monomial(Var::U, SymbolicExponent::zero(), -1, c(1)).integrate().is_err());
    }

    #[test]
    fn rational_evaluation() {
        let a = LaurentSeries::exact(Var::U, SymbolicExponent::int(-1), -1, vec![c(1), c(0), c(4)]);
        // u^-2 + 4 at u = 1/2
        assert_eq!(a.eval_rational(&crate::algebra::q(1, 2)).unwrap(), crate::algebra::q(8, 1));
    }

    #[test]
    fn exact_evaluation_survives_cancellation() {
        // (u − 1)^30 expanded, at u = 1 + 2^-20
        let mut p = LaurentSeries::one(Var::U);
        let f = LaurentSeries::exact(Var::U, SymbolicExponent::zero(), 0, vec![c(-1), c(1)]);
        for _ in 0..30 {
            p = p.mul(&f).unwrap();
        }
        let x = 1.0 + 2f64.powi(-20);
        let v = p.eval_exact_f64(x).unwrap();
        assert!((v / 2f64.powi(-600) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn variable_mismatch() {
        assert!(LaurentSeries::one(Var::U).mul(&LaurentSeries::one(Var::V)).is_err());
    }

    #[test]
    fn prefactor_normalization_is_canonical() {
        let a = LaurentSeries::monomial(Var::U, SymbolicExponent::frac(3, 2, 1, 1), 0, c(1));
        let b = LaurentSeries::monomial(Var::U, SymbolicExponent::frac(1, 2, 1, 1), 1, c(1));
        assert_eq!(a, b);
        assert!(a.sub(&b).unwrap().is_zero());
    }

    #[test]
    fn numeric_evaluation_handles_prefactor() {
        let a = LaurentSeries::power(Var::U, SymbolicExponent::frac(1, 1, -1, 1));
        assert!((a.eval_f64(5.0, 2.0) - 2f64.powi(-4)).abs() < 1e-15);
    }
}
