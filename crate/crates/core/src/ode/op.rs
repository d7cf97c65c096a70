//! Linear differential operators `Σ c_{d,j}(k) x^j ∂^d` acting on Laurent series.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::algebra::{LaurentSeries, RatFunc, SymbolicExponent, Var};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct LinearDiffOp {
    var: Var,
    /// (derivative order d, power j) -> coefficient; zero entries never stored
    terms: BTreeMap<(usize, i64), RatFunc>,
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

impl LinearDiffOp {
    pub fn zero(var: Var) -> Self {
        LinearDiffOp { var, terms: BTreeMap::new() }
    }

    /// Builds from `(d, j, c)` triples meaning `c · x^j ∂^d`; repeated keys add up.
    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (usize, i64, RatFunc)>) -> Self {
        let mut op = Self::zero(var);
        for (d, j, c) in terms {
            op.add_term(d, j, c);
        }
        op
    }

    pub fn add_term(&mut self, d: usize, j: i64, c: RatFunc) {
        let e = self.terms.entry((d, j)).or_insert_with(RatFunc::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&(d, j));
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64, &RatFunc)> {
        self.terms.iter().map(|(&(d, j), c)| (d, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest derivative order `D`.
    pub fn order(&self) -> usize {
        self.terms.keys().map(|&(d, _)| d).max().unwrap_or(0)
    }

    /// Maximal power of the variable among the coefficients.
    pub fn m_v(&self) -> i64 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Least power of the variable; negative after conjugation.
    pub fn min_power(&self) -> i64 {
        self.terms.keys().map(|&(_, j)| j).min().unwrap_or(0)
    }

    /// True when every coefficient is a polynomial in the variable and in k.
    pub fn has_polynomial_coefficients(&self) -> bool {
        self.terms.iter().all(|(&(_, j), c)| j >= 0 && c.is_polynomial())
    }

    /// Exponent shifts `j − d` produced by the terms.
    pub fn shifts(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().map(|&(d, j)| j - d as i64)
    }

    /// `x^{−ℓ} ∘ self ∘ x^{ℓ}`, via `∂^d x^ℓ = Σ_i C(d,i) ℓ^{(i)} x^{ℓ−i} ∂^{d−i}`.
    pub fn conjugate(&self, ell: &SymbolicExponent) -> LinearDiffOp {
        let mut out = Self::zero(self.var);
        for (&(d, j), c) in &self.terms {
            for i in 0..=d {
                let f = ell.falling(i);
                if f.is_zero() {
                    continue;
                }
                let coeff = &(c * &f) * &RatFunc::from_int(binom(d, i));
                out.add_term(d - i, j - i as i64, coeff);
            }
        }
        out
    }

    pub fn apply(&self, f: &LaurentSeries) -> Result<LaurentSeries> {
        if f.var() != self.var {
            return Err(Error::VariableMismatch(self.var, f.var()));
        }
        let mut derivs = vec![f.clone()];
        for _ in 0..self.order() {
            let next = derivs.last().unwrap().diff();
            derivs.push(next);
        }
        let mut acc = LaurentSeries::zero(self.var);
        for (&(d, j), c) in &self.terms {
            acc = acc.add(&derivs[d].shift(j).scale(c))?;
        }
        Ok(acc)
    }

    pub fn specialize(&self, k: &BigRational) -> Result<LinearDiffOp> {
        let mut out = Self::zero(self.var);
        for (&(d, j), c) in &self.terms {
            out.add_term(d, j, c.specialize(k)?);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RatFunc) -> LinearDiffOp {
        Self::from_terms(self.var, self.terms().map(|(d, j, x)| (d, j, x * c)))
    }

    pub fn add(&self, o: &LinearDiffOp) -> Result<LinearDiffOp> {
        if self.var != o.var {
            return Err(Error::VariableMismatch(self.var, o.var));
        }
        let mut out = self.clone();
        for (d, j, c) in o.terms() {
            out.add_term(d, j, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for LinearDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let x = self.var;
        let mut first = true;
        for (&(d, j), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            if j != 0 {
                write!(f, "*{}^{}", x, j)?;
            }
            if d > 0 {
                write!(f, "*d{}^{}", x, d)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LinearDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearDiffOp[{}]", self)
    }
}
