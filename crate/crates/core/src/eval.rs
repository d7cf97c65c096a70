//! Shareable point evaluators.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::Result;

type Func<P> = dyn Fn(&P) -> Result<Complex64> + Send + Sync;

/// A named, deterministic function on a point type `P`.
pub struct Evaluator<P> {
    pub name: String,
    /// intended weight or type, free-form
    pub weight: String,
    f: Arc<Func<P>>,
}

impl<P> Clone for Evaluator<P> {
    fn clone(&self) -> Self {
        Evaluator { name: self.name.clone(), weight: self.weight.clone(), f: Arc::clone(&self.f) }
    }
}

impl<P> fmt::Debug for Evaluator<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Evaluator({}, {})", self.name, self.weight)
    }
}

impl<P: 'static> Evaluator<P> {
    pub fn new(name: impl Into<String>, weight: impl Into<String>, f: impl Fn(&P) -> Result<Complex64> + Send + Sync + 'static) -> Self {
        Evaluator { name: name.into(), weight: weight.into(), f: Arc::new(f) }
    }

    /// Wraps an infallible closure.
    pub fn total(name: impl Into<String>, weight: impl Into<String>, f: impl Fn(&P) -> Complex64 + Send + Sync + 'static) -> Self {
        Self::new(name, weight, move |p| Ok(f(p)))
    }

    pub fn eval(&self, p: &P) -> Result<Complex64> {
        (self.f)(p)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let g = self.clone();
        Evaluator::new(format!("{}*{}", c, self.name), self.weight.clone(), move |p| Ok(c * g.eval(p)?))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = (self.clone(), other.clone());
        Evaluator::new(format!("{}+{}", self.name, other.name), self.weight.clone(), move |p| Ok(a.eval(p)? + b.eval(p)?))
    }
}
