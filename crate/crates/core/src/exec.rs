//! Data-parallel maps and reductions with a sequential fallback.
//!
//! Reductions go through a fixed pairwise tree over the input order, so the
//! parallel and sequential paths give bit-identical results.

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// `Parallel` only when the crate was built with the `parallel` feature.
    pub fn effective(self) -> Exec {
        if cfg!(feature = "parallel") {
            self
        } else {
            Exec::Sequential
        }
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self.effective() {
            Exec::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            Exec::Parallel => unreachable!(),
        }
    }

    /// `Σ f(item)` in pairwise-tree order.
    pub fn sum_complex<T, F>(self, items: &[T], f: F) -> Complex64
    where
        T: Sync,
        F: Fn(&T) -> Complex64 + Sync + Send,
    {
        pairwise_sum(&self.map(items, f))
    }

    pub fn sum_f64<T, F>(self, items: &[T], f: F) -> f64
    where
        T: Sync,
        F: Fn(&T) -> f64 + Sync + Send,
    {
        let v: Vec<Complex64> = self.map(items, |t| Complex64::new(f(t), 0.0));
        pairwise_sum(&v).re
    }
}

/// Deterministic pairwise summation.
pub fn pairwise_sum(xs: &[Complex64]) -> Complex64 {
    match xs.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => xs[0],
        n => {
            let (a, b) = xs.split_at(n / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}
