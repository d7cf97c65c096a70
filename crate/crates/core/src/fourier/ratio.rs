//! Exact coefficient ratios of the two hypergeometric solutions for `k < 0`.
//!
//! `c_n` are the coefficients of `2F3(1, 2−k; 5/2−k, 2−k/2, (5−k)/2; x)` and
//! `d_n` those of `1F2((1−k)/2; ½, 1−k/2; x)`, both at `x = v/4`. Series are
//! compared position by position in their own lattices; the prefactors
//! `(v/4)^{3/2−k}` and `(v/4)^{−k/2}` contribute the constant `2^{k−3}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::rational_to_f64;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct RatioReport {
    pub k: i64,
    pub n_max: usize,
    /// `ratio_n` rounded; exact values stay in [`ratios`].
    pub values: Vec<f64>,
    /// First index from which the ratio decreases strictly up to `n_max`.
    pub monotone_from: Option<usize>,
    /// First index from which both coefficient sequences are positive.
    pub positive_from: Option<usize>,
    pub last: f64,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn coefficients(upper: &[BigRational], lower: &[BigRational], n_max: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut c = BigRational::one();
    for n in 0..=n_max {
        out.push(c.clone());
        let nn = BigRational::from_integer(BigInt::from(n));
        let mut num = BigRational::one();
        for a in upper {
            num *= a + &nn;
        }
        let mut den = &nn + BigRational::one();
        for b in lower {
            den *= b + &nn;
        }
        c = if num.is_zero() { BigRational::zero() } else { c * num / den };
    }
    out
}

/// `(c_n, d_n)` for `n ≤ n_max`.
pub fn coefficient_pair(k: i64, n_max: usize) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
    if k >= 0 {
        return Err(Error::Domain(format!("ratio decay needs k < 0, got {}", k)));
    }
    let c = coefficients(&[q(1, 1), q(2 - k, 1)], &[q(5 - 2 * k, 2), q(4 - k, 2), q(5 - k, 2)], n_max);
    let d = coefficients(&[q(1 - k, 2)], &[q(1, 2), q(2 - k, 2)], n_max);
    Ok((c, d))
}

/// Exact `ratio_n = 2^{k−3} c_n / d_n`.
pub fn ratios(k: i64, n_max: usize) -> Result<Vec<BigRational>> {
    let (c, d) = coefficient_pair(k, n_max)?;
    let scale = BigRational::new(BigInt::one(), BigInt::one() << (3 - k) as usize);
    c.iter()
        .zip(&d)
        .enumerate()
        .map(|(n, (c, d))| {
            if d.is_zero() {
                Err(Error::Domain(format!("d_{} vanishes at k = {}", n, k)))
            } else {
                Ok(&scale * c / d)
            }
        })
        .collect()
}

pub fn coeff_ratio_decay(k: i64, n_max: usize) -> Result<RatioReport> {
    let r = ratios(k, n_max)?;
    let (c, d) = coefficient_pair(k, n_max)?;
    let mut monotone_from = Some(n_max);
    for n in (0..n_max).rev() {
        if r[n + 1].abs() < r[n].abs() {
            monotone_from = Some(n);
        } else {
            break;
        }
    }
    let mut positive_from = None;
    for n in (0..=n_max).rev() {
        if c[n].is_positive() && d[n].is_positive() {
            positive_from = Some(n);
        } else {
            break;
        }
    }
    let values: Vec<f64> = r.iter().map(rational_to_f64).collect();
    let last = *values.last().unwrap();
    Ok(RatioReport { k, n_max, values, monotone_from, positive_from, last })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_ratio() {
        // n = 0: both series start at 1
        let r = ratios(-2, 3).unwrap();
        assert_eq!(r[0], q(1, 32));
    }

    #[test]
    fn refuses_nonnegative_k() {
        assert!(coeff_ratio_decay(0, 10).is_err());
    }
}
