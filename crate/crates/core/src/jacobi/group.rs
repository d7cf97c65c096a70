use num_complex::Complex64 as C64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::point::JacobiPoint;
use crate::error::{Error, Result};

/// `[(a b; c d), (λ, μ)] ∈ SL₂(ℤ) ⋉ ℤ²`, with `(λ, μ)` a row vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct JacobiGroupElement {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub lambda: i64,
    pub mu: i64,
}

impl JacobiGroupElement {
    pub fn new(a: i64, b: i64, c: i64, d: i64, lambda: i64, mu: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::Domain(format!("ad − bc = {} for ({} {}; {} {})", a * d - b * c, a, b, c, d)));
        }
        Ok(JacobiGroupElement { a, b, c, d, lambda, mu })
    }

    pub fn identity() -> Self {
        JacobiGroupElement { a: 1, b: 0, c: 0, d: 1, lambda: 0, mu: 0 }
    }

    pub fn translation() -> Self {
        JacobiGroupElement { b: 1, ..Self::identity() }
    }

    pub fn inversion() -> Self {
        JacobiGroupElement { a: 0, b: -1, c: 1, d: 0, lambda: 0, mu: 0 }
    }

    pub fn heisenberg(lambda: i64, mu: i64) -> Self {
        JacobiGroupElement { lambda, mu, ..Self::identity() }
    }

    /// Completes a coprime bottom row `(c, d)` to `(a b; c d)`, deterministically.
    pub fn complete(c: i64, d: i64, lambda: i64, mu: i64) -> Result<Self> {
        let e = d.extended_gcd(&c);
        if e.gcd.abs() != 1 {
            return Err(Error::Domain(format!("({}, {}) is not coprime", c, d)));
        }
        // x d + y c = g with g = ±1, so a = g x, b = −g y
        let (a, b) = (e.gcd * e.x, -e.gcd * e.y);
        Self::new(a, b, c, d, lambda, mu)
    }

    /// `[M₁, X₁][M₂, X₂] = [M₁M₂, X₁M₂ + X₂]`
    pub fn mul(&self, o: &Self) -> Self {
        JacobiGroupElement {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
            lambda: self.lambda * o.a + self.mu * o.c + o.lambda,
            mu: self.lambda * o.b + self.mu * o.d + o.mu,
        }
    }

    pub fn j(&self, tau: C64) -> C64 {
        self.c as f64 * tau + self.d as f64
    }

    /// `(Mτ, (z + λτ + μ)/(cτ + d))`
    pub fn act(&self, p: &JacobiPoint) -> Result<JacobiPoint> {
        let j = self.j(p.tau);
        if j.norm() == 0.0 {
            return Err(Error::Domain("cτ + d = 0".into()));
        }
        let mt = (self.a as f64 * p.tau + self.b as f64) / j;
        let w = (p.z + self.lambda as f64 * p.tau + self.mu as f64) / j;
        Ok(JacobiPoint { tau: mt, z: w })
    }

    /// `e^{2πim(−c(z+λτ+μ)²/(cτ+d) + λ²τ + 2λz)}`
    pub fn index_factor(&self, p: &JacobiPoint, m: i64) -> C64 {
        let (l, mu) = (self.lambda as f64, self.mu as f64);
        let s = p.z + l * p.tau + mu;
        let e = -(self.c as f64) * s * s / self.j(p.tau) + l * l * p.tau + 2.0 * l * p.z;
        (C64::new(0.0, 2.0 * std::f64::consts::PI * m as f64) * e).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn completion() {
        for (c, d) in [(0, 1), (0, -1), (3, 5), (-4, 7), (1, 0), (-1, 0), (6, -5)] {
            let g = JacobiGroupElement::complete(c, d, 0, 0).unwrap();
            assert_eq!((g.c, g.d), (c, d));
        }
        assert!(JacobiGroupElement::complete(2, 4, 0, 0).is_err());
    }

    #[test]
    fn product_is_associative() {
        let a = JacobiGroupElement::complete(2, 3, 1, -2).unwrap();
        let b = JacobiGroupElement::complete(-1, 4, 3, 0).unwrap();
        let c = JacobiGroupElement::complete(5, 2, -1, 1).unwrap();
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}
