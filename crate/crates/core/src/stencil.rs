//! Central finite differences in real coordinates, with Wirtinger combinations.
//!
//! First and second partials use 5-point stencils (fourth order); mixed
//! partials use the tensor product of the first-derivative stencil.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::exec::Exec;

/// A point given by real coordinates; complex variable `c` owns coordinates
/// `2c` (real part) and `2c+1` (imaginary part).
pub trait RealPoint: Clone + Send + Sync + 'static {
    fn coords(&self) -> Vec<f64>;
    fn with_coords(c: &[f64]) -> Self;
}

const D1: [(i32, f64); 4] = [(-2, 1.0), (-1, -8.0), (1, 8.0), (2, -1.0)];
const D2: [(i32, f64); 5] = [(-2, -1.0), (-1, 16.0), (0, -30.0), (1, 16.0), (2, -1.0)];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Stencil {
    /// base step, scaled per coordinate by `max(1, |coordinate|)`
    pub step: f64,
    pub exec: Exec,
}

impl Default for Stencil {
    fn default() -> Self {
        Stencil { step: 1e-3, exec: Exec::Parallel }
    }
}

/// Value, gradient and Hessian in the real coordinates.
#[derive(Clone, Debug)]
pub struct Jet {
    pub value: Complex64,
    pub grad: Vec<Complex64>,
    pub hess: Vec<Vec<Complex64>>,
}

/// `∂_w = ½(∂_a − i∂_b)` or `∂_w̄ = ½(∂_a + i∂_b)` as a coefficient vector.
pub fn wirtinger(n: usize, var: usize, conj: bool) -> Vec<Complex64> {
    let mut v = vec![Complex64::new(0.0, 0.0); n];
    v[2 * var] = Complex64::new(0.5, 0.0);
    v[2 * var + 1] = Complex64::new(0.0, if conj { 0.5 } else { -0.5 });
    v
}

impl Jet {
    pub fn first(&self, op: &[Complex64]) -> Complex64 {
        op.iter().zip(&self.grad).map(|(a, b)| a * b).sum()
    }

    pub fn second(&self, a: &[Complex64], b: &[Complex64]) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for (i, ai) in a.iter().enumerate() {
            if ai.norm() == 0.0 {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.norm() != 0.0 {
                    s += ai * bj * self.hess[i][j];
                }
            }
        }
        s
    }

    /// `∂_w` or `∂_w̄` of complex variable `var`.
    pub fn d(&self, var: usize, conj: bool) -> Complex64 {
        self.first(&wirtinger(self.grad.len(), var, conj))
    }

    pub fn dd(&self, v1: usize, c1: bool, v2: usize, c2: bool) -> Complex64 {
        let n = self.grad.len();
        self.second(&wirtinger(n, v1, c1), &wirtinger(n, v2, c2))
    }
}

impl Stencil {
    pub fn new(step: f64) -> Result<Self> {
        if !(step > 0.0) {
            return Err(Error::Config(format!("finite-difference step must be positive, got {}", step)));
        }
        Ok(Stencil { step, exec: Exec::Parallel })
    }

    pub fn with_exec(self, exec: Exec) -> Self {
        Stencil { exec, ..self }
    }

    /// Step used at a coordinate of value `x`.
    pub fn step_at(&self, x: f64) -> f64 {
        self.step * x.abs().max(1.0)
    }

    fn steps(&self, c: &[f64]) -> Vec<f64> {
        c.iter().map(|&x| self.step_at(x)).collect()
    }

    fn eval_nodes<P: RealPoint>(&self, f: &Evaluator<P>, nodes: &[Vec<f64>]) -> Result<Vec<Complex64>> {
        self.exec.map(nodes, |c| f.eval(&P::with_coords(c))).into_iter().collect()
    }

    /// First partial along real coordinate `i`.
    pub fn partial<P: RealPoint>(&self, f: &Evaluator<P>, p: &P, i: usize) -> Result<Complex64> {
        let c = p.coords();
        let h = self.steps(&c)[i];
        let nodes: Vec<Vec<f64>> = D1
            .iter()
            .map(|&(o, _)| {
                let mut x = c.clone();
                x[i] += o as f64 * h;
                x
            })
            .collect();
        let v = self.eval_nodes(f, &nodes)?;
        Ok(D1.iter().zip(&v).map(|(&(_, w), y)| w * y).sum::<Complex64>() / (12.0 * h))
    }

    /// Wirtinger derivative `∂_w` (`conj = false`) or `∂_w̄`.
    pub fn wirtinger_partial<P: RealPoint>(&self, f: &Evaluator<P>, p: &P, var: usize, conj: bool) -> Result<Complex64> {
        let a = self.partial(f, p, 2 * var)?;
        let b = self.partial(f, p, 2 * var + 1)?;
        let i = Complex64::new(0.0, if conj { 1.0 } else { -1.0 });
        Ok(0.5 * (a + i * b))
    }

    /// Value, gradient and full Hessian.
    pub fn jet<P: RealPoint>(&self, f: &Evaluator<P>, p: &P) -> Result<Jet> {
        let c = p.coords();
        let n = c.len();
        let h = self.steps(&c);
        let shift = |moves: &[(usize, i32)]| {
            let mut x = c.clone();
            for &(i, o) in moves {
                x[i] += o as f64 * h[i];
            }
            x
        };
        let mut nodes = vec![c.clone()];
        for i in 0..n {
            for &(o, _) in &D1 {
                nodes.push(shift(&[(i, o)]));
            }
        }
        let mixed_start = nodes.len();
        for i in 0..n {
            for j in i + 1..n {
                for &(oi, _) in &D1 {
                    for &(oj, _) in &D1 {
                        nodes.push(shift(&[(i, oi), (j, oj)]));
                    }
                }
            }
        }
        let v = self.eval_nodes(f, &nodes)?;
        let value = v[0];
        let mut grad = vec![Complex64::new(0.0, 0.0); n];
        let mut hess = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for i in 0..n {
            let base = 1 + 4 * i;
            let at = |o: i32| if o == 0 { value } else { v[base + D1.iter().position(|&(x, _)| x == o).unwrap()] };
            grad[i] = D1.iter().map(|&(o, w)| w * at(o)).sum::<Complex64>() / (12.0 * h[i]);
            hess[i][i] = D2.iter().map(|&(o, w)| w * at(o)).sum::<Complex64>() / (12.0 * h[i] * h[i]);
        }
        let mut idx = mixed_start;
        for i in 0..n {
            for j in i + 1..n {
                let mut s = Complex64::new(0.0, 0.0);
                for &(_, wi) in &D1 {
                    for &(_, wj) in &D1 {
                        s += wi * wj * v[idx];
                        idx += 1;
                    }
                }
                let d = s / (144.0 * h[i] * h[j]);
                hess[i][j] = d;
                hess[j][i] = d;
            }
        }
        Ok(Jet { value, grad, hess })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone)]
    struct P2([f64; 2]);
    impl RealPoint for P2 {
        fn coords(&self) -> Vec<f64> {
            self.0.to_vec()
        }
        fn with_coords(c: &[f64]) -> Self {
            P2([c[0], c[1]])
        }
    }

    #[test]
    fn holomorphic_derivatives() {
        // f(w) = w³ at w = 1 + 2i
        let f = Evaluator::total("w^3", "", |p: &P2| Complex64::new(p.0[0], p.0[1]).powi(3));
        let p = P2([1.0, 2.0]);
        let j = Stencil::new(1e-3).unwrap().jet(&f, &p).unwrap();
        let w = Complex64::new(1.0, 2.0);
        assert!((j.d(0, false) - 3.0 * w * w).norm() < 1e-9);
        assert!(j.d(0, true).norm() < 1e-9);
        assert!((j.dd(0, false, 0, false) - 6.0 * w).norm() < 1e-6);
        assert!(j.dd(0, false, 0, true).norm() < 1e-6);
    }

    #[test]
    fn rejects_nonpositive_step() {
        assert!(Stencil::new(0.0).is_err());
    }
}
