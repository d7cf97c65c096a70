//! Exponents `a + b·k` attached to series prefactors.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::ratfunc::RatFunc;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymbolicExponent {
    pub a: BigRational,
    pub b: BigRational,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl SymbolicExponent {
    pub fn zero() -> Self {
        SymbolicExponent { a: BigRational::zero(), b: BigRational::zero() }
    }

    pub fn new(a: BigRational, b: BigRational) -> Self {
        SymbolicExponent { a, b }
    }

    /// `an/ad + (bn/bd)·k`.
    pub fn frac(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        SymbolicExponent { a: q(an, ad), b: q(bn, bd) }
    }

    pub fn int(n: i64) -> Self {
        SymbolicExponent { a: q(n, 1), b: BigRational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Integer exponent, if free of `k` and integral.
    pub fn as_integer(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        if self.b.is_zero() && self.a.is_integer() {
            self.a.to_integer().to_i64()
        } else {
            None
        }
    }

    /// Splits into an integer shift and a remainder with `a` in [0, 1).
    pub fn split_integer(&self) -> (i64, SymbolicExponent) {
        use num_traits::ToPrimitive;
        let fl = self.a.floor();
        let n = fl.to_integer().to_i64().expect("exponent out of range");
        (n, SymbolicExponent { a: &self.a - &fl, b: self.b.clone() })
    }

    pub fn add_int(&self, n: i64) -> Self {
        SymbolicExponent { a: &self.a + BigRational::from_integer(n.into()), b: self.b.clone() }
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::from_poly(Poly::from_coeffs(vec![self.a.clone(), self.b.clone()]))
    }

    pub fn eval(&self, k: &BigRational) -> BigRational {
        &self.a + &self.b * k
    }

    pub fn eval_f64(&self, k: f64) -> f64 {
        crate::algebra::rational_to_f64(&self.a) + crate::algebra::rational_to_f64(&self.b) * k
    }

    pub fn specialize(&self, k: &BigRational) -> Self {
        SymbolicExponent { a: self.eval(k), b: BigRational::zero() }
    }

    /// Falling factorial `e (e−1) ... (e−j+1)` as a rational function in `k`.
    pub fn falling(&self, j: usize) -> RatFunc {
        let mut acc = RatFunc::one();
        for i in 0..j {
            acc = &acc * &self.add_int(-(i as i64)).to_ratfunc();
        }
        acc
    }
}

impl Add for &SymbolicExponent {
    type Output = SymbolicExponent;
    fn add(self, o: &SymbolicExponent) -> SymbolicExponent {
        SymbolicExponent { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &SymbolicExponent {
    type Output = SymbolicExponent;
    fn sub(self, o: &SymbolicExponent) -> SymbolicExponent {
        SymbolicExponent { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Neg for &SymbolicExponent {
    type Output = SymbolicExponent;
    fn neg(self) -> SymbolicExponent {
        SymbolicExponent { a: -&self.a, b: -&self.b }
    }
}

impl fmt::Display for SymbolicExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => {
                if self.b.is_one() {
                    write!(f, "k")
                } else if (-&self.b).is_one() {
                    write!(f, "-k")
                } else {
                    write!(f, "{}*k", self.b)
                }
            }
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                let bb = self.b.abs();
                if bb == BigRational::from_integer(BigInt::one()) {
                    write!(f, "{} {} k", self.a, sign)
                } else {
                    write!(f, "{} {} {}*k", self.a, sign, bb)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_keeps_fractional_part_in_unit_interval() {
        let e = SymbolicExponent::frac(-3, 2, -1, 1);
        let (n, r) = e.split_integer();
        assert_eq!(n, -2);
        assert_eq!(r, SymbolicExponent::frac(1, 2, -1, 1));
        assert_eq!(r.add_int(n), e);
    }

    #[test]
    fn falling_factorial_of_symbolic_exponent() {
        let e = SymbolicExponent::frac(1, 1, -1, 1); // 1 − k
        let f = e.falling(2);
        let kk = RatFunc::k();
        let one = RatFunc::one();
        assert_eq!(f, &(&one - &kk) * &(-&kk));
    }

    #[test]
    fn display() {
        assert_eq!(SymbolicExponent::frac(1, 1, -1, 1).to_string(), "1 - k");
        assert_eq!(SymbolicExponent::frac(0, 1, -1, 2).to_string(), "-1/2*k");
    }
}
