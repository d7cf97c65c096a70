//! Rational functions in `k` with a monic, coprime denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn k() -> Self {
        RatFunc::from_poly(Poly::k())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn from_rational(q: BigRational) -> Self {
        RatFunc::from_poly(Poly::constant(q))
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        RatFunc::from_rational(BigRational::new(n.into(), d.into()))
    }

    /// `a + b k` with rational a, b given as fractions.
    pub fn affine(a: (i64, i64), b: (i64, i64)) -> Self {
        RatFunc::from_poly(Poly::from_coeffs(vec![
            BigRational::new(a.0.into(), a.1.into()),
            BigRational::new(b.0.into(), b.1.into()),
        ]))
    }

    /// Normalizes `num/den`; errors on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let Some(c) = den.as_constant() {
            let inv = c.recip();
            return RatFunc { num: num.scale(&inv), den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        let lc = den.leading().unwrap().recip();
        RatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value if independent of `k`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Substitutes a rational value for `k`.
    pub fn eval(&self, k: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(k);
        if d.is_zero() {
            return Err(Error::PoleAtSpecialization(format!("{} at k = {}", self, k)));
        }
        Ok(self.num.eval(k) / d)
    }

    pub fn eval_f64(&self, k: f64) -> f64 {
        self.num.eval_f64(k) / self.den.eval_f64(k)
    }

    /// Specialization kept inside the field type.
    pub fn specialize(&self, k: &BigRational) -> Result<RatFunc> {
        self.eval(k).map(RatFunc::from_rational)
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<RatFunc> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &o.recip_unchecked())
    }

    fn recip_unchecked(&self) -> RatFunc {
        let lc = self.num.leading().unwrap().recip();
        RatFunc { num: self.den.scale(&lc), den: self.num.scale(&lc) }
    }

    pub fn recip(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip_unchecked())
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        let mut acc = RatFunc::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn int(n: impl Into<BigInt>) -> RatFunc {
        RatFunc::from_rational(BigRational::from_integer(n.into()))
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl From<BigRational> for RatFunc {
    fn from(q: BigRational) -> Self {
        RatFunc::from_rational(q)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &o.num);
            }
            return RatFunc::normalized(&self.num + &o.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc { num: &(&self.num * &o.den) + &o.num, den: o.den.clone() };
        }
        if o.den.is_one() {
            return RatFunc { num: &self.num + &(&o.num * &self.den), den: self.den.clone() };
        }
        let g = self.den.gcd(&o.den);
        let (sd, od) = (self.den.div_exact(&g), o.den.div_exact(&g));
        let num = &(&self.num * &od) + &(&o.num * &sd);
        RatFunc::normalized(num, &self.den * &od)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(&self.num * &o.num);
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let (a, d) = (self.num.div_exact(&g1), o.den.div_exact(&g1));
        let (c, b) = (o.num.div_exact(&g2), self.den.div_exact(&g2));
        let num = &a * &c;
        let den = &b * &d;
        let lc = den.leading().unwrap().recip();
        RatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] for a `Result`.
    fn div(self, o: &RatFunc) -> RatFunc {
        self.checked_div(o).expect("rational function division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self)
    }
}
