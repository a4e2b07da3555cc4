use crate::error::{Error, Result};

use super::{Scalar, UPoly};

/// The rational function field K(t): a reduced fraction of univariate
/// polynomials with monic denominator. Reduction happens after every
/// operation — wasteful in general, but it keeps every representative
/// canonical, which equality testing and hashing-by-string rely on.
#[derive(Clone, Debug)]
pub struct RatFun<K: Scalar> {
    num: UPoly<K>,
    den: UPoly<K>,
}

impl<K: Scalar> PartialEq for RatFun<K> {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl<K: Scalar> RatFun<K> {
    pub fn new(num: UPoly<K>, den: UPoly<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NonInvertible);
        }
        let g = num.gcd(&den)?;
        let (mut num, mut den) = if g.degree() == Some(0) || g.is_zero() {
            (num, den)
        } else {
            (num.divrem(&g)?.0, den.divrem(&g)?.0)
        };
        let lc_inv = den.leading().unwrap().inv()?;
        den = den.scale(&lc_inv);
        num = num.scale(&lc_inv);
        Ok(RatFun { num, den })
    }

    pub fn from_poly(p: UPoly<K>) -> Self {
        let one = UPoly::constant(p.token().one());
        RatFun { num: p, den: one }
    }

    pub fn var(token: K) -> Self {
        RatFun::from_poly(UPoly::var(token))
    }

    pub fn constant(c: K) -> Self {
        RatFun::from_poly(UPoly::constant(c))
    }

    pub fn numer(&self) -> &UPoly<K> {
        &self.num
    }
    pub fn denom(&self) -> &UPoly<K> {
        &self.den
    }

    pub fn token(&self) -> &K {
        self.den.token()
    }

    /// Evaluate at t = x; `None` at a pole.
    pub fn eval(&self, x: &K) -> Option<K> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x).mul(&d.inv().ok()?))
    }
}

impl<K: Scalar> Scalar for RatFun<K> {
    fn zero(&self) -> Self {
        RatFun::from_poly(UPoly::zero(self.token().clone()))
    }
    fn one(&self) -> Self {
        RatFun::from_poly(UPoly::constant(self.token().one()))
    }
    fn from_i64(&self, n: i64) -> Self {
        RatFun::from_poly(UPoly::constant(self.token().from_i64(n)))
    }
    fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFun::new(num, den).expect("denominators are nonzero")
    }
    fn sub(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFun::new(num, den).expect("denominators are nonzero")
    }
    fn mul(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        RatFun::new(num, den).expect("denominators are nonzero")
    }
    fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::NonInvertible);
        }
        RatFun::new(self.den.clone(), self.num.clone())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}
