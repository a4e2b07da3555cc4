use crate::error::{Error, Result};

use super::Scalar;

/// The 2-jet ring K[ε₁,ε₂]/(ε₁,ε₂)²: value plus both first-order
/// derivative components. This is a ring, not a field — nilpotents are
/// nonzero non-units — which is exactly why [`Scalar::is_unit`] exists.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet2<K: Scalar> {
    pub c: K,
    pub d1: K,
    pub d2: K,
}

impl<K: Scalar> Jet2<K> {
    pub fn constant(c: K) -> Self {
        let z = c.zero();
        Jet2 { c, d1: z.clone(), d2: z }
    }

    /// c + ε₁.
    pub fn active1(c: K) -> Self {
        let one = c.one();
        Jet2 { d1: one, d2: c.zero(), c }
    }

    /// c + ε₂.
    pub fn active2(c: K) -> Self {
        let one = c.one();
        Jet2 { d1: c.zero(), d2: one, c }
    }
}

impl<K: Scalar> Scalar for Jet2<K> {
    fn zero(&self) -> Self {
        Jet2::constant(self.c.zero())
    }
    fn one(&self) -> Self {
        Jet2::constant(self.c.one())
    }
    fn from_i64(&self, n: i64) -> Self {
        Jet2::constant(self.c.from_i64(n))
    }
    fn add(&self, o: &Self) -> Self {
        Jet2 {
            c: self.c.add(&o.c),
            d1: self.d1.add(&o.d1),
            d2: self.d2.add(&o.d2),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        Jet2 {
            c: self.c.sub(&o.c),
            d1: self.d1.sub(&o.d1),
            d2: self.d2.sub(&o.d2),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        Jet2 {
            c: self.c.mul(&o.c),
            d1: self.c.mul(&o.d1).add(&o.c.mul(&self.d1)),
            d2: self.c.mul(&o.d2).add(&o.c.mul(&self.d2)),
        }
    }
    fn neg(&self) -> Self {
        Jet2 {
            c: self.c.neg(),
            d1: self.d1.neg(),
            d2: self.d2.neg(),
        }
    }
    fn inv(&self) -> Result<Self> {
        if self.c.is_zero() {
            return Err(Error::NonInvertible);
        }
        let ci = self.c.inv()?;
        let ci2 = ci.square().neg();
        Ok(Jet2 {
            c: ci,
            d1: self.d1.mul(&ci2),
            d2: self.d2.mul(&ci2),
        })
    }
    fn is_zero(&self) -> bool {
        self.c.is_zero() && self.d1.is_zero() && self.d2.is_zero()
    }
    fn is_unit(&self) -> bool {
        !self.c.is_zero()
    }
}
