use crate::error::{Error, Result};

use super::Scalar;

/// Dense univariate polynomial over an exact field `K`, coefficients in
/// ascending order of degree, trailing zeros stripped. A `token` element
/// keeps the field context reachable even for the zero polynomial.
#[derive(Clone, Debug)]
pub struct UPoly<K: Scalar> {
    coeffs: Vec<K>,
    token: K,
}

impl<K: Scalar> PartialEq for UPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<K: Scalar> UPoly<K> {
    pub fn new(coeffs: Vec<K>, token: K) -> Self {
        let mut p = UPoly { coeffs, token };
        p.normalize();
        p
    }

    pub fn zero(token: K) -> Self {
        UPoly { coeffs: vec![], token }
    }

    pub fn constant(c: K) -> Self {
        let token = c.one();
        UPoly::new(vec![c], token)
    }

    pub fn var(token: K) -> Self {
        UPoly::new(vec![token.zero(), token.one()], token)
    }

    pub fn monomial(c: K, deg: usize) -> Self {
        let token = c.one();
        let mut coeffs = vec![token.zero(); deg + 1];
        coeffs[deg] = c;
        UPoly::new(coeffs, token)
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn token(&self) -> &K {
        &self.token
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.token.zero())
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        UPoly::new(coeffs, self.token.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        UPoly::new(coeffs, self.token.clone())
    }

    pub fn neg(&self) -> Self {
        UPoly::new(self.coeffs.iter().map(K::neg).collect(), self.token.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(self.token.clone());
        }
        let mut coeffs = vec![self.token.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = a.mul(b).add(&coeffs[i + j]);
            }
        }
        UPoly::new(coeffs, self.token.clone())
    }

    pub fn scale(&self, c: &K) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.token.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UPoly::constant(self.token.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; the divisor's leading coefficient must be
    /// invertible (always true over a field unless `other` is zero).
    pub fn divrem(&self, other: &Self) -> Result<(Self, Self)> {
        let d = other.degree().ok_or(Error::NonInvertible)?;
        let lc_inv = other.leading().unwrap().inv()?;
        let mut rem = self.clone();
        let mut quo = vec![self.token.zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let c = rem.leading().unwrap().mul(&lc_inv);
            let k = rd - d;
            quo[k] = c.clone();
            // rem -= c·x^k·other
            let mut coeffs = rem.coeffs;
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[k + j] = coeffs[k + j].sub(&c.mul(b));
            }
            rem = UPoly::new(coeffs, self.token.clone());
        }
        Ok((UPoly::new(quo, self.token.clone()), rem))
    }

    pub fn rem(&self, other: &Self) -> Result<Self> {
        Ok(self.divrem(other)?.1)
    }

    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading().ok_or(Error::NonInvertible)?;
        Ok(self.scale(&lc.inv()?))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    /// Extended gcd: returns (g, s, t) with s·self + t·other = g, g monic.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        let zero = || UPoly::zero(self.token.clone());
        let one = UPoly::constant(self.token.one());
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), zero());
        let (mut t0, mut t1) = (zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let lc_inv = r0.leading().unwrap().inv()?;
        Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), t0.scale(&lc_inv)))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.token.from_i64(i as i64)))
            .collect();
        UPoly::new(coeffs, self.token.clone())
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = self.token.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Largest k with (X − r)^k dividing self; 0 when r is not a root.
    pub fn root_multiplicity(&self, r: &K) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = UPoly::new(vec![r.neg(), r.one()], self.token.clone());
        let mut k = 0;
        let mut f = self.clone();
        loop {
            let (q, rem) = f.divrem(&lin).expect("linear divisor is monic");
            if !rem.is_zero() {
                return k;
            }
            k += 1;
            f = q;
        }
    }

    /// Largest k with m^k dividing self (m an arbitrary nonzero polynomial).
    pub fn factor_multiplicity(&self, m: &Self) -> usize {
        if self.is_zero() || m.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let mut k = 0;
        let mut f = self.clone();
        loop {
            let (q, rem) = match f.divrem(m) {
                Ok(v) => v,
                Err(_) => return k,
            };
            if !rem.is_zero() {
                return k;
            }
            k += 1;
            f = q;
        }
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = UPoly::zero(self.token.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UPoly::constant(c.clone()));
        }
        acc
    }
}
