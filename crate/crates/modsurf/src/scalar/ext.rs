use std::sync::Arc;

use crate::error::{Error, Result};

use super::{rat::q_to_string, Scalar, UPoly, Q};

/// A simple extension K[u]/(m(u)), m monic of degree 2–4. Irreducibility
/// of m is the caller's responsibility; a reducible modulus surfaces
/// lazily as `NonInvertible` when a zero divisor gets inverted.
#[derive(Debug)]
pub struct ExtField<K: Scalar> {
    minpoly: UPoly<K>,
}

impl<K: Scalar> PartialEq for ExtField<K> {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly
    }
}

impl<K: Scalar> ExtField<K> {
    /// `minpoly`: coefficients of the monic modulus, constant term first,
    /// leading coefficient included and equal to one.
    pub fn new(minpoly: Vec<K>) -> Arc<Self> {
        let token = minpoly[0].one();
        let m = UPoly::new(minpoly, token);
        let d = m.degree().expect("modulus must be nonzero");
        assert!((2..=4).contains(&d), "extension degree must be 2..=4, got {d}");
        assert!(m.leading().unwrap().is_one(), "modulus must be monic");
        assert!(!m.coeff(0).is_zero(), "modulus must have nonzero constant term");
        Arc::new(ExtField { minpoly: m })
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn minpoly(&self) -> &UPoly<K> {
        &self.minpoly
    }

    pub fn base_token(&self) -> K {
        self.minpoly.token().clone()
    }

    /// The adjoined root u as a field element.
    pub fn gen(self: &Arc<Self>) -> Ext<K> {
        let t = self.base_token();
        Ext {
            rep: UPoly::var(t),
            field: self.clone(),
        }
    }

    pub fn from_base(self: &Arc<Self>, c: K) -> Ext<K> {
        Ext {
            rep: UPoly::constant(c),
            field: self.clone(),
        }
    }

    /// Build the element c₀ + c₁u + … directly.
    pub fn element(self: &Arc<Self>, coeffs: Vec<K>) -> Ext<K> {
        let t = self.base_token();
        let rep = UPoly::new(coeffs, t)
            .rem(&self.minpoly)
            .expect("modulus is monic");
        Ext {
            rep,
            field: self.clone(),
        }
    }
}

impl ExtField<Q> {
    pub fn minpoly_strings(&self) -> Vec<String> {
        (0..=self.degree()).map(|i| q_to_string(&self.minpoly.coeff(i))).collect()
    }
}

impl ExtField<super::Fp> {
    pub fn minpoly_strings(&self) -> Vec<String> {
        (0..=self.degree()).map(|i| self.minpoly.coeff(i).to_string()).collect()
    }
}

/// An element of a simple extension, reduced mod the minimal polynomial.
#[derive(Clone, Debug)]
pub struct Ext<K: Scalar> {
    rep: UPoly<K>,
    field: Arc<ExtField<K>>,
}

impl<K: Scalar> PartialEq for Ext<K> {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep && self.field == other.field
    }
}

impl<K: Scalar> Ext<K> {
    pub fn field(&self) -> &Arc<ExtField<K>> {
        &self.field
    }

    pub fn rep(&self) -> &UPoly<K> {
        &self.rep
    }

    /// The base-field value when the element is rational over K.
    pub fn as_base(&self) -> Option<K> {
        match self.rep.degree() {
            None => Some(self.field.base_token().zero()),
            Some(0) => Some(self.rep.coeff(0)),
            _ => None,
        }
    }

    fn check(&self, other: &Self) {
        debug_assert!(self.field == other.field, "mixed extension fields");
    }

    fn wrap(&self, rep: UPoly<K>) -> Self {
        Ext {
            rep,
            field: self.field.clone(),
        }
    }
}

impl<K: Scalar> Scalar for Ext<K> {
    fn zero(&self) -> Self {
        self.wrap(UPoly::zero(self.field.base_token()))
    }
    fn one(&self) -> Self {
        self.wrap(UPoly::constant(self.field.base_token().one()))
    }
    fn from_i64(&self, n: i64) -> Self {
        self.wrap(UPoly::constant(self.field.base_token().from_i64(n)))
    }
    fn add(&self, other: &Self) -> Self {
        self.check(other);
        self.wrap(self.rep.add(&other.rep))
    }
    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        self.wrap(self.rep.sub(&other.rep))
    }
    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let prod = self.rep.mul(&other.rep);
        self.wrap(prod.rem(self.field.minpoly()).expect("modulus is monic"))
    }
    fn neg(&self) -> Self {
        self.wrap(self.rep.neg())
    }
    fn inv(&self) -> Result<Self> {
        if self.rep.is_zero() {
            return Err(Error::NonInvertible);
        }
        // xgcd against the modulus; a nontrivial gcd means the modulus is
        // reducible and self is a zero divisor.
        let (g, s, _) = self.rep.xgcd(self.field.minpoly())?;
        if g.degree() != Some(0) {
            return Err(Error::NonInvertible);
        }
        Ok(self.wrap(s.rem(self.field.minpoly()).expect("modulus is monic")))
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}
