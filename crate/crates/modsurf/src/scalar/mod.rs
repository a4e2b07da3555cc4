//! Exact field arithmetic: ℚ, 𝔽_p, simple extensions, rational function
//! fields and the two-infinitesimal jet ring. Everything downstream is
//! generic over [`Scalar`].

mod ext;
mod fp;
mod jet;
mod rat;
mod ratfun;
mod upoly;

pub use ext::{Ext, ExtField};
pub use fp::Fp;
pub use jet::Jet2;
pub use fp::is_prime_u64;
pub use rat::{q_bits, q_from_str, q_of, q_ratio, q_to_string, Q};
pub use ratfun::RatFun;
pub use upoly::UPoly;

use crate::error::{Error, Result};

/// An exact field element. The field "context" (the prime, the minimal
/// polynomial, …) travels inside each element, so `zero`/`one`/`from_i64`
/// are methods rather than associated constants.
///
/// Arithmetic on elements of *different* fields (different primes, say) is
/// a caller bug and panics; the dynamic [`FieldScalar`] wrapper offers
/// checked variants for untrusted input at the serialization boundary.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn from_i64(&self, n: i64) -> Self;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `Err(NonInvertible)` on zero, on zero
    /// divisors exposed by a reducible extension modulus, and on jets with
    /// vanishing constant part.
    fn inv(&self) -> Result<Self>;

    fn is_zero(&self) -> bool;
    /// Whether the element is a unit. Coincides with `!is_zero()` in every
    /// field; differs in the jet *ring*, where `ε₁` is nonzero but not a
    /// unit. Projective canonicalization scales by the first unit
    /// coordinate, so it must ask this and not `is_zero`.
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }
    fn is_one(&self) -> bool {
        *self == self.one()
    }
    fn square(&self) -> Self {
        self.mul(self)
    }
    /// a·b + c, the workhorse of polynomial evaluation.
    fn mul_add(&self, b: &Self, c: &Self) -> Self {
        self.mul(b).add(c)
    }
    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }
}

/// Field descriptor for serialization: which field a batch of scalars
/// lives in. Mirrors the JSON wire format
/// `{"type":"Q"} | {"type":"Fp","p":1013} | {"type":"ext",…} | {"type":"ratfun",…}`.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "type")]
pub enum FieldDesc {
    Q,
    Fp {
        p: u64,
    },
    #[serde(rename = "ext")]
    Ext {
        base: Box<FieldDesc>,
        /// Coefficients of the monic minimal polynomial, constant term
        /// first, as decimal strings.
        minpoly: Vec<String>,
    },
    #[serde(rename = "ratfun")]
    RatFun {
        base: Box<FieldDesc>,
        var: String,
    },
}

/// A dynamically-typed scalar for the serialization / CLI boundary, where
/// mixing fields is user error, not programmer error.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldScalar {
    Q(Q),
    Fp(Fp),
    ExtQ(Ext<Q>),
    ExtFp(Ext<Fp>),
    RatFunQ(RatFun<Q>),
}

macro_rules! checked_op {
    ($a:expr, $b:expr, $op:ident) => {
        match ($a, $b) {
            (FieldScalar::Q(a), FieldScalar::Q(b)) => Ok(FieldScalar::Q(a.$op(b))),
            (FieldScalar::Fp(a), FieldScalar::Fp(b)) if a.modulus() == b.modulus() => {
                Ok(FieldScalar::Fp(a.$op(b)))
            }
            (FieldScalar::ExtQ(a), FieldScalar::ExtQ(b)) if a.field() == b.field() => {
                Ok(FieldScalar::ExtQ(a.$op(b)))
            }
            (FieldScalar::ExtFp(a), FieldScalar::ExtFp(b)) if a.field() == b.field() => {
                Ok(FieldScalar::ExtFp(a.$op(b)))
            }
            (FieldScalar::RatFunQ(a), FieldScalar::RatFunQ(b)) => {
                Ok(FieldScalar::RatFunQ(a.$op(b)))
            }
            (a, b) => Err(Error::FieldMismatch(format!(
                "{:?} vs {:?}",
                a.desc(),
                b.desc()
            ))),
        }
    };
}

impl FieldScalar {
    pub fn desc(&self) -> FieldDesc {
        match self {
            FieldScalar::Q(_) => FieldDesc::Q,
            FieldScalar::Fp(x) => FieldDesc::Fp { p: x.modulus() },
            FieldScalar::ExtQ(x) => FieldDesc::Ext {
                base: Box::new(FieldDesc::Q),
                minpoly: x.field().minpoly_strings(),
            },
            FieldScalar::ExtFp(x) => FieldDesc::Ext {
                base: Box::new(FieldDesc::Fp {
                    p: x.field().base_token().modulus(),
                }),
                minpoly: x.field().minpoly_strings(),
            },
            FieldScalar::RatFunQ(_) => FieldDesc::RatFun {
                base: Box::new(FieldDesc::Q),
                var: "t".into(),
            },
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        checked_op!(self, other, add)
    }
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        checked_op!(self, other, mul)
    }
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (FieldScalar::Q(a), FieldScalar::Q(b)) => a.div(b).map(FieldScalar::Q),
            (FieldScalar::Fp(a), FieldScalar::Fp(b)) if a.modulus() == b.modulus() => {
                a.div(b).map(FieldScalar::Fp)
            }
            (FieldScalar::ExtQ(a), FieldScalar::ExtQ(b)) if a.field() == b.field() => {
                a.div(b).map(FieldScalar::ExtQ)
            }
            (FieldScalar::ExtFp(a), FieldScalar::ExtFp(b)) if a.field() == b.field() => {
                a.div(b).map(FieldScalar::ExtFp)
            }
            (FieldScalar::RatFunQ(a), FieldScalar::RatFunQ(b)) => a.div(b).map(FieldScalar::RatFunQ),
            _ => Err(Error::FieldMismatch(format!(
                "{:?} vs {:?}",
                self.desc(),
                other.desc()
            ))),
        }
    }
}

