use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::Scalar;

/// Arbitrary-precision rationals. `BigRational` already keeps values in
/// lowest terms with a positive denominator, which is exactly the
/// normal form we promise.
pub type Q = BigRational;

pub fn q_of(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q_ratio(n: i64, d: i64) -> Q {
    assert!(d != 0);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse "a/b" or "a" (decimal integers, optional sign).
pub fn q_from_str(s: &str) -> Option<Q> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.trim().parse().ok()?;
    let d: BigInt = den.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl Scalar for Q {
    fn zero(&self) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(&self) -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(&self, n: i64) -> Self {
        q_of(n)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::NonInvertible)
        } else {
            Ok(self.recip())
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Serialize as "a/b" (or "a" when the denominator is 1).
pub fn q_to_string(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// |numerator| + |denominator| bit length, a rough size measure used by
/// budget guards.
pub fn q_bits(x: &Q) -> u64 {
    x.numer().abs().bits() + x.denom().bits()
}
