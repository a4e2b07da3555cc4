use crate::error::{Error, Result};

use super::Scalar;

/// An element of the prime field 𝔽_p, p an odd prime below 2⁶³.
/// Representatives live in `[0, p)`; the modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl std::fmt::Debug for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}₍{}₎", self.v, self.p)
    }
}

impl std::fmt::Display for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Fp {
    /// Construct `v mod p`. Panics unless p is an odd prime < 2⁶³ —
    /// catching a bad modulus early beats debugging a silent wrong
    /// answer out of a pseudo-field.
    pub fn new(v: i64, p: u64) -> Fp {
        assert!(p < (1 << 63) && p > 2 && is_prime_u64(p), "modulus {p} is not an odd prime < 2^63");
        let m = v.rem_euclid(p as i64) as u64;
        Fp { v: m, p }
    }

    pub fn from_u64(v: u64, p: u64) -> Fp {
        assert!(p < (1 << 63) && p > 2 && is_prime_u64(p), "modulus {p} is not an odd prime < 2^63");
        Fp { v: v % p, p }
    }

    #[inline]
    pub fn value(&self) -> u64 {
        self.v
    }
    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn lift(&self, v: u64) -> Fp {
        Fp { v, p: self.p }
    }

    #[inline]
    fn check(&self, other: &Fp) {
        debug_assert_eq!(self.p, other.p, "mixed moduli {} and {}", self.p, other.p);
    }

    /// Deterministic square root: the smaller of the two roots, or `None`
    /// for a non-residue.
    pub fn sqrt(&self) -> Option<Fp> {
        if self.v == 0 {
            return Some(*self);
        }
        let p = self.p;
        // Euler criterion first; Tonelli–Shanks only on residues.
        if self.pow_u((p - 1) / 2).v != 1 {
            return None;
        }
        let r = if p % 4 == 3 {
            self.pow_u((p + 1) / 4).v
        } else {
            tonelli_shanks(self.v, p)
        };
        let r = r.min(p - r);
        Some(self.lift(r))
    }
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for u64 (the standard 12-base certificate).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Tonelli–Shanks for p ≡ 1 (mod 4); `a` must be a nonzero residue.
/// Deterministic: the non-residue is found by increasing search from 2.
fn tonelli_shanks(a: u64, p: u64) -> u64 {
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while powmod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = powmod(z, q, p);
    let mut t = powmod(a, q, p);
    let mut r = powmod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = mulmod(tt, tt, p);
            i += 1;
        }
        let b = powmod(c, 1 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    r
}

impl Scalar for Fp {
    fn zero(&self) -> Self {
        self.lift(0)
    }
    fn one(&self) -> Self {
        self.lift(1 % self.p)
    }
    fn from_i64(&self, n: i64) -> Self {
        self.lift(n.rem_euclid(self.p as i64) as u64)
    }
    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let s = self.v + other.v;
        self.lift(if s >= self.p { s - self.p } else { s })
    }
    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let s = if self.v >= other.v {
            self.v - other.v
        } else {
            self.v + self.p - other.v
        };
        self.lift(s)
    }
    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        self.lift(mulmod(self.v, other.v, self.p))
    }
    fn neg(&self) -> Self {
        self.lift(if self.v == 0 { 0 } else { self.p - self.v })
    }
    fn inv(&self) -> Result<Self> {
        if self.v == 0 {
            return Err(Error::NonInvertible);
        }
        Ok(self.lift(powmod(self.v, self.p - 2, self.p)))
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn pow_u(&self, e: u64) -> Self {
        self.lift(powmod(self.v, e, self.p))
    }
}
