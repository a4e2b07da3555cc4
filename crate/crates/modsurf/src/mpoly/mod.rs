//! Sparse multivariate polynomials (≤ 4 variables, graded-lex order)
//! over any [`Scalar`] field: identities, discriminants, compositions,
//! and the gcd machinery behind iterate-degree computations.

mod gcd;
mod parse;

pub use gcd::{gcd_fp, gcd_q};
pub use parse::parse_poly;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{Fp, Scalar, UPoly, Q};

pub const MAX_VARS: usize = 4;

/// Exponent vector, fixed width. Unused slots stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Mono(pub [u16; MAX_VARS]);

impl Mono {
    pub fn total(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn checked_sub(&self, other: &Mono) -> Option<Mono> {
        let mut out = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            out[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Mono(out))
    }

    fn add(&self, other: &Mono) -> Mono {
        let mut out = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            out[i] = self.0[i] + other.0[i];
        }
        Mono(out)
    }
}

/// Graded lexicographic: compare total degree first, then exponents
/// left to right. `BTreeMap` iteration is ascending, so the leading
/// (largest) term sits at the back.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial. No zero coefficients are stored; the
/// `token` element keeps the field context for the zero polynomial.
#[derive(Clone, Debug)]
pub struct MPoly<K: Scalar> {
    nvars: usize,
    terms: BTreeMap<Mono, K>,
    token: K,
}

impl<K: Scalar> PartialEq for MPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<K: Scalar> MPoly<K> {
    pub fn zero(nvars: usize, token: K) -> Self {
        assert!(nvars <= MAX_VARS);
        MPoly {
            nvars,
            terms: BTreeMap::new(),
            token,
        }
    }

    pub fn constant(nvars: usize, c: K) -> Self {
        let token = c.one();
        let mut p = MPoly::zero(nvars, token);
        if !c.is_zero() {
            p.terms.insert(Mono([0; MAX_VARS]), c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize, token: K) -> Self {
        assert!(i < nvars);
        let mut e = [0u16; MAX_VARS];
        e[i] = 1;
        let mut p = MPoly::zero(nvars, token.clone());
        p.terms.insert(Mono(e), token.one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Mono, K)>, token: K) -> Self {
        let mut p = MPoly::zero(nvars, token);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Mono, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn token(&self) -> &K {
        &self.token
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &K)> {
        self.terms.iter()
    }

    /// Max total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::total).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Mono::total);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn leading(&self) -> Option<(&Mono, &K)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Mono) -> K {
        self.terms.get(m).cloned().unwrap_or_else(|| self.token.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
            token: self.token.clone(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return MPoly::zero(self.nvars, self.token.clone());
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (*m, k.mul(c))).collect(),
            token: self.token.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars, self.token.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.add(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Mono, c: &K) -> Self {
        let mut out = MPoly::zero(self.nvars, self.token.clone());
        for (ma, ca) in &self.terms {
            out.add_term(ma.add(m), ca.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MPoly::constant(self.nvars, self.token.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, xs: &[K]) -> K {
        assert_eq!(xs.len(), self.nvars);
        // Power tables per variable up to the max exponent actually used.
        let mut pows: Vec<Vec<K>> = Vec::with_capacity(self.nvars);
        for (i, x) in xs.iter().enumerate() {
            let d = self.degree_in(i).unwrap_or(0) as usize;
            let mut tab = Vec::with_capacity(d + 1);
            tab.push(self.token.one());
            for _ in 0..d {
                let last = tab.last().unwrap().mul(x);
                tab.push(last);
            }
            pows.push(tab);
        }
        let mut acc = self.token.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..self.nvars {
                let e = m.0[i] as usize;
                if e > 0 {
                    t = t.mul(&pows[i][e]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute a polynomial for every variable (classical composition).
    pub fn subst(&self, inner: &[MPoly<K>]) -> MPoly<K> {
        assert_eq!(inner.len(), self.nvars);
        let nv = inner[0].nvars;
        // Horner in every variable but the last, where a power table is
        // shared across all branches of the recursion. Far cheaper than
        // expanding term by term on the big compositions.
        let last = self.nvars - 1;
        let d = self.degree_in(last).unwrap_or(0) as usize;
        let mut pow_last = Vec::with_capacity(d + 1);
        pow_last.push(MPoly::constant(nv, self.token.one()));
        for _ in 0..d {
            let next = pow_last.last().unwrap().mul(&inner[last]);
            pow_last.push(next);
        }
        self.subst_horner(inner, 0, &pow_last, nv)
    }

    fn subst_horner(
        &self,
        inner: &[MPoly<K>],
        v: usize,
        pow_last: &[MPoly<K>],
        nv: usize,
    ) -> MPoly<K> {
        if v + 1 == self.nvars {
            let mut acc = MPoly::zero(nv, self.token.clone());
            for (m, c) in &self.terms {
                acc = acc.add(&pow_last[m.0[v] as usize].scale(c));
            }
            return acc;
        }
        let coeffs = self.coeffs_wrt(v);
        let mut acc = MPoly::zero(nv, self.token.clone());
        for c in coeffs.iter().rev() {
            acc = acc
                .mul(&inner[v])
                .add(&c.subst_horner(inner, v + 1, pow_last, nv));
        }
        acc
    }

    /// Exact division: `Some(q)` with `self = q·b`, else `None`.
    pub fn exact_div(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.nvars, b.nvars);
        let (bm, bc) = b.leading()?;
        let bc_inv = bc.inv().ok()?;
        let mut rem = self.clone();
        let mut quo = MPoly::zero(self.nvars, self.token.clone());
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.checked_sub(bm)?;
            let c = rc.mul(&bc_inv);
            quo.add_term(m, c.clone());
            rem = rem.sub(&b.mul_term(&m, &c));
        }
        Some(quo)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = MPoly::zero(self.nvars, self.token.clone());
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = *m;
            m2.0[var] = e - 1;
            out.add_term(m2, c.mul(&self.token.from_i64(e as i64)));
        }
        out
    }

    /// Coefficients with respect to one variable: index i holds the
    /// polynomial coefficient of var^i (with var's exponent zeroed).
    pub fn coeffs_wrt(&self, var: usize) -> Vec<MPoly<K>> {
        let d = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![MPoly::zero(self.nvars, self.token.clone()); d + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut m2 = *m;
            m2.0[var] = 0;
            out[e].add_term(m2, c.clone());
        }
        out
    }

    /// b² − 4ac for a polynomial quadratic in `var`.
    pub fn discriminant_wrt(&self, var: usize) -> Result<Self> {
        let d = self.degree_in(var).unwrap_or(0) as usize;
        if d != 2 {
            return Err(Error::UnsupportedDegree(d));
        }
        let cs = self.coeffs_wrt(var);
        let four = MPoly::constant(self.nvars, self.token.from_i64(4));
        Ok(cs[1].mul(&cs[1]).sub(&four.mul(&cs[2]).mul(&cs[0])))
    }

    /// Polynomial square root by graded-lex leading-term recursion.
    /// `sqrt_lead` extracts square roots of field elements (rationals or
    /// 𝔽_p residues); `None` from it, or a failed term division, means
    /// the input is not a square.
    pub fn poly_sqrt(&self, sqrt_lead: impl Fn(&K) -> Option<K>) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let (lm, lc) = self.leading()?;
        let mut sm = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            if lm.0[i] % 2 != 0 {
                return None;
            }
            sm[i] = lm.0[i] / 2;
        }
        let sc = sqrt_lead(lc)?;
        let lead_m = Mono(sm);
        let lead_2c = sc.mul(&self.token.from_i64(2));
        let mut s = MPoly::zero(self.nvars, self.token.clone());
        s.add_term(lead_m, sc);
        // Leading terms of the residual strictly decrease in graded-lex,
        // within a bounded degree, so this terminates.
        let mut r = self.sub(&s.mul(&s));
        while let Some((rm, rc)) = r.leading() {
            let m = rm.checked_sub(&lead_m)?;
            let c = rc.div(&lead_2c).ok()?;
            let mut t = MPoly::zero(self.nvars, self.token.clone());
            t.add_term(m, c);
            // r = self − (s+t)² = r − 2st − t²
            let st2 = s.mul(&t).scale(&self.token.from_i64(2));
            let tt = t.mul(&t);
            s = s.add(&t);
            r = r.sub(&st2).sub(&tt);
        }
        Some(s)
    }

    /// Map coefficients into another scalar type.
    pub fn map<K2: Scalar>(&self, token: K2, f: impl Fn(&K) -> Option<K2>) -> Option<MPoly<K2>> {
        let mut out = MPoly::zero(self.nvars, token);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Some(out)
    }

    /// View as univariate in `var` with the remaining variables evaluated.
    pub fn eval_except(&self, var: usize, xs: &[K]) -> UPoly<K> {
        let cs = self.coeffs_wrt(var);
        let coeffs = cs
            .iter()
            .map(|c| {
                let mut full = xs.to_vec();
                full[var] = self.token.zero(); // ignored: exponent is zero
                c.eval(&full)
            })
            .collect();
        UPoly::new(coeffs, self.token.clone())
    }
}

impl MPoly<Q> {
    pub fn to_fp(&self, p: u64) -> Option<MPoly<Fp>> {
        let token = Fp::new(1, p);
        self.map(token, |c| {
            let d = c.denom().clone() % num_bigint::BigInt::from(p);
            if num_traits::Zero::is_zero(&d) {
                return None;
            }
            let n = c.numer().clone() % num_bigint::BigInt::from(p);
            let nv = i64::try_from(n).ok()?;
            let dv = i64::try_from(d).ok()?;
            Some(Fp::new(nv, p).div(&Fp::new(dv, p)).ok()?)
        })
    }
}

/// Euler relation Σ xᵢ ∂f/∂xᵢ = deg(f)·f — holds exactly for
/// homogeneous f; used as a self-check in tests.
pub fn euler_defect<K: Scalar>(f: &MPoly<K>) -> MPoly<K> {
    let d = f.degree().unwrap_or(0);
    let mut acc = MPoly::zero(f.nvars(), f.token().clone());
    for i in 0..f.nvars() {
        let xi = MPoly::var(f.nvars(), i, f.token().clone());
        acc = acc.add(&xi.mul(&f.derivative(i)));
    }
    acc.sub(&f.scale(&f.token().from_i64(d as i64)))
}
