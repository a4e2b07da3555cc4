//! Multivariate gcd: Brown-style evaluation/interpolation over 𝔽_p, and
//! a CRT lift to ℚ certified by exact division. The trivariate degree-126
//! compositions that arise from iterating the plane map are far beyond
//! what a subresultant PRS over ℚ can digest, so the modular route is the
//! primary algorithm, not an optimization.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

use super::{MPoly, Mono, MAX_VARS};
use crate::scalar::{Fp, Scalar, UPoly, Q};

/// Monic (graded-lex leading coefficient 1) gcd over 𝔽_p.
/// `gcd(a, 0) = monic(a)`; `gcd(0, 0) = 0`.
pub fn gcd_fp(a: &MPoly<Fp>, b: &MPoly<Fp>) -> MPoly<Fp> {
    assert_eq!(a.nvars(), b.nvars());
    if a.is_zero() {
        return monic(b);
    }
    if b.is_zero() {
        return monic(a);
    }
    let (ma, pa) = strip_monomial(a);
    let (mb, pb) = strip_monomial(b);
    let mut common = [0u16; MAX_VARS];
    for i in 0..MAX_VARS {
        common[i] = ma.0[i].min(mb.0[i]);
    }
    let core = gcd_core(&pa, &pb);
    let one = core.token().one();
    monic(&core.mul_term(&Mono(common), &one))
}

/// gcd of the monomial-free parts (each input has, for every variable,
/// some term not involving it).
fn gcd_core(a: &MPoly<Fp>, b: &MPoly<Fp>) -> MPoly<Fp> {
    let vars = active_vars(a, b);
    match vars.len() {
        0 => MPoly::constant(a.nvars(), a.token().one()),
        1 => {
            let v = vars[0];
            let g = to_upoly(a, v).gcd(&to_upoly(b, v)).expect("field arithmetic");
            from_upoly(&g, v, a.nvars())
        }
        _ => {
            // Homogeneous inputs have homogeneous gcds, so one variable can
            // be dehomogenized away for free — this is what keeps the
            // degree-126 iterate gcds bivariate.
            if vars.len() >= 3 && a.is_homogeneous() && b.is_homogeneous() {
                let v = *vars.last().unwrap();
                let one = a.token().one();
                let da = eval_var(a, v, &one);
                let db = eval_var(b, v, &one);
                let g = gcd_core(&da, &db);
                return homogenize(&g, v);
            }
            brown(a, b, &vars)
        }
    }
}

/// Dense interpolation in the last active variable; recursion handles the
/// smaller-arity images, contents and leading-coefficient gcds. Certified
/// by exact division before returning, with fresh evaluation points on a
/// (never yet observed) unlucky round.
fn brown(a: &MPoly<Fp>, b: &MPoly<Fp>, vars: &[usize]) -> MPoly<Fp> {
    let main = vars[0];
    let iv = *vars.last().unwrap();
    let p = a.token().modulus();
    let one = a.token().one();

    let cont_a = content_wrt(a, main);
    let cont_b = content_wrt(b, main);
    let pa = a.exact_div(&cont_a).expect("content divides");
    let pb = b.exact_div(&cont_b).expect("content divides");
    let c = gcd_fp(&cont_a, &cont_b);

    let lc_a = lc_wrt(&pa, main);
    let lc_b = lc_wrt(&pb, main);
    let gamma = gcd_fp(&lc_a, &lc_b);

    let bound = gamma.degree_in(iv).unwrap_or(0) as usize
        + pa.degree_in(iv)
            .unwrap_or(0)
            .min(pb.degree_in(iv).unwrap_or(0)) as usize;

    let mut samples: Vec<(Fp, MPoly<Fp>)> = Vec::new();
    let mut min_dm: Option<u16> = None;
    for alpha_raw in 0..p {
        let alpha = one.from_i64(alpha_raw as i64);
        let gamma_a = eval_var(&gamma, iv, &alpha);
        if gamma_a.is_zero() {
            continue;
        }
        if eval_var(&lc_a, iv, &alpha).is_zero() || eval_var(&lc_b, iv, &alpha).is_zero() {
            continue;
        }
        let ia = eval_var(&pa, iv, &alpha);
        let ib = eval_var(&pb, iv, &alpha);
        let g = gcd_fp(&ia, &ib);
        let dm = g.degree_in(main).unwrap_or(0);
        if dm == 0 {
            // The main-primitive parts are coprime.
            return monic(&c);
        }
        match min_dm {
            Some(d) if dm > d => continue, // unlucky evaluation point
            Some(d) if dm < d => {
                samples.clear();
                min_dm = Some(dm);
            }
            None => min_dm = Some(dm),
            _ => {}
        }
        // Rescale so the main-variable leading coefficient interpolates
        // to γ, Brown's normalization.
        let q = match gamma_a.exact_div(&lc_wrt(&g, main)) {
            Some(q) => q,
            None => continue,
        };
        samples.push((alpha, g.mul(&q)));
        if samples.len() == bound + 1 {
            let h = newton_interpolate(&samples, iv);
            let hc = content_wrt(&h, main);
            let hp = h.exact_div(&hc).expect("content divides");
            if hp.divides(&pa) && hp.divides(&pb) {
                return monic(&c.mul(&hp));
            }
            samples.clear(); // all points conspired unlucky: resample
            min_dm = None;
        }
    }
    panic!("prime {p} too small for gcd interpolation (need {} points)", bound + 1);
}

/// gcd over ℚ, normalized to a primitive integer polynomial with positive
/// graded-lex leading coefficient. Computed modulo a drifting set of
/// 62-bit primes, reconstructed by CRT, and certified by exact division —
/// the certification makes unlucky primes harmless.
pub fn gcd_q(a: &MPoly<Q>, b: &MPoly<Q>) -> MPoly<Q> {
    assert_eq!(a.nvars(), b.nvars());
    if a.is_zero() {
        return primitive_part(b);
    }
    if b.is_zero() {
        return primitive_part(a);
    }
    let az = primitive_part(a);
    let bz = primitive_part(b);
    let lga = lead_int(&az).gcd(&lead_int(&bz));

    let mut modulus = BigInt::one();
    let mut acc: BTreeMap<Mono, BigInt> = BTreeMap::new();
    let mut lead_mono: Option<Mono> = None;
    let mut prev: Option<MPoly<Q>> = None;

    let mut p: u64 = (1 << 62) - 1;
    for _ in 0..64 {
        p = prev_prime(p);
        let pb = BigInt::from(p);
        if (&lga % &pb).is_zero() {
            continue;
        }
        let (ap, bp) = match (az.to_fp(p), bz.to_fp(p)) {
            (Some(x), Some(y)) => (x, y),
            _ => continue,
        };
        let gp = gcd_fp(&ap, &bp);
        let lm = *gp.leading().expect("gcd of nonzero is nonzero").0;
        if lm == Mono([0; MAX_VARS]) {
            return MPoly::constant(a.nvars(), q_int(1));
        }
        match lead_mono {
            Some(m) if lm > m => continue, // unlucky prime: gcd too big
            Some(m) if lm < m => {
                modulus = BigInt::one();
                acc.clear();
                prev = None;
                lead_mono = Some(lm);
            }
            None => lead_mono = Some(lm),
            _ => {}
        }
        // Impose leading coefficient gcd(lc a, lc b), which the true
        // gcd's leading coefficient divides; CRT then converges on an
        // integer polynomial.
        let scale = fp_of_bigint(&lga, p);
        let gs = gp.scale(&scale);
        crt_update(&mut acc, &mut modulus, &gs, &pb);
        let cand = reconstruct(&acc, &modulus, a.nvars());
        if prev.as_ref() == Some(&cand) {
            if !cand.is_zero() && cand.divides(&az) && cand.divides(&bz) {
                return cand;
            }
        }
        prev = Some(cand);
    }
    panic!("rational gcd failed to stabilize after 64 primes");
}

fn monic<K: Scalar>(p: &MPoly<K>) -> MPoly<K> {
    match p.leading() {
        None => p.clone(),
        Some((_, c)) => p.scale(&c.inv().expect("leading coefficient is a unit")),
    }
}

fn strip_monomial<K: Scalar>(p: &MPoly<K>) -> (Mono, MPoly<K>) {
    let mut m = [u16::MAX; MAX_VARS];
    for (mono, _) in p.terms() {
        for i in 0..MAX_VARS {
            m[i] = m[i].min(mono.0[i]);
        }
    }
    let m = Mono(m);
    let stripped = MPoly::from_terms(
        p.nvars(),
        p.terms()
            .map(|(mono, c)| (mono.checked_sub(&m).expect("min exponent"), c.clone())),
        p.token().clone(),
    );
    (m, stripped)
}

fn active_vars<K: Scalar>(a: &MPoly<K>, b: &MPoly<K>) -> Vec<usize> {
    (0..a.nvars())
        .filter(|&v| a.degree_in(v).unwrap_or(0) > 0 || b.degree_in(v).unwrap_or(0) > 0)
        .collect()
}

fn to_upoly<K: Scalar>(p: &MPoly<K>, var: usize) -> UPoly<K> {
    let d = p.degree_in(var).unwrap_or(0) as usize;
    let mut coeffs = vec![p.token().zero(); d + 1];
    for (m, c) in p.terms() {
        coeffs[m.0[var] as usize] = c.clone();
    }
    UPoly::new(coeffs, p.token().clone())
}

fn from_upoly<K: Scalar>(u: &UPoly<K>, var: usize, nvars: usize) -> MPoly<K> {
    MPoly::from_terms(
        nvars,
        u.coeffs().iter().enumerate().map(|(e, c)| {
            let mut m = [0u16; MAX_VARS];
            m[var] = e as u16;
            (Mono(m), c.clone())
        }),
        u.token().clone(),
    )
}

pub(super) fn eval_var<K: Scalar>(p: &MPoly<K>, var: usize, x: &K) -> MPoly<K> {
    let d = p.degree_in(var).unwrap_or(0) as usize;
    let mut pows = Vec::with_capacity(d + 1);
    pows.push(p.token().one());
    for _ in 0..d {
        let last = pows.last().unwrap().mul(x);
        pows.push(last);
    }
    MPoly::from_terms(
        p.nvars(),
        p.terms().map(|(m, c)| {
            let mut m2 = *m;
            m2.0[var] = 0;
            (m2, c.mul(&pows[m.0[var] as usize]))
        }),
        p.token().clone(),
    )
}

fn homogenize<K: Scalar>(p: &MPoly<K>, var: usize) -> MPoly<K> {
    let d = p.degree().unwrap_or(0) as u16;
    MPoly::from_terms(
        p.nvars(),
        p.terms().map(|(m, c)| {
            let mut m2 = *m;
            debug_assert_eq!(m2.0[var], 0);
            m2.0[var] = d - m.total() as u16;
            (m2, c.clone())
        }),
        p.token().clone(),
    )
}

/// Leading coefficient with respect to one variable, as a polynomial in
/// the remaining ones.
fn lc_wrt(p: &MPoly<Fp>, var: usize) -> MPoly<Fp> {
    let d = p.degree_in(var).unwrap_or(0);
    MPoly::from_terms(
        p.nvars(),
        p.terms().filter(|(m, _)| m.0[var] == d).map(|(m, c)| {
            let mut m2 = *m;
            m2.0[var] = 0;
            (m2, *c)
        }),
        *p.token(),
    )
}

/// Content with respect to one variable: gcd of the coefficient
/// polynomials.
fn content_wrt(p: &MPoly<Fp>, var: usize) -> MPoly<Fp> {
    let mut g = MPoly::zero(p.nvars(), *p.token());
    for c in p.coeffs_wrt(var) {
        if c.is_zero() {
            continue;
        }
        g = gcd_fp(&g, &c);
        if g.degree() == Some(0) {
            break;
        }
    }
    if g.is_zero() {
        MPoly::constant(p.nvars(), p.token().one())
    } else {
        g
    }
}

/// Newton interpolation of polynomial-valued samples in variable `var`.
fn newton_interpolate(samples: &[(Fp, MPoly<Fp>)], var: usize) -> MPoly<Fp> {
    let nvars = samples[0].1.nvars();
    let token = *samples[0].1.token();
    // Divided differences with polynomial values over field nodes.
    let mut dd: Vec<MPoly<Fp>> = samples.iter().map(|(_, h)| h.clone()).collect();
    let n = dd.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = dd[i].sub(&dd[i - 1]);
            let den = samples[i].0.sub(&samples[i - level].0);
            dd[i] = num.scale(&den.inv().expect("distinct nodes"));
        }
    }
    let mut acc = MPoly::zero(nvars, token);
    let mut basis = MPoly::constant(nvars, token.one());
    let x = MPoly::var(nvars, var, token);
    for (i, d) in dd.iter().enumerate() {
        acc = acc.add(&basis.mul(d));
        if i + 1 < n {
            let node = MPoly::constant(nvars, samples[i].0);
            basis = basis.mul(&x.sub(&node));
        }
    }
    acc
}

fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Clear denominators and the integer content; force the graded-lex
/// leading coefficient positive.
fn primitive_part(p: &MPoly<Q>) -> MPoly<Q> {
    if p.is_zero() {
        return p.clone();
    }
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
    }
    let mut content = BigInt::zero();
    for (_, c) in p.terms() {
        let n = c.numer() * &den / c.denom();
        content = content.gcd(&n);
    }
    if p.leading().unwrap().1.numer().sign() == Sign::Minus {
        content = -content;
    }
    let scale = Q::new(den, content);
    p.scale(&scale)
}

fn lead_int(p: &MPoly<Q>) -> BigInt {
    p.leading().expect("nonzero").1.numer().clone()
}

fn prev_prime(mut n: u64) -> u64 {
    loop {
        n -= 1;
        if n % 2 == 1 && crate::scalar::is_prime_u64(n) {
            return n;
        }
    }
}

fn fp_of_bigint(x: &BigInt, p: u64) -> Fp {
    let r = x.mod_floor(&BigInt::from(p));
    Fp::new(i64::try_from(r).expect("reduced below 2^62"), p)
}

fn crt_update(acc: &mut BTreeMap<Mono, BigInt>, modulus: &mut BigInt, gp: &MPoly<Fp>, pb: &BigInt) {
    if modulus.is_one() {
        for (m, c) in gp.terms() {
            acc.insert(*m, BigInt::from(c.value()));
        }
        *modulus = pb.clone();
        return;
    }
    // x ≡ acc (mod M), x ≡ c (mod p): x = acc + M·((c−acc)·M⁻¹ mod p).
    let minv = modinv(&(modulus.mod_floor(pb)), pb);
    let keys: Vec<Mono> = acc
        .keys()
        .cloned()
        .chain(gp.terms().map(|(m, _)| *m))
        .collect();
    for m in keys {
        let old = acc.get(&m).cloned().unwrap_or_else(BigInt::zero);
        let target = gp
            .terms()
            .find(|(mm, _)| **mm == m)
            .map(|(_, c)| BigInt::from(c.value()))
            .unwrap_or_else(BigInt::zero);
        let delta = (&target - old.mod_floor(pb)).mod_floor(pb);
        let newv = &old + &*modulus * ((delta * &minv).mod_floor(pb));
        if newv.is_zero() {
            acc.remove(&m);
        } else {
            acc.insert(m, newv);
        }
    }
    *modulus = &*modulus * pb;
}

fn modinv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "CRT moduli not coprime");
    e.x.mod_floor(m)
}

/// Symmetric lift of the CRT accumulator, then primitive normalization.
fn reconstruct(acc: &BTreeMap<Mono, BigInt>, modulus: &BigInt, nvars: usize) -> MPoly<Q> {
    let half = modulus / 2;
    let p = MPoly::from_terms(
        nvars,
        acc.iter().map(|(m, c)| {
            let v = if c > &half { c - modulus } else { c.clone() };
            (*m, Q::from_integer(v))
        }),
        q_int(1),
    );
    if p.is_zero() {
        p
    } else {
        primitive_part(&p)
    }
}
