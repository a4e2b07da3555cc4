//! Randomized algebraic and geometric invariants: field axioms for every
//! scalar type, polynomial ring axioms with gcd/division/square-root
//! round trips, PGL₃ equivariance of the operators, and period-map round
//! trips. Each suite runs well over 10³ instances.

use modsurf::dynamics::{labeled_lambda, period_map};
use modsurf::families::{sample_chart_points, SurfaceModel};
use modsurf::mpoly::{gcd_fp, MPoly, Mono};
use modsurf::projgeom::ProjMap2;
use modsurf::scalar::{q_ratio, ExtField, Fp, Jet2, RatFun, Scalar, UPoly, Q};
use proptest::prelude::*;

const P: u64 = 1009;

fn arb_q() -> impl Strategy<Value = Q> {
    (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| q_ratio(n, d))
}

fn arb_fp() -> impl Strategy<Value = Fp> {
    (0..P).prop_map(|v| Fp::from_u64(v, P))
}

fn arb_ext() -> impl Strategy<Value = modsurf::scalar::Ext<Q>> {
    (arb_q(), arb_q()).prop_map(|(a, b)| {
        let field = ExtField::new(vec![q_ratio(-2, 1), q_ratio(0, 1), q_ratio(1, 1)]);
        field.element(vec![a, b])
    })
}

fn arb_jet() -> impl Strategy<Value = Jet2<Fp>> {
    (arb_fp(), arb_fp(), arb_fp()).prop_map(|(c, d1, d2)| Jet2 { c, d1, d2 })
}

fn arb_ratfun() -> impl Strategy<Value = RatFun<Fp>> {
    (
        proptest::collection::vec(arb_fp(), 1..4),
        proptest::collection::vec(arb_fp(), 1..4),
    )
        .prop_map(|(n, d)| {
            let token = Fp::from_u64(1, P);
            let num = UPoly::new(n, token);
            let mut den = UPoly::new(d, token);
            if den.degree().is_none() {
                den = UPoly::constant(token);
            }
            RatFun::new(num, den).unwrap()
        })
}

fn field_axioms<K: Scalar>(a: &K, b: &K, c: &K) {
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert_eq!(a.add(&a.neg()), a.zero());
    assert_eq!(a.sub(b), a.add(&b.neg()));
    if a.is_unit() {
        assert_eq!(a.mul(&a.inv().unwrap()), a.one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1200))]

    #[test]
    fn q_field_axioms(a in arb_q(), b in arb_q(), c in arb_q()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn fp_field_axioms(a in arb_fp(), b in arb_fp(), c in arb_fp()) {
        field_axioms(&a, &b, &c);
        // Frobenius: a^p = a in 𝔽_p.
        prop_assert_eq!(a.pow_u(P), a);
    }

    #[test]
    fn ext_field_axioms(a in arb_ext(), b in arb_ext(), c in arb_ext()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn jet_ring_axioms(a in arb_jet(), b in arb_jet(), c in arb_jet()) {
        // Jets form a commutative ring; units are jets with unit value.
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn ratfun_field_axioms(a in arb_ratfun(), b in arb_ratfun(), c in arb_ratfun()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn fp_sqrt_roundtrip(a in arb_fp()) {
        let sq = a.square();
        let r = sq.sqrt().expect("square must have a root");
        prop_assert_eq!(r.square(), sq);
    }
}

fn arb_mpoly() -> impl Strategy<Value = MPoly<Fp>> {
    proptest::collection::vec(((0u16..3, 0u16..3, 0u16..3), arb_fp()), 0..5).prop_map(|terms| {
        let token = Fp::from_u64(1, P);
        MPoly::from_terms(
            3,
            terms
                .into_iter()
                .map(|((a, b, c), coeff)| (Mono([a, b, c, 0]), coeff)),
            token,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn mpoly_ring_axioms(a in arb_mpoly(), b in arb_mpoly(), c in arb_mpoly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), MPoly::zero(3, a.token().clone()));
    }

    #[test]
    fn mpoly_gcd_and_division_roundtrip(a in arb_mpoly(), b in arb_mpoly(), g in arb_mpoly()) {
        let ga = g.mul(&a);
        let gb = g.mul(&b);
        let d = gcd_fp(&ga, &gb);
        if !g.is_zero() {
            // g divides the gcd of (g·a, g·b).
            prop_assert!(d.exact_div(&g).is_some());
        }
        if !b.is_zero() {
            let prod = a.mul(&b);
            let q = prod.exact_div(&b).expect("product divisible by factor");
            prop_assert_eq!(q, a);
        }
    }

    #[test]
    fn mpoly_sqrt_roundtrip(s in arb_mpoly()) {
        let sq = s.mul(&s);
        if !sq.is_zero() {
            let r = sq.poly_sqrt(|lead| lead.sqrt()).expect("square has a root");
            prop_assert_eq!(r.mul(&r), sq);
        }
    }
}

/// A deterministic invertible projective map built from a seed.
fn arb_projmap() -> impl Strategy<Value = ProjMap2<Fp>> {
    proptest::collection::vec(0..P, 9).prop_filter_map("singular matrix", |v| {
        let m: [[Fp; 3]; 3] =
            std::array::from_fn(|i| std::array::from_fn(|j| Fp::from_u64(v[3 * i + j], P)));
        ProjMap2::new(m).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn lambda_is_pgl3_equivariant(n in prop_oneof![Just(7usize), Just(8usize)],
                                  seed in 0u64..1_000_000,
                                  g in arb_projmap()) {
        let token = Fp::from_u64(1, P);
        let model = SurfaceModel::new(n, &token);
        let x = sample_chart_points(&model, seed, 1)[0];
        let Ok((_, c1)) = model.parametrized_realization(&x) else {
            return Ok(());
        };
        let gc1 = c1.apply(&g).unwrap();
        match (labeled_lambda(n, &c1), labeled_lambda(n, &gc1)) {
            (Ok(l), Ok(gl)) => {
                prop_assert_eq!(l.apply(&g).unwrap().len(), gl.len());
                for i in 0..l.len() {
                    prop_assert_eq!(&l.apply(&g).unwrap().line(i).clone(), gl.line(i));
                }
            }
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "domain mismatch: {:?} vs {:?}", a.is_ok(), b.is_ok()),
        }
    }

    #[test]
    fn period_map_roundtrip_and_invariance(n in prop_oneof![Just(7usize), Just(8usize)],
                                           seed in 0u64..1_000_000,
                                           g in arb_projmap()) {
        let token = Fp::from_u64(1, P);
        let model = SurfaceModel::new(n, &token);
        let x = sample_chart_points(&model, seed, 1)[0];
        let Ok((c0, c1)) = model.parametrized_realization(&x) else {
            return Ok(());
        };
        if let Ok(back) = period_map(&model, &c0, &c1) {
            prop_assert_eq!(back, x);
        }
        // The same coordinates from any PGL₃ translate of the pair.
        let (gc0, gc1) = (c0.apply(&g).unwrap(), c1.apply(&g).unwrap());
        if let Ok(back) = period_map(&model, &gc0, &gc1) {
            prop_assert_eq!(back, x);
        }
    }
}
