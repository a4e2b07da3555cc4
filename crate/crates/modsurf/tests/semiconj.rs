//! Symbolic and sampled checks of the plane maps under the double
//! covers.

use modsurf::error::Error;
use modsurf::families::{sample_chart_points, SurfaceModel};
use modsurf::mpoly::{gcd_q, MPoly};
use modsurf::projgeom::ProjPoint2;
use modsurf::scalar::{q_of, Fp, Scalar, Q};
use modsurf::semiconj::{
    branch_curve, commuting_square_check, drop_first_var, f_indeterminacy_cubic_point,
    mu_pointwise, project_chart, verify_semiconjugacy_identity, PlaneMapModel,
};

#[test]
fn semiconjugacy_identity_exact() {
    let report = verify_semiconjugacy_identity().unwrap();
    assert_eq!(report.s_degree, 15);
    assert!(report.lhs_terms > 100);
}

#[test]
fn components_coprime_and_degrees() {
    let m = PlaneMapModel::new(&q_of(1));
    for c in m.components() {
        assert_eq!(c.degree(), Some(6));
        assert!(c.is_homogeneous());
    }
    let g = gcd_q(&gcd_q(&m.q1, &m.q2), &m.q3);
    assert_eq!(g.degree(), Some(0));
    assert_eq!(m.q.degree(), Some(5));
    assert_eq!(m.r4.degree(), Some(4));
    assert_eq!(m.r7.degree(), Some(7));
}

#[test]
fn branch_certifications() {
    let b7 = branch_curve(7).unwrap();
    assert_eq!(b7.w.degree(), Some(6)); // z₁ · quintic
    assert!(!b7.c.is_zero());
    let b8 = branch_curve(8).unwrap();
    assert_eq!(b8.w.degree(), Some(6)); // conic · quartic
}

#[test]
fn branch_sanity_small() {
    // disc_{y₁}(y₁² − y₂y₃) = 4·y₂y₃ — branch is the two lines.
    let token = q_of(1);
    let y1 = MPoly::var(4, 0, token.clone());
    let y2 = MPoly::var(4, 1, token.clone());
    let y3 = MPoly::var(4, 2, token.clone());
    let f = y1.mul(&y1).sub(&y2.mul(&y3));
    let d = drop_first_var(&f.discriminant_wrt(0).unwrap());
    let z1 = MPoly::var(3, 0, token.clone());
    let z2 = MPoly::var(3, 1, token.clone());
    assert_eq!(d, z1.mul(&z2).scale(&q_of(4)));
}

#[test]
fn f_on_the_line_l() {
    // Restricted to L: z₁ = 0, the map acts through (z₂:z₃) ↦ (z₂−z₃:z₂).
    let token = q_of(1);
    let m = PlaneMapModel::new(&token);
    let zero = MPoly::zero(3, token.clone());
    let z2 = MPoly::var(3, 1, token.clone());
    let z3 = MPoly::var(3, 2, token.clone());
    let inner = [zero.clone(), z2.clone(), z3.clone()];
    let q1l = m.q1.subst(&inner);
    let q2l = m.q2.subst(&inner);
    let q3l = m.q3.subst(&inner);
    assert!(q1l.is_zero());
    assert!(!q2l.is_zero() && !q3l.is_zero());
    assert_eq!(q2l.mul(&z2), q3l.mul(&z2.sub(&z3)));
}

#[test]
fn indeterminacy_points() {
    let token = q_of(1);
    let m = PlaneMapModel::new(&token);
    // The five rational indeterminacy points annihilate all components.
    let rational = [[0, 0, 1], [1, 0, 1], [0, 1, 0], [-1, 1, 0], [1, 0, 0]];
    for p in rational {
        let z = ProjPoint2::new(p.map(q_of)).unwrap();
        assert!(matches!(m.f_eval(&z), Err(Error::IndeterminacyPoint)));
    }
    // q₀ = (0:1:1) is a node of L + B but F is defined there.
    let q0 = ProjPoint2::new([q_of(0), q_of(1), q_of(1)]).unwrap();
    let img = m.f_eval(&q0).unwrap();
    assert_eq!(img, ProjPoint2::new([q_of(0), q_of(0), q_of(1)]).unwrap());
    // The conjugates of (−r²+2r : r : 1), r³−4r²+3r+1 = 0, complete the
    // indeterminacy locus: 5 + 3 = 8 points.
    let (ext_m, z) = f_indeterminacy_cubic_point();
    let me = PlaneMapModel::new(&ext_m);
    assert!(matches!(me.f_eval(&z), Err(Error::IndeterminacyPoint)));
}

#[test]
fn commuting_square_sampled() {
    let p = 101;
    let token = Fp::new(1, p);
    let surface = SurfaceModel::new(7, &token);
    let plane = PlaneMapModel::new(&token);
    let mut passed = 0;
    for x in sample_chart_points(&surface, 11, 300) {
        match commuting_square_check(&surface, &plane, &x) {
            Ok(ok) => {
                assert!(ok, "square fails at {x:?}");
                passed += 1;
            }
            Err(_) => continue,
        }
        if passed >= 100 {
            break;
        }
    }
    assert!(passed >= 100, "only {passed} commuting-square samples");
}

#[test]
fn mu_pointwise_agrees_with_f() {
    let p = 101;
    let token = Fp::new(1, p);
    let surface = SurfaceModel::new(7, &token);
    let plane = PlaneMapModel::new(&token);
    let mut passed = 0;
    for x in sample_chart_points(&surface, 12, 300) {
        let z = project_chart(&x);
        let (Ok(a), Ok(b)) = (mu_pointwise(&surface, &z), plane.f_eval(&z)) else {
            continue;
        };
        assert_eq!(a, b);
        passed += 1;
        if passed >= 50 {
            break;
        }
    }
    assert!(passed >= 50);
}

#[test]
fn mu8_conic_and_quartic() {
    let p = 100003;
    let token = Fp::new(1, p);
    let surface = SurfaceModel::new(8, &token);
    let plane = PlaneMapModel::new(&token);
    let on_conic = |z: &ProjPoint2<Fp>| z.c[0].square().sub(&z.c[1].mul(&z.c[2])).is_zero();

    // μ restricts to the identity on the conic z₁² = z₂z₃.
    let mut fixed = 0;
    for v in 2..200u64 {
        let t = Fp::from_u64(v, p);
        let z = ProjPoint2::new([t, t.square(), token]).unwrap();
        assert!(on_conic(&z));
        let Ok(img) = mu_pointwise(&surface, &z) else {
            continue;
        };
        assert_eq!(img, z, "conic point not fixed at t={v}");
        fixed += 1;
        if fixed >= 20 {
            break;
        }
    }
    assert!(fixed >= 20);

    // μ maps the quartic Q₈ onto the conic.
    let mut mapped = 0;
    for v in 2..2000u64 {
        let z2 = Fp::from_u64(v, p);
        let z3 = Fp::from_u64(v * v + 17, p);
        let u = plane.q8.eval_except(0, &[token, z2, z3]);
        if u.degree() != Some(2) {
            continue;
        }
        let (a, b, c) = (u.coeff(2), u.coeff(1), u.coeff(0));
        let disc = b.square().sub(&a.mul(&c).mul(&token.from_i64(4)));
        let Some(d) = disc.sqrt() else { continue };
        let z1 = b.neg().add(&d).mul(&a.mul(&token.from_i64(2)).inv().unwrap());
        let z = ProjPoint2::new([z1, z2, z3]).unwrap();
        assert!(plane.q8.eval(&z.c).is_zero());
        let Ok(img) = mu_pointwise(&surface, &z) else {
            continue;
        };
        assert!(on_conic(&img), "Q₈ point maps off the conic at v={v}");
        mapped += 1;
        if mapped >= 20 {
            break;
        }
    }
    assert!(mapped >= 20);
}
