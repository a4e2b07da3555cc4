//! Example-driven checks of the surface models: special points, lines on
//! the quartics, excluded loci, automorphism divisibility, enumeration,
//! and the degenerate cases of the operators.

use modsurf::arrangements::{labeled_lambda7, labeled_lambda8, LabeledArrangement};
use modsurf::dynamics::{degree_estimate, lambda_step};
use modsurf::error::Error;
use modsurf::families::{
    enumerate_surface_points, excluded_locus_member, lambda7_fixed_point, lambda7_period2_point,
    lambda8_base_i, lambda8_base_rational, lambda8_base_sqrt2, mu8_indeterminacy_rational,
    mu8_indeterminacy_sqrt2, x_star_7, z8_lines, SurfaceModel,
};
use modsurf::matroids::{matroid_m8, Rank3Matroid};
use modsurf::mpoly::MPoly;
use modsurf::projgeom::{ProjLine2, ProjPoint2, ProjPoint3};
use modsurf::scalar::{q_of, ExtField, Fp, Scalar, Q};
use modsurf::semiconj::{mu_pointwise, PlaneMapModel};

fn sqrt2_field() -> std::sync::Arc<ExtField<Q>> {
    ExtField::new(vec![q_of(-2), q_of(0), q_of(1)])
}

fn i_field() -> std::sync::Arc<ExtField<Q>> {
    ExtField::new(vec![q_of(1), q_of(0), q_of(1)])
}

#[test]
fn surface_eval_special_points() {
    let q7: SurfaceModel<Q> = SurfaceModel::new(7, &q_of(1));
    let xs = x_star_7();
    assert!(q7
        .surface_eval(&[xs[0].clone(), xs[1].clone(), xs[2].clone(), q_of(1)])
        .is_zero());
    // (1:1:0:0): only the y₁²y₂² term survives.
    assert_eq!(q7.surface_eval(&[q_of(1), q_of(1), q_of(0), q_of(0)]), q_of(1));
    let p = 1013;
    let t = Fp::new(1, p);
    let q8 = SurfaceModel::new(8, &t);
    assert!(q8
        .surface_eval(&[Fp::new(794, p), Fp::new(582, p), Fp::new(116, p), t])
        .is_zero());
}

#[test]
fn singular_points_annihilate_quartic_and_gradient() {
    for n in [7usize, 8] {
        let model: SurfaceModel<Q> = SurfaceModel::new(n, &q_of(1));
        assert_eq!(model.sing.len(), if n == 7 { 8 } else { 6 });
        for s in &model.sing {
            assert!(model.surface_eval(&s.c).is_zero(), "n={n} {s:?}");
            for v in 0..4 {
                assert!(
                    model.quartic.derivative(v).eval(&s.c).is_zero(),
                    "n={n} ∂{v} {s:?}"
                );
            }
        }
    }
}

#[test]
fn sigma_actions_preserve_quartic() {
    // quartic ∘ σᵢ is divisible by the quartic, so σᵢ maps Z₇ to itself.
    let model: SurfaceModel<Q> = SurfaceModel::new(7, &q_of(1));
    for sigma in &model.sigma_polys {
        let composed = model.quartic.subst(sigma);
        let cof = composed.exact_div(&model.quartic);
        assert!(cof.is_some());
        assert!(!cof.unwrap().is_zero());
    }
}

#[test]
fn sigma_fixed_singularities_are_polynomial_indeterminacies() {
    // σ₁ fixes s₅ = (0:1:0:0) and σ₂ fixes the A₃ point (0:1:0:1); at
    // both, every component of the printed polynomial quadruple
    // vanishes, so the fixed points are seen as indeterminacy of the
    // polynomial lift rather than as eigenvectors.
    let model: SurfaceModel<Q> = SurfaceModel::new(7, &q_of(1));
    let s5 = [q_of(0), q_of(1), q_of(0), q_of(0)];
    assert!(model
        .sigma_polynomial_action(1, &s5)
        .iter()
        .all(|v| v.is_zero()));
    let a3 = [q_of(0), q_of(1), q_of(0), q_of(1)];
    assert!(model
        .sigma_polynomial_action(2, &a3)
        .iter()
        .all(|v| v.is_zero()));
}

#[test]
fn z8_contains_its_eight_lines() {
    let model: SurfaceModel<Q> = SurfaceModel::new(8, &q_of(1));
    let token = q_of(1);
    for pair in z8_lines() {
        // Coefficient vectors of the two linear forms.
        let coeffs = |f: &MPoly<Q>| -> [Q; 4] {
            std::array::from_fn(|i| {
                let e: [Q; 4] = std::array::from_fn(|j| if i == j { q_of(1) } else { q_of(0) });
                f.eval(&e)
            })
        };
        let a = coeffs(&pair[0]);
        let b = coeffs(&pair[1]);
        // Two independent solutions of a·y = b·y = 0 by elimination.
        let basis = nullspace2(&a, &b);
        // Parametrize y = s·P + u·Q and restrict the quartic.
        let args: [MPoly<Q>; 4] = std::array::from_fn(|i| {
            MPoly::var(4, 0, token.clone())
                .scale(&basis[0][i])
                .add(&MPoly::var(4, 1, token.clone()).scale(&basis[1][i]))
        });
        let restricted = model.quartic.subst(&args);
        assert!(restricted.is_zero(), "line {:?} not on Z8", pair);
    }
}

/// Basis of the 2-dimensional solution space of two independent linear
/// forms on ℚ⁴, by Gaussian elimination.
fn nullspace2(a: &[Q; 4], b: &[Q; 4]) -> [[Q; 4]; 2] {
    let mut rows = vec![a.clone(), b.clone()];
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..4 {
        if r >= rows.len() {
            break;
        }
        if let Some(k) = (r..rows.len()).find(|&k| !rows[k][col].is_zero()) {
            rows.swap(r, k);
            let inv = rows[r][col].inv().unwrap();
            for c in 0..4 {
                rows[r][c] = rows[r][c].mul(&inv);
            }
            for k in 0..rows.len() {
                if k != r && !rows[k][col].is_zero() {
                    let f = rows[k][col].clone();
                    for c in 0..4 {
                        rows[k][c] = rows[k][c].sub(&f.mul(&rows[r][c]));
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
    }
    assert_eq!(pivots.len(), 2, "forms are not independent");
    let free: Vec<usize> = (0..4).filter(|c| !pivots.contains(c)).collect();
    let mut out: Vec<[Q; 4]> = Vec::new();
    for &fc in &free {
        let mut v: [Q; 4] = std::array::from_fn(|_| q_of(0));
        v[fc] = q_of(1);
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[ri][fc].neg();
        }
        out.push(v);
    }
    [out[0].clone(), out[1].clone()]
}

#[test]
fn excluded_locus_membership() {
    // The coordinate point (0:0:1:0) lies on several of the catalogued
    // lines (every pair of forms among y₁, y₂, y₄ vanishes there).
    let p = ProjPoint3::new([q_of(0), q_of(0), q_of(1), q_of(0)]).unwrap();
    let hits = excluded_locus_member(&p);
    assert!(!hits.is_empty(), "coordinate point must hit catalogued lines");
    // A point with y₂+y₃−y₄ = 0 and y₁y₃−y₃²−y₁y₄ = 0 is on the conic:
    // take y₃ = t, y₄ = y₂+t and solve the quadric for y₁.
    // With y₂ = 1, y₃ = 1, y₄ = 2: y₁·1 − 1 − 2y₁ = −y₁ − 1 = 0 → y₁ = −1.
    let c = ProjPoint3::new([q_of(-1), q_of(1), q_of(1), q_of(2)]).unwrap();
    assert!(excluded_locus_member(&c).contains(&"conic".to_string()));
    // A generic realizable surface point hits nothing.
    let xs = x_star_7();
    let g = ProjPoint3::new([xs[0].clone(), xs[1].clone(), xs[2].clone(), q_of(1)]).unwrap();
    assert!(excluded_locus_member(&g).is_empty());
}

#[test]
fn enumeration_matches_brute_force() {
    for (n, p) in [(7usize, 11u64), (8, 13)] {
        let pts = enumerate_surface_points(n, p).unwrap();
        let token = Fp::new(1, p);
        let model = SurfaceModel::new(n, &token);
        for y in &pts {
            assert!(model.surface_eval(&y.c).is_zero());
        }
        // Independent O(p³) scan over canonical ℙ³ representatives.
        let f = |v: u64| Fp::from_u64(v, p);
        let mut count = 0usize;
        let mut reps: Vec<[Fp; 4]> = Vec::new();
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    reps.push([f(1), f(b), f(c), f(d)]);
                }
            }
        }
        for c in 0..p {
            for d in 0..p {
                reps.push([f(0), f(1), f(c), f(d)]);
            }
        }
        for d in 0..p {
            reps.push([f(0), f(0), f(1), f(d)]);
        }
        reps.push([f(0), f(0), f(0), f(1)]);
        for y in reps {
            if model.surface_eval(&y).is_zero() {
                count += 1;
            }
        }
        assert_eq!(pts.len(), count, "n={n} p={p}");
    }
}

#[test]
fn generic_lines_make_the_operators_degenerate() {
    let p = 101;
    let f = |v: i64| Fp::new(v, p);
    // Deterministic "random" normals with no special incidences.
    let mk = |n: usize, salt: i64| -> LabeledArrangement<Fp> {
        let lines = (0..n)
            .map(|k| {
                let k = k as i64;
                ProjLine2::new([f(1), f(3 * k + salt + 7), f(k * k * k + 2 * salt + 13)]).unwrap()
            })
            .collect();
        LabeledArrangement::new(lines).unwrap()
    };
    assert!(matches!(
        labeled_lambda7(&mk(7, 1)),
        Err(Error::DegenerateOperator { .. })
    ));
    assert!(matches!(
        labeled_lambda8(&mk(8, 2)),
        Err(Error::DegenerateOperator { .. })
    ));
}

#[test]
fn octagon_base_point_breaks_the_matroid() {
    // Over ℚ(√2) the regular-octagon point satisfies the surface
    // equation, but the realization degenerates (the mirrors acquire a
    // central concurrency), so the matroid strictly exceeds M₈.
    let field = sqrt2_field();
    let one = field.from_base(q_of(1));
    let model = SurfaceModel::new(8, &one);
    let m8 = matroid_m8();
    for y in lambda8_base_sqrt2(&field.gen()) {
        assert!(model.surface_eval(&y).is_zero());
        let x = [y[0].clone(), y[1].clone(), y[2].clone()];
        match model.union_realization(&x) {
            Err(_) => {}
            Ok(union) => {
                let m = Rank3Matroid::from_arrangement(&union);
                assert!(m8.refines(&m) && m.nonbases.len() > m8.nonbases.len());
            }
        }
        // Either way, λ is undefined there.
        assert!(lambda_step(&model, &x).is_err());
    }
    // Same picture over 𝔽₇, where √2 = 3.
    let p = 7;
    let t7 = Fp::new(1, p);
    let model7 = SurfaceModel::new(8, &t7);
    for y in lambda8_base_sqrt2(&Fp::new(3, p)) {
        assert!(model7.surface_eval(&y).is_zero());
        let x = [y[0], y[1], y[2]];
        if let Ok(union) = model7.union_realization(&x) {
            let m = Rank3Matroid::from_arrangement(&union);
            assert!(m8.refines(&m) && m.nonbases.len() > m8.nonbases.len());
        }
        assert!(lambda_step(&model7, &x).is_err());
    }
}

#[test]
fn remaining_lambda8_base_points() {
    // The three rational base points are on Z₈; the two chart-reachable
    // ones are outside λ's domain.
    let token = q_of(1);
    let model: SurfaceModel<Q> = SurfaceModel::new(8, &token);
    for y in lambda8_base_rational() {
        assert!(model.surface_eval(&y).is_zero());
        if y[3].is_one() {
            let x = [y[0].clone(), y[1].clone(), y[2].clone()];
            assert!(lambda_step(&model, &x).is_err());
        }
    }
    // The (±i : 0 : 1 : 1) pair over ℚ(i).
    let field = i_field();
    let one = field.from_base(q_of(1));
    let mi = SurfaceModel::new(8, &one);
    for y in lambda8_base_i(&field.gen()) {
        assert!(mi.surface_eval(&y).is_zero());
        let x = [y[0].clone(), y[1].clone(), y[2].clone()];
        assert!(lambda_step(&mi, &x).is_err());
    }
}

#[test]
fn excluded_genus1_point_kills_the_operator() {
    // A point on the sample genus-one curve E ⊂ Z₇∖R₇ over 𝔽₁₀₁: the
    // C₁ family there has t₂=6, t₃=5 and the unlabeled Λ_{{2},{3}}
    // produces no line at all.
    let p = 101;
    let f = |v: i64| Fp::new(v, p);
    let token = f(1);
    let model = SurfaceModel::new(7, &token);
    let q1 = |y: &[Fp; 4]| {
        // y₁² − 2y₁y₃ + y₃² − y₁y₄
        y[0].square()
            .sub(&f(2).mul(&y[0]).mul(&y[2]))
            .add(&y[2].square())
            .sub(&y[0].mul(&y[3]))
    };
    let mut tested = 0;
    'outer: for b in 1..p {
        for c in 1..p {
            let y2 = Fp::from_u64(b, p);
            let y3 = Fp::from_u64(c, p);
            // Second quadric with y₄=1: y₂²+y₂y₃+y₁−y₃−1 = 0.
            let y1 = y3.add(&f(1)).sub(&y2.square()).sub(&y2.mul(&y3));
            let y = [y1, y2, y3, f(1)];
            if !q1(&y).is_zero() {
                continue;
            }
            // The curve lies on the surface.
            assert!(model.surface_eval(&y).is_zero());
            let Ok((_, c1)) = model.parametrized_realization(&[y1, y2, y3]) else {
                continue;
            };
            let t = c1.t_vector().unwrap();
            if t.get(&2) != Some(&6) {
                // The curve meets other excluded components at finitely
                // many points; skip those.
                continue;
            }
            assert_eq!(t.get(&3), Some(&5));
            let lines = c1.lambda_operator(&[2], &[3]).unwrap();
            assert!(lines.is_empty(), "Λ(C₁) nonempty at {y:?}");
            tested += 1;
            if tested >= 5 {
                break 'outer;
            }
        }
    }
    assert!(tested >= 5, "only {tested} genus-one sample points found");
}

#[test]
fn lambda7_special_points_through_the_plane_map() {
    // The λ-fixed points (w+1:−w:w:1), w²+w+1=0, and the period-2
    // points (r²+1:r²−r+2:r:1) are outside R₇, so they are checked
    // through the semi-conjugate plane map F on π(x) = (y₂:y₃:y₄).
    let (tw, yw) = lambda7_fixed_point();
    let fw = PlaneMapModel::new(&tw);
    let zw = ProjPoint2::new([yw[1].clone(), yw[2].clone(), yw[3].clone()]).unwrap();
    assert_eq!(fw.f_eval(&zw).unwrap(), zw);

    let (tr, yr) = lambda7_period2_point();
    let fr = PlaneMapModel::new(&tr);
    let zr = ProjPoint2::new([yr[1].clone(), yr[2].clone(), yr[3].clone()]).unwrap();
    let img = fr.f_eval(&zr).unwrap();
    assert_ne!(img, zr);
    assert_eq!(fr.f_eval(&img).unwrap(), zr);
}

#[test]
fn f_maps_quintic_onto_line_and_contracts_curves() {
    let token = q_of(1);
    let m = PlaneMapModel::new(&token);
    // Symbolically: on z₂ = 0, F = (1:0:1)·z₁²z₃²(z₁−z₃)², the point q₂.
    let zero = MPoly::zero(3, token.clone());
    let z1 = MPoly::var(3, 0, token.clone());
    let z3 = MPoly::var(3, 2, token.clone());
    let on_z2 = [z1.clone(), zero.clone(), z3.clone()];
    assert!(m.q2.subst(&on_z2).is_zero());
    assert_eq!(m.q1.subst(&on_z2), m.q3.subst(&on_z2));
    assert!(!m.q1.subst(&on_z2).is_zero());
    // On z₁ = z₃, F is proportional to q₄ = (−1:1:0).
    let z2 = MPoly::var(3, 1, token.clone());
    let on_diag = [z3.clone(), z2.clone(), z3.clone()];
    assert!(m.q3.subst(&on_diag).is_zero());
    assert_eq!(m.q1.subst(&on_diag).neg(), m.q2.subst(&on_diag));
    assert!(!m.q1.subst(&on_diag).is_zero());

    // Sampled: B = {Q = 0} maps into L = {z₁ = 0}, and R₄ = 0 maps to q₂.
    let p = 101;
    let fpt = Fp::new(1, p);
    let mp = PlaneMapModel::new(&fpt);
    let q2_img = ProjPoint2::new([Fp::new(1, p), Fp::new(0, p), Fp::new(1, p)]).unwrap();
    let (mut on_b, mut on_r4) = (0, 0);
    for a in 0..p {
        for b in 0..p {
            let z = [Fp::from_u64(a, p), Fp::from_u64(b, p), fpt];
            let zp = ProjPoint2::new(z).unwrap();
            if mp.q.eval(&z).is_zero() && on_b < 20 {
                if let Ok(img) = mp.f_eval(&zp) {
                    assert!(img.c[0].is_zero(), "B point maps off L at {z:?}");
                    on_b += 1;
                }
            }
            if mp.r4.eval(&z).is_zero() && on_r4 < 20 {
                if let Ok(img) = mp.f_eval(&zp) {
                    assert_eq!(img, q2_img, "R4 point not contracted to q2 at {z:?}");
                    on_r4 += 1;
                }
            }
        }
    }
    assert!(on_b >= 20 && on_r4 >= 20, "samples: B {on_b}, R4 {on_r4}");
}

#[test]
fn mu8_indeterminacy_points_fail_pointwise() {
    // 𝔽₁₀₃ contains √2 = 38 (38² = 1444 ≡ 2), so all nine printed
    // indeterminacy points of μ₈ are rational there; the pointwise μ
    // procedure must fail at each.
    let p = 103;
    let token = Fp::new(1, p);
    assert_eq!(Fp::new(38, p).square(), Fp::new(2, p));
    let model = SurfaceModel::new(8, &token);
    let mut pts: Vec<[Fp; 3]> = mu8_indeterminacy_rational()
        .iter()
        .map(|v| v.map(|c| Fp::new(c, p)))
        .collect();
    pts.extend(mu8_indeterminacy_sqrt2(&Fp::new(38, p)));
    assert_eq!(pts.len(), 9);
    for z in pts {
        let zp = ProjPoint2::new(z).unwrap();
        assert!(
            mu_pointwise(&model, &zp).is_err(),
            "mu defined at printed indeterminacy point {zp:?}"
        );
    }
}

#[test]
fn degree_histogram_partitions_domain() {
    let (n, p) = (7usize, 11u64);
    let (hist, _) = degree_estimate(n, p).unwrap();
    let total: usize = hist.iter().map(|(&sz, &count)| sz * count).sum();
    // Independent count of chart points where λ is defined.
    let token = Fp::new(1, p);
    let model = SurfaceModel::new(n, &token);
    let mut domain = 0usize;
    for y in enumerate_surface_points(n, p).unwrap() {
        if !y.c[3].is_unit() {
            continue;
        }
        let inv = y.c[3].inv().unwrap();
        let x = [y.c[0].mul(&inv), y.c[1].mul(&inv), y.c[2].mul(&inv)];
        if lambda_step(&model, &x).is_ok() {
            domain += 1;
        }
    }
    assert_eq!(total, domain);
}
