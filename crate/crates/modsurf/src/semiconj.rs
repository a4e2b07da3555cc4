//! The plane self-maps under the double covers: branch-curve
//! certification, the explicit n=7 map F = (Q₁:Q₂:Q₃) and its algebraic
//! identity, pointwise μ for both models, the commuting square, and
//! iterate degrees.

use crate::consts;
use crate::error::{Error, Result};
use crate::families::{y1_lifts, SurfaceModel, ZVARS};
use crate::mpoly::{gcd_q, parse_poly, MPoly, Mono};
use crate::projgeom::ProjPoint2;
use crate::scalar::{q_of, Fp, Scalar, Q};

/// The symbolic constants of the n=7 plane map and both branch loci.
pub struct PlaneMapModel<K: Scalar> {
    pub q: MPoly<K>,
    pub q1: MPoly<K>,
    pub q2: MPoly<K>,
    pub q3: MPoly<K>,
    pub r4: MPoly<K>,
    pub r7: MPoly<K>,
    pub q8: MPoly<K>,
}

fn parse3z<K: Scalar>(src: &str, token: &K) -> MPoly<K> {
    parse_poly(src, &ZVARS, token.clone()).expect("constant polynomial")
}

impl<K: Scalar> PlaneMapModel<K> {
    pub fn new(token: &K) -> Self {
        let q = parse3z(consts::Q_QUINTIC, token);
        let z1 = MPoly::var(3, 0, token.clone());
        PlaneMapModel {
            q1: z1.mul(&q),
            q,
            q2: parse3z(consts::Q2_SEXTIC, token),
            q3: parse3z(consts::Q3_SEXTIC, token),
            r4: parse3z(consts::R4_QUARTIC, token),
            r7: parse3z(consts::R7_SEPTIC, token),
            q8: parse3z(consts::Q8_QUARTIC, token),
        }
    }

    pub fn components(&self) -> [&MPoly<K>; 3] {
        [&self.q1, &self.q2, &self.q3]
    }

    /// Evaluate F at a point of ℙ²; all three components vanishing means
    /// an indeterminacy point.
    pub fn f_eval(&self, z: &ProjPoint2<K>) -> Result<ProjPoint2<K>> {
        let im: [K; 3] = std::array::from_fn(|i| self.components()[i].eval(&z.c));
        ProjPoint2::new(im).map_err(|_| Error::IndeterminacyPoint)
    }
}

/// Certificate for Q₁(Q₁,Q₂,Q₃) = Q₁·S² with S = z₂²(z₁−z₃)²·R₄·R₇:
/// the composed degree-36 polynomial and the right-hand side agree
/// exactly over ℚ.
pub struct SemiconjReport {
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub s_degree: u32,
}

/// The scalar-free square factor of the n=7 branch data: S = z₂²(z₁−z₃)²R₄R₇.
pub fn square_factor_s(model: &PlaneMapModel<Q>) -> MPoly<Q> {
    let token = q_of(1);
    let z1 = MPoly::var(3, 0, token.clone());
    let z2 = MPoly::var(3, 1, token.clone());
    let z3 = MPoly::var(3, 2, token);
    z2.pow(2).mul(&z1.sub(&z3).pow(2)).mul(&model.r4).mul(&model.r7)
}

/// The exact identity behind the semi-conjugacy: Q₁ pulled back along F
/// equals Q₁·S². (The printed prefactor of R normalizes S differently;
/// the identity certified here is scalar-free.)
pub fn verify_semiconjugacy_identity() -> Result<SemiconjReport> {
    let model = PlaneMapModel::new(&q_of(1));
    let inner = [model.q1.clone(), model.q2.clone(), model.q3.clone()];
    let lhs = model.q1.subst(&inner);
    let s = square_factor_s(&model);
    let rhs = model.q1.mul(&s.mul(&s));
    if lhs != rhs {
        return Err(Error::CertificationFailed(
            "Q1(Q1,Q2,Q3) != Q1*S^2".into(),
        ));
    }
    Ok(SemiconjReport {
        lhs_terms: lhs.num_terms(),
        rhs_terms: rhs.num_terms(),
        s_degree: s.degree().unwrap_or(0),
    })
}

/// Drop the (unused) first variable of a 4-variable polynomial, mapping
/// y₂,y₃,y₄ onto z₁,z₂,z₃.
pub fn drop_first_var<K: Scalar>(p: &MPoly<K>) -> MPoly<K> {
    let terms = p.terms().map(|(m, c)| {
        assert_eq!(m.0[0], 0, "polynomial still involves the dropped variable");
        (Mono([m.0[1], m.0[2], m.0[3], 0]), c.clone())
    });
    MPoly::from_terms(3, terms.collect::<Vec<_>>(), p.token().clone())
}

/// Certified branch data: the y₁-discriminant of the quartic equals
/// c·W·S² with W the published branch curve.
pub struct BranchData {
    pub w: MPoly<Q>,
    pub s: MPoly<Q>,
    pub c: Q,
}

pub fn branch_curve(n: usize) -> Result<BranchData> {
    let token = q_of(1);
    let surface = SurfaceModel::new(n, &token);
    let disc = drop_first_var(&surface.quartic.discriminant_wrt(0)?);
    let plane = PlaneMapModel::new(&token);
    let z1 = MPoly::var(3, 0, token.clone());
    let z2 = MPoly::var(3, 1, token.clone());
    let z3 = MPoly::var(3, 2, token.clone());
    let w = match n {
        7 => z1.mul(&plane.q),
        8 => z1.mul(&z1).sub(&z2.mul(&z3)).mul(&plane.q8),
        _ => unreachable!(),
    };
    let t = disc
        .exact_div(&w)
        .ok_or_else(|| Error::CertificationFailed("discriminant not divisible by W".into()))?;
    let c = t
        .leading()
        .map(|(_, c)| c.clone())
        .ok_or_else(|| Error::CertificationFailed("discriminant vanished".into()))?;
    let t1 = t.scale(&c.inv()?);
    let s = t1
        .poly_sqrt(|lead| if lead.is_one() { Some(lead.clone()) } else { None })
        .ok_or_else(|| Error::CertificationFailed("cofactor is not a perfect square".into()))?;
    // Re-certify by multiplication.
    if w.mul(&s.mul(&s)).scale(&c) != disc {
        return Err(Error::CertificationFailed("branch re-certification failed".into()));
    }
    Ok(BranchData { w, s, c })
}

/// The rational indeterminacy candidates q₀..q₅ of F; q₀ = (0:1:1) is a
/// node of L + B where F turns out to be defined, the other five are
/// true indeterminacy points.
pub fn f_indeterminacy_rational() -> [[i64; 3]; 6] {
    consts::F_INDET_RATIONAL
}

/// The indeterminacy point of F with cubic coordinates: over
/// ℚ(r), r³ − 4r² + 3r + 1 = 0, the point (−r² + 2r : r : 1); its
/// conjugates complete the indeterminacy locus.
pub fn f_indeterminacy_cubic_point() -> (crate::scalar::Ext<Q>, ProjPoint2<crate::scalar::Ext<Q>>) {
    let field = crate::scalar::ExtField::new(
        consts::F_INDET_CUBIC_MINPOLY.iter().map(|&c| q_of(c)).collect(),
    );
    let r = field.gen();
    let p = ProjPoint2::new([
        r.square().neg().add(&r.mul(&field.from_base(q_of(2)))),
        r.clone(),
        field.from_base(q_of(1)),
    ])
    .unwrap();
    (field.from_base(q_of(1)), p)
}

/// π from the node s₈ = (1:0:0:0): (y₁:y₂:y₃:y₄) ↦ (y₂:y₃:y₄), in chart
/// coordinates x ↦ (x₂ : x₃ : 1).
pub fn project_chart(x: &[Fp; 3]) -> ProjPoint2<Fp> {
    ProjPoint2::new([x[1], x[2], x[2].one()]).expect("affine chart point")
}

/// Pointwise μ on ℙ²: lift z through π, apply λ upstairs, project back.
/// When both lifts are in λ's domain their images must agree; the
/// common image is returned.
pub fn mu_pointwise(surface: &SurfaceModel<Fp>, z: &ProjPoint2<Fp>) -> Result<ProjPoint2<Fp>> {
    if !z.c[2].is_unit() {
        // The lift would leave the y₄ = 1 chart.
        return Err(Error::ChartSingular);
    }
    let inv = z.c[2].inv()?;
    let z_aff = [z.c[0].mul(&inv), z.c[1].mul(&inv), z.c[2].one()];
    let lifts = y1_lifts(surface, &z_aff).unwrap_or_default();
    if lifts.is_empty() {
        return Err(Error::NoLift);
    }
    let mut images: Vec<ProjPoint2<Fp>> = Vec::new();
    for y1 in lifts {
        let x = [y1, z_aff[0], z_aff[1]];
        if let Ok(img) = crate::dynamics::lambda_step(surface, &x) {
            images.push(project_chart(&img));
        }
    }
    match images.as_slice() {
        [] => Err(Error::DegenerateOperator {
            slot: 0,
            detail: "no lift is in the domain of the self-map".into(),
        }),
        [a] => Ok(a.clone()),
        [a, b] => {
            if a == b {
                Ok(a.clone())
            } else {
                Err(Error::CertificationFailed(
                    "the two lifts disagree under the self-map".into(),
                ))
            }
        }
        _ => unreachable!(),
    }
}

/// The commuting square at x: π(λ(x)) = F(π(x)).
pub fn commuting_square_check(
    surface: &SurfaceModel<Fp>,
    plane: &PlaneMapModel<Fp>,
    x: &[Fp; 3],
) -> Result<bool> {
    let down = plane.f_eval(&project_chart(x))?;
    let up = crate::dynamics::lambda_step(surface, x)?;
    Ok(project_chart(&up) == down)
}

/// Degree of the reduced k-th iterate of F over ℚ, k ≤ 3: compose,
/// strip the common gcd of the three components, read the degree.
pub fn iterate_degree(k: usize) -> Result<u32> {
    assert!((1..=3).contains(&k));
    let model = PlaneMapModel::new(&q_of(1));
    let mut comps = [model.q1.clone(), model.q2.clone(), model.q3.clone()];
    for _ in 1..k {
        let next = std::array::from_fn(|i| comps[i].subst(&[
            model.q1.clone(),
            model.q2.clone(),
            model.q3.clone(),
        ]));
        comps = next;
        let g = gcd_q(&gcd_q(&comps[0], &comps[1]), &comps[2]);
        comps = std::array::from_fn(|i| {
            comps[i].exact_div(&g).expect("gcd divides every component")
        });
    }
    Ok(comps[0].degree().unwrap_or(0))
}
