//! Weierstrass models over ℚ(t): invariants, the chord–tangent group
//! law, torsion order, Δ-valuation fiber profiles, and the two model
//! identifications for n = 8.

use crate::consts;
use crate::error::{Error, Result};
use crate::mpoly::{parse_poly, MPoly, Mono};
use crate::scalar::{q_of, q_ratio, RatFun, Scalar, UPoly, Q};

pub type RQ = RatFun<Q>;

fn upoly_from_str(src: &str) -> UPoly<Q> {
    let m = parse_poly(src, &["t"], q_of(1)).expect("constant polynomial");
    let coeffs = m
        .coeffs_wrt(0)
        .into_iter()
        .map(|c| c.as_constant().expect("univariate in t"))
        .collect();
    UPoly::new(coeffs, q_of(1))
}

pub fn ratfun_from_strs(num: &str, den: &str) -> RQ {
    RatFun::new(upoly_from_str(num), upoly_from_str(den)).expect("nonzero denominator")
}

/// Substitute a rational function for the variable: f ↦ f∘g.
pub fn compose_ratfun(f: &RQ, g: &RQ) -> RQ {
    let horner = |p: &UPoly<Q>| -> RQ {
        let mut acc = RatFun::constant(q_of(0));
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(g).add(&RatFun::constant(c.clone()));
        }
        acc
    };
    horner(f.numer())
        .div(&horner(f.denom()))
        .expect("denominator composes to a nonzero rational function")
}

/// y² = x³ + a₂x² + a₄x + a₆ over ℚ(t).
#[derive(Clone, Debug)]
pub struct WeierstrassModel {
    pub a2: RQ,
    pub a4: RQ,
    pub a6: RQ,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CurvePoint {
    Infinity,
    Affine(RQ, RQ),
}

impl WeierstrassModel {
    pub fn new(a2: RQ, a4: RQ, a6: RQ) -> Self {
        WeierstrassModel { a2, a4, a6 }
    }

    pub fn from_consts(n: usize) -> Self {
        let rows = match n {
            7 => &consts::E7_COEFFS,
            8 => &consts::E8_COEFFS,
            _ => panic!("n must be 7 or 8"),
        };
        let mut it = rows.iter().map(|[num, den]| ratfun_from_strs(num, den));
        WeierstrassModel::new(it.next().unwrap(), it.next().unwrap(), it.next().unwrap())
    }

    pub fn c4(&self) -> RQ {
        // b₂ = 4a₂, b₄ = 2a₄ (a₁ = a₃ = 0).
        let c = |n: i64| RatFun::constant(q_of(n));
        self.a2.mul(&self.a2).mul(&c(16)).sub(&self.a4.mul(&c(48)))
    }

    pub fn c6(&self) -> RQ {
        let c = |n: i64| RatFun::constant(q_of(n));
        self.a2
            .mul(&self.a2)
            .mul(&self.a2)
            .mul(&c(-64))
            .add(&self.a2.mul(&self.a4).mul(&c(288)))
            .sub(&self.a6.mul(&c(864)))
    }

    pub fn discriminant(&self) -> RQ {
        let c4 = self.c4();
        let c6 = self.c6();
        let num = c4.mul(&c4).mul(&c4).sub(&c6.mul(&c6));
        num.div(&RatFun::constant(q_of(1728))).unwrap()
    }

    pub fn j_invariant(&self) -> RQ {
        let c4 = self.c4();
        c4.mul(&c4).mul(&c4).div(&self.discriminant()).expect("Δ ≠ 0")
    }

    pub fn on_curve(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => {
                let rhs = x
                    .mul(x)
                    .mul(x)
                    .add(&self.a2.mul(x).mul(x))
                    .add(&self.a4.mul(x))
                    .add(&self.a6);
                y.mul(y) == rhs
            }
        }
    }

    pub fn negate(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x.clone(), y.neg()),
        }
    }

    /// Chord–tangent addition.
    pub fn add_points(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let two = RatFun::constant(q_of(2));
        let three = RatFun::constant(q_of(3));
        let slope = if x1 == x2 {
            if y1.add(y2).numer().is_zero() {
                return CurvePoint::Infinity;
            }
            // Tangent: (3x² + 2a₂x + a₄) / 2y.
            x1.mul(x1)
                .mul(&three)
                .add(&self.a2.mul(x1).mul(&two))
                .add(&self.a4)
                .div(&y1.mul(&two))
                .expect("2y ≠ 0 off the two-torsion")
        } else {
            y2.sub(y1).div(&x2.sub(x1)).unwrap()
        };
        let x3 = slope.mul(&slope).sub(&self.a2).sub(x1).sub(x2);
        let y3 = slope.mul(&x1.sub(&x3)).sub(y1);
        CurvePoint::Affine(x3, y3)
    }

    pub fn scalar_mul(&self, k: usize, p: &CurvePoint) -> CurvePoint {
        let mut acc = CurvePoint::Infinity;
        for _ in 0..k {
            acc = self.add_points(&acc, p);
        }
        acc
    }

    /// The least k ≤ bound with [k]P = O, or None.
    pub fn point_order(&self, p: &CurvePoint, bound: usize) -> Option<usize> {
        let mut acc = CurvePoint::Infinity;
        for k in 1..=bound {
            acc = self.add_points(&acc, p);
            if acc == CurvePoint::Infinity {
                return Some(k);
            }
        }
        None
    }
}

/// The published torsion generator p_t of E₇, as an affine point.
pub fn e7_torsion_point() -> CurvePoint {
    let [x, y] = &consts::E7_TORSION_POINT;
    CurvePoint::Affine(ratfun_from_strs(x[0], x[1]), ratfun_from_strs(y[0], y[1]))
}

/// Valuation of a rational function at the finite place given by an
/// irreducible monic-able polynomial.
pub fn ord_at(f: &RQ, place: &UPoly<Q>) -> i64 {
    f.numer().factor_multiplicity(place) as i64 - f.denom().factor_multiplicity(place) as i64
}

/// Valuation at ∞ = degree defect.
pub fn ord_inf(f: &RQ) -> i64 {
    f.denom().degree().unwrap_or(0) as i64 - f.numer().degree().map_or(0, |d| d as i64)
}

/// One entry of a Δ-valuation profile: the place label, the multiplicity
/// with which Δ vanishes there (after minimal-model normalization), and
/// the residue degree of the place.
#[derive(Clone, Debug)]
pub struct FiberEntry {
    pub place: String,
    pub order: i64,
    pub degree: usize,
}

fn normalize_min_model(mut v: i64) -> i64 {
    // Negative valuations of the chart discriminant correspond to a
    // non-minimal model at the place; twisting by multiples of 12 makes
    // them minimal.
    while v < 0 {
        v += 12;
    }
    v
}

/// The Δ-valuation profile of a model at a designated list of places
/// (plus ∞). Irreducible factors are reported whole with their degree.
pub fn fiber_profile(n: usize) -> Vec<FiberEntry> {
    let e = WeierstrassModel::from_consts(n);
    let delta = e.discriminant();
    let linear = |r: Q| UPoly::new(vec![r.neg(), q_of(1)], q_of(1));
    let from_coeffs = |cs: &[i64]| UPoly::new(cs.iter().map(|&c| q_of(c)).collect(), q_of(1));
    let places: Vec<(String, UPoly<Q>)> = match n {
        7 => vec![
            ("t".into(), linear(q_of(0))),
            ("t+1".into(), linear(q_of(-1))),
            ("t^3-5t^2-8t-1".into(), from_coeffs(&consts::E7_FIBER_CUBIC)),
        ],
        8 => vec![
            ("t-1".into(), linear(q_of(1))),
            ("t".into(), linear(q_of(0))),
            ("t-1/2".into(), linear(q_ratio(1, 2))),
            ("4t^2-4t-1".into(), from_coeffs(&consts::E8_FIBER_QUADRATIC)),
        ],
        _ => panic!("n must be 7 or 8"),
    };
    let mut out = Vec::new();
    for (label, poly) in places {
        out.push(FiberEntry {
            place: label,
            order: normalize_min_model(ord_at(&delta, &poly)),
            degree: poly.degree().unwrap(),
        });
    }
    out.push(FiberEntry {
        place: "inf".into(),
        order: normalize_min_model(ord_inf(&delta)),
        degree: 1,
    });
    out
}

/// Σ (order · residue degree) over the profile — 24 for a K3 elliptic
/// fibration.
pub fn profile_total(profile: &[FiberEntry]) -> i64 {
    profile.iter().map(|e| e.order * e.degree as i64).sum()
}

/// j(E₈)(½(1−1/t)) = j(E′)(t) with E′: η² = ξ³ + (2−s²)ξ² + ξ,
/// s = 2t²/(t²−1).
pub fn j_identity_check_8() -> bool {
    let e8 = WeierstrassModel::from_consts(8);
    // ½(1 − 1/t) = (t−1)/(2t).
    let subst = ratfun_from_strs("t-1", "2*t");
    let lhs = compose_ratfun(&e8.j_invariant(), &subst);
    let s = ratfun_from_strs(consts::E8_S_SUBST[0], consts::E8_S_SUBST[1]);
    let one = RatFun::constant(q_of(1));
    let two = RatFun::constant(q_of(2));
    let eprime = WeierstrassModel::new(two.sub(&s.mul(&s)), one, RatFun::constant(q_of(0)));
    lhs == eprime.j_invariant()
}

/// Fold the trailing t-variable of a 3-variable polynomial over ℚ into
/// ℚ(t) coefficients on the remaining two variables.
fn fold_t(p: &MPoly<Q>) -> MPoly<RQ> {
    let token = RatFun::constant(q_of(1));
    let t = RatFun::var(q_of(1));
    let terms: Vec<(Mono, RQ)> = p
        .terms()
        .map(|(m, c)| {
            let mut coeff = RatFun::constant(c.clone());
            for _ in 0..m.0[2] {
                coeff = coeff.mul(&t);
            }
            (Mono([m.0[0], m.0[1], 0, 0]), coeff)
        })
        .collect();
    MPoly::from_terms(2, terms, token)
}

/// Substituting (X, 1+t(Y−1), Y, 1) into the Z₈ quartic must equal the
/// printed cubic affine model times a cofactor; returns the cofactor.
pub fn cubic_model_check_8() -> Result<MPoly<RQ>> {
    let token = RatFun::constant(q_of(1));
    let quartic: MPoly<RQ> =
        parse_poly(consts::Z8_QUARTIC, &crate::families::YVARS, token.clone())
            .expect("constant polynomial");
    let x_var = MPoly::var(2, 0, token.clone());
    let y_var = MPoly::var(2, 1, token.clone());
    let one = MPoly::constant(2, token.clone());
    let t_const = MPoly::constant(2, RatFun::var(q_of(1)));
    // y₂ = 1 + t(Y − 1)
    let y2 = one.add(&t_const.mul(&y_var.sub(&one)));
    let lhs = quartic.subst(&[x_var, y2, y_var, one.clone()]);
    let cubic3: MPoly<Q> = parse_poly(consts::E8_CUBIC_MODEL, &["X", "Y", "t"], q_of(1))
        .expect("constant polynomial");
    let cubic = fold_t(&cubic3);
    let cof = lhs
        .exact_div(&cubic)
        .ok_or_else(|| Error::CertificationFailed("cubic model does not divide".into()))?;
    if cof.is_zero() {
        return Err(Error::CertificationFailed("zero cofactor".into()));
    }
    Ok(cof)
}
