//! The two quartic surface models, their parametrized families of line
//! arrangements C₀(x), C₁(x), the polynomial automorphism actions, and
//! point enumeration over prime fields.

use crate::arrangements::LabeledArrangement;
use crate::consts;
use crate::error::{Error, Result};
use crate::mpoly::{parse_poly, MPoly};
use crate::projgeom::{ProjLine2, ProjPoint3};
use crate::scalar::{q_from_str, q_of, Fp, Scalar, Q};

pub const YVARS: [&str; 4] = ["y1", "y2", "y3", "y4"];
pub const XVARS: [&str; 3] = ["x1", "x2", "x3"];
pub const ZVARS: [&str; 3] = ["z1", "z2", "z3"];

fn parse4<K: Scalar>(src: &str, token: &K) -> MPoly<K> {
    parse_poly(src, &YVARS, token.clone()).expect("constant polynomial")
}

fn parse3x<K: Scalar>(src: &str, token: &K) -> MPoly<K> {
    parse_poly(src, &XVARS, token.clone()).expect("constant polynomial")
}

/// One of the two surface models (n = 7 or 8): the quartic, its singular
/// points, the two parametrized line families, and (for n = 7) the
/// polynomial actions of the automorphisms σ₁, σ₂.
pub struct SurfaceModel<K: Scalar> {
    pub n: usize,
    token: K,
    pub quartic: MPoly<K>,
    pub sing: Vec<ProjPoint3<K>>,
    pub c0: Vec<[MPoly<K>; 3]>,
    pub c1: Vec<[MPoly<K>; 3]>,
    /// n = 7 only: [σ₁, σ₂] as degree-4 / degree-3 maps of ℙ³.
    pub sigma_polys: Vec<[MPoly<K>; 4]>,
}

impl<K: Scalar> SurfaceModel<K> {
    pub fn new(n: usize, token: &K) -> Self {
        let (quartic_src, sing_src, c0_src, c1_src): (&str, &[[i64; 4]], &[[&str; 3]], &[[&str; 3]]) =
            match n {
                7 => (consts::Z7_QUARTIC, &consts::Z7_SING, &consts::C0_7, &consts::C1_7),
                8 => (consts::Z8_QUARTIC, &consts::Z8_SING, &consts::C0_8, &consts::C1_8),
                _ => panic!("n must be 7 or 8"),
            };
        let parse_family = |rows: &[[&str; 3]]| -> Vec<[MPoly<K>; 3]> {
            rows.iter()
                .map(|r| std::array::from_fn(|i| parse3x(r[i], token)))
                .collect()
        };
        let sing = sing_src
            .iter()
            .map(|v| {
                ProjPoint3::new(std::array::from_fn(|i| token.from_i64(v[i]))).expect("constant")
            })
            .collect();
        let sigma_polys = if n == 7 {
            vec![
                std::array::from_fn(|i| parse4(consts::SIGMA1_POLY[i], token)),
                std::array::from_fn(|i| parse4(consts::SIGMA2_POLY[i], token)),
            ]
        } else {
            Vec::new()
        };
        SurfaceModel {
            n,
            token: token.clone(),
            quartic: parse4(quartic_src, token),
            sing,
            c0: parse_family(c0_src),
            c1: parse_family(c1_src),
            sigma_polys,
        }
    }

    pub fn token(&self) -> &K {
        &self.token
    }

    pub fn surface_eval(&self, y: &[K; 4]) -> K {
        self.quartic.eval(y)
    }

    /// The affine chart embedding x ↦ (x₁ : x₂ : x₃ : 1).
    pub fn chart_point(&self, x: &[K; 3]) -> ProjPoint3<K> {
        ProjPoint3::new([x[0].clone(), x[1].clone(), x[2].clone(), self.token.one()])
            .expect("chart point is never the zero vector")
    }

    /// Evaluate both families at a chart point. `DegenerateRealization`
    /// when a normal vector vanishes or two lines coincide.
    pub fn parametrized_realization(
        &self,
        x: &[K; 3],
    ) -> Result<(LabeledArrangement<K>, LabeledArrangement<K>)> {
        let eval_family = |fam: &[[MPoly<K>; 3]]| -> Result<LabeledArrangement<K>> {
            let lines: Vec<ProjLine2<K>> = fam
                .iter()
                .map(|row| {
                    ProjLine2::new(std::array::from_fn(|i| row[i].eval(x)))
                        .map_err(|_| Error::DegenerateRealization)
                })
                .collect::<Result<_>>()?;
            LabeledArrangement::new(lines).map_err(|_| Error::DegenerateRealization)
        };
        Ok((eval_family(&self.c0)?, eval_family(&self.c1)?))
    }

    /// The union C₀(x) ∪ C₁(x) with C₀ labeled first.
    pub fn union_realization(&self, x: &[K; 3]) -> Result<LabeledArrangement<K>> {
        let (c0, c1) = self.parametrized_realization(x)?;
        c0.concat(&c1).map_err(|_| Error::DegenerateRealization)
    }

    /// Apply σ_which (1 or 2; n = 7 only) to a point of ℙ³ by the
    /// published polynomial formulas. The result can be the zero vector
    /// on the indeterminacy locus.
    pub fn sigma_polynomial_action(&self, which: usize, y: &[K; 4]) -> [K; 4] {
        assert!(self.n == 7 && (which == 1 || which == 2));
        std::array::from_fn(|i| self.sigma_polys[which - 1][i].eval(y))
    }
}

/// The values of y₁ with (y₁ : z₁ : z₂ : z₃) on the surface — roots of
/// the (at most quadratic) restriction of the quartic. `None` when the
/// restriction vanishes identically (every y₁ works).
pub fn y1_lifts(model: &SurfaceModel<Fp>, z: &[Fp; 3]) -> Option<Vec<Fp>> {
    let p = model.token().modulus();
    let f = |v: u64| Fp::from_u64(v, p);
    let u = model.quartic.eval_except(0, &[f(0), z[0], z[1], z[2]]);
    match u.degree() {
        None => None,
        Some(0) => Some(Vec::new()),
        Some(1) => Some(vec![u.coeff(0).neg().div(&u.coeff(1)).unwrap()]),
        Some(2) => {
            let (a, b, c) = (u.coeff(2), u.coeff(1), u.coeff(0));
            let disc = b.square().sub(&f(4).mul(&a).mul(&c));
            let mut roots = Vec::new();
            if let Some(d) = disc.sqrt() {
                let inv2a = a.mul(&f(2)).inv().unwrap();
                roots.push(b.neg().add(&d).mul(&inv2a));
                if !d.is_zero() {
                    roots.push(b.neg().sub(&d).mul(&inv2a));
                }
            }
            Some(roots)
        }
        Some(d) => panic!("quartic has unexpected y1-degree {d}"),
    }
}

/// Deterministic sampled chart points of Z_n(𝔽_p): draws (x₂, x₃) from
/// a splitmix64 stream and keeps the y₁-roots of the quadratic. Each
/// returned x = (x₁, x₂, x₃) satisfies the chart surface equation.
pub fn sample_chart_points(model: &SurfaceModel<Fp>, seed: u64, count: usize) -> Vec<[Fp; 3]> {
    let p = model.token().modulus();
    let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x2 = Fp::from_u64(next() % p, p);
        let x3 = Fp::from_u64(next() % p, p);
        let one = Fp::from_u64(1, p);
        if let Some(roots) = y1_lifts(model, &[x2, x3, one]) {
            for r in roots {
                if out.len() < count {
                    out.push([r, x2, x3]);
                }
            }
        }
    }
    out
}

/// All points of Z_n(𝔽_p), by sweeping the ℙ² of (y₂:y₃:y₄) and solving
/// the quadratic in y₁. `BudgetExceeded` for p > 2¹⁴.
pub fn enumerate_surface_points(n: usize, p: u64) -> Result<Vec<ProjPoint3<Fp>>> {
    if p > (1 << 14) {
        return Err(Error::BudgetExceeded(format!(
            "enumerate_surface_points: p = {p} exceeds 2^14"
        )));
    }
    let token = Fp::new(1, p);
    let model = SurfaceModel::new(n, &token);
    let mut out = Vec::new();

    // Canonical representatives of ℙ²(𝔽_p) for (y₂:y₃:y₄).
    let mut reps: Vec<[Fp; 3]> = Vec::new();
    let f = |v: u64| Fp::from_u64(v, p);
    for b in 0..p {
        for c in 0..p {
            reps.push([f(1), f(b), f(c)]);
        }
    }
    for c in 0..p {
        reps.push([f(0), f(1), f(c)]);
    }
    reps.push([f(0), f(0), f(1)]);

    for rep in reps {
        let mk = |y1: Fp| ProjPoint3::new([y1, rep[0], rep[1], rep[2]]).unwrap();
        match y1_lifts(&model, &rep) {
            None => {
                // Identically zero restriction: every y₁ works.
                for a in 0..p {
                    out.push(mk(f(a)));
                }
            }
            Some(roots) => out.extend(roots.into_iter().map(mk)),
        }
    }
    // The single point with y₂ = y₃ = y₄ = 0.
    let e1 = ProjPoint3::new([f(1), f(0), f(0), f(0)]).unwrap();
    if model.surface_eval(&e1.c).is_zero() {
        out.push(e1);
    }
    Ok(out)
}

/// The chart point x* = (−6, −25/8, 5) on Z₇ used for the ℚ-exact checks.
pub fn x_star_7() -> [Q; 3] {
    std::array::from_fn(|i| q_from_str(consts::X_STAR_7[i]).unwrap())
}

/// The 8 lines contained in Z₈, each as the pair of linear forms cutting
/// it out of ℙ³.
pub fn z8_lines() -> Vec<[MPoly<Q>; 2]> {
    let token = q_of(1);
    consts::Z8_LINES
        .iter()
        .map(|pair| std::array::from_fn(|i| parse4(pair[i], &token)))
        .collect()
}

/// The three rational base points of λ₈ in ℙ³.
pub fn lambda8_base_rational() -> Vec<[Q; 4]> {
    consts::L8_BASE_RATIONAL
        .iter()
        .map(|v| v.map(q_of))
        .collect()
}

fn radical_points<K: Scalar, const N: usize>(
    data: &[[[i64; 2]; N]],
    root: &K,
) -> Vec<[K; N]> {
    data.iter()
        .map(|pt| {
            std::array::from_fn(|i| {
                let [a, b] = pt[i];
                root.from_i64(a).add(&root.mul(&root.from_i64(b)))
            })
        })
        .collect()
}

/// The two λ₈ base points with ℚ(√2) coordinates, given any square root
/// of 2 in K.
pub fn lambda8_base_sqrt2<K: Scalar>(sqrt2: &K) -> Vec<[K; 4]> {
    radical_points(&consts::L8_BASE_SQRT2, sqrt2)
}

/// The two λ₈ base points (±i : 0 : 1 : 1), given a square root of −1.
pub fn lambda8_base_i<K: Scalar>(i: &K) -> Vec<[K; 4]> {
    radical_points(&consts::L8_BASE_I, i)
}

/// The seven rational indeterminacy points of μ₈ in ℙ².
pub fn mu8_indeterminacy_rational() -> Vec<[i64; 3]> {
    consts::MU8_INDET_RATIONAL.to_vec()
}

/// The two ℚ(√2) indeterminacy points of μ₈, given any square root of 2.
pub fn mu8_indeterminacy_sqrt2<K: Scalar>(sqrt2: &K) -> Vec<[K; 3]> {
    radical_points(&consts::MU8_INDET_SQRT2, sqrt2)
}

/// The λ-fixed point (w+1 : −w : w : 1) over ℚ(w), w² + w + 1 = 0.
pub fn lambda7_fixed_point() -> (crate::scalar::Ext<Q>, [crate::scalar::Ext<Q>; 4]) {
    let field = crate::scalar::ExtField::new(
        consts::W_MINPOLY.iter().map(|&c| q_of(c)).collect(),
    );
    let w = field.gen();
    let one = field.from_base(q_of(1));
    let p = [w.add(&one), w.neg(), w.clone(), one.clone()];
    (one, p)
}

/// The λ-periodic point (r²+1 : r²−r+2 : r : 1) of period 2, over ℚ(r)
/// with r⁴ − r³ + 3r² − r + 1 = 0.
pub fn lambda7_period2_point() -> (crate::scalar::Ext<Q>, [crate::scalar::Ext<Q>; 4]) {
    let field = crate::scalar::ExtField::new(
        consts::PERIOD2_MINPOLY.iter().map(|&c| q_of(c)).collect(),
    );
    let r = field.gen();
    let one = field.from_base(q_of(1));
    let r2 = r.square();
    let p = [
        r2.add(&one),
        r2.sub(&r).add(&field.from_base(q_of(2))),
        r.clone(),
        one.clone(),
    ];
    (one, p)
}

/// Which catalogued components of Z₇ ∖ R₇ contain y: the 12 lines, the
/// conic, and the printed sample genus-one curve.
pub fn excluded_locus_member<K: Scalar>(y: &ProjPoint3<K>) -> Vec<String> {
    let token = &y.c[0];
    let vanishes = |src: &str| parse4::<K>(src, token).eval(&y.c).is_zero();
    let mut hits = Vec::new();
    for (i, pair) in consts::Z7_EXCLUDED_LINES.iter().enumerate() {
        if pair.iter().all(|s| vanishes(s)) {
            hits.push(format!("L{}", i + 1));
        }
    }
    if consts::Z7_EXCLUDED_CONIC.iter().all(|s| vanishes(s)) {
        hits.push("conic".into());
    }
    if consts::Z7_EXCLUDED_GENUS1.iter().all(|s| vanishes(s)) {
        hits.push("genus1-sample".into());
    }
    hits
}
