//! The period maps, the pointwise self-maps λ, orbits, degree
//! estimation, the 2-form multiplier via jet arithmetic, and the
//! matroid-automorphism actions on the surfaces.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arrangements::{labeled_lambda7, labeled_lambda8, LabeledArrangement};
use crate::error::{Error, Result};
use crate::families::{enumerate_surface_points, SurfaceModel};
use crate::matroids::Permutation;
use crate::projgeom::{frame_map, meet, ProjLine2};
use crate::scalar::{Fp, Jet2, Scalar};

/// One orbit of λ in chart coordinates: iterates until x₀ recurs, any
/// iterate recurs (pre-periodic), λ is undefined, or the budget runs out.
#[derive(Clone, Debug)]
pub struct OrbitRecord<K: Scalar> {
    pub start: [K; 3],
    pub iterates: Vec<[K; 3]>,
    pub period: Option<usize>,
    pub termination: String,
}

/// The four standard frame lines of the model (the constant first four
/// normals of C₀).
fn standard_frame<K: Scalar>(model: &SurfaceModel<K>) -> [ProjLine2<K>; 4] {
    let z = model.token().zero();
    std::array::from_fn(|i| {
        ProjLine2::new(std::array::from_fn(|j| {
            model.c0[i][j].eval(&[z.clone(), z.clone(), z.clone()])
        }))
        .expect("frame lines are nonzero constants")
    })
}

fn first_four<K: Scalar>(a: &LabeledArrangement<K>) -> [ProjLine2<K>; 4] {
    std::array::from_fn(|i| a.line(i).clone())
}

/// Recover the chart coordinates x from a labeled realization
/// (C₀-part, C₁-part) of M_n, inverting the parametrization after
/// normalizing the first four lines of the C₀-part to the model frame.
pub fn period_map<K: Scalar>(
    model: &SurfaceModel<K>,
    c0: &LabeledArrangement<K>,
    c1: &LabeledArrangement<K>,
) -> Result<[K; 3]> {
    assert!(c0.len() == model.n && c1.len() == model.n);
    let g = frame_map(&first_four(c0), &standard_frame(model))?;
    match model.n {
        7 => {
            // (1 : x₂ : x₃) is the intersection of lines 5 and 7.
            let p = meet(&g.apply_line(c0.line(4)), &g.apply_line(c0.line(6)))?;
            if !p.c[0].is_unit() {
                return Err(Error::ChartSingular);
            }
            let inv = p.c[0].inv()?;
            let x2 = p.c[1].mul(&inv);
            let x3 = p.c[2].mul(&inv);
            // x₁ is linear in the second coordinate of p₁,₇.
            let q = meet(&g.apply_line(c0.line(0)), &g.apply_line(c0.line(6)))?;
            // p₁,₇ = (0 : a·x₁ + b : c) with a, b, c below.
            let a = x2.square().add(&x2.mul(&x3)).sub(&x2).neg();
            let b = x2.square().sub(&x2);
            let c = x2.mul(&x3).add(&x3.square()).sub(&x3);
            // Proportionality (a·x₁+b)·q₂ = c·q₁.
            let denom = a.mul(&q.c[2]);
            if !denom.is_unit() {
                return Err(Error::LinearSolveDegenerate);
            }
            let x1 = c.mul(&q.c[1]).sub(&b.mul(&q.c[2])).mul(&denom.inv()?);
            Ok([x1, x2, x3])
        }
        8 => {
            // The last two normals of the C₁-part are (1:x₁:0), (1:x₂:x₃).
            let l7 = g.apply_line(c1.line(6));
            let l8 = g.apply_line(c1.line(7));
            if !l7.n[0].is_unit() || !l8.n[0].is_unit() {
                return Err(Error::LinearSolveDegenerate);
            }
            let x1 = l7.n[1].mul(&l7.n[0].inv()?);
            let inv = l8.n[0].inv()?;
            Ok([x1, l8.n[1].mul(&inv), l8.n[2].mul(&inv)])
        }
        _ => unreachable!(),
    }
}

pub fn labeled_lambda<K: Scalar>(
    n: usize,
    c: &LabeledArrangement<K>,
) -> Result<LabeledArrangement<K>> {
    match n {
        7 => labeled_lambda7(c),
        8 => labeled_lambda8(c),
        _ => unreachable!(),
    }
}

/// One step of the rational self-map λ in chart coordinates:
/// (C₀,C₁) = realization(x), C₂ = Λ(C₁), then read the coordinates of
/// the shifted pair (C₁, C₂).
pub fn lambda_step<K: Scalar>(model: &SurfaceModel<K>, x: &[K; 3]) -> Result<[K; 3]> {
    let (_, c1) = model.parametrized_realization(x)?;
    let c2 = labeled_lambda(model.n, &c1)?;
    period_map(model, &c1, &c2)
}

/// The action of s ∈ aut(M_n) on chart points: permute the lines of
/// C₀∪C₁ (the line in slot i of the image is the old line s(i)), split
/// back into halves and invert the parametrization.
pub fn aut_action<K: Scalar>(
    model: &SurfaceModel<K>,
    s: &Permutation,
    x: &[K; 3],
) -> Result<[K; 3]> {
    let n = model.n;
    assert_eq!(s.n(), 2 * n);
    let union = model.union_realization(x)?;
    let permuted: Vec<ProjLine2<K>> = (1..=2 * n)
        .map(|i| union.line(s.apply(i) - 1).clone())
        .collect();
    let c0 = LabeledArrangement::new(permuted[..n].to_vec())?;
    let c1 = LabeledArrangement::new(permuted[n..].to_vec())?;
    period_map(model, &c0, &c1)
}

/// The fibration parameter t = (y₂−y₄)/y₃ of the n=7 model, in the
/// chart: (x₂−1)/x₃.
pub fn base_t<K: Scalar>(x: &[K; 3]) -> Result<K> {
    if !x[2].is_unit() {
        return Err(Error::ChartSingular);
    }
    Ok(x[1].sub(&x[1].one()).mul(&x[2].inv()?))
}

pub fn orbit<K: Scalar>(model: &SurfaceModel<K>, x0: &[K; 3], max_iter: usize) -> OrbitRecord<K> {
    let mut iterates = vec![x0.clone()];
    let mut period = None;
    let mut termination = "budget".to_string();
    for k in 1..=max_iter {
        match lambda_step(model, iterates.last().unwrap()) {
            Ok(x) => {
                if x == *x0 {
                    period = Some(k);
                    termination = "periodic".into();
                    iterates.push(x);
                    break;
                }
                if iterates.contains(&x) {
                    termination = "pre-periodic".into();
                    iterates.push(x);
                    break;
                }
                iterates.push(x);
            }
            Err(e) => {
                termination = format!("undefined: {e}");
                break;
            }
        }
    }
    OrbitRecord {
        start: x0.clone(),
        iterates,
        period,
        termination,
    }
}

/// Fiber-size histogram of λ over all chart points of Z_n(𝔽_p) where it
/// is defined, and the modal fiber size (the sampled degree).
pub fn degree_estimate(n: usize, p: u64) -> Result<(BTreeMap<usize, usize>, usize)> {
    if p > (1 << 10) {
        return Err(Error::BudgetExceeded(format!(
            "degree_estimate: p = {p} exceeds 2^10"
        )));
    }
    let token = Fp::new(1, p);
    let model = SurfaceModel::new(n, &token);
    let pts = enumerate_surface_points(n, p)?;
    let images: Vec<String> = pts
        .par_iter()
        .filter_map(|y| {
            if !y.c[3].is_unit() {
                return None;
            }
            let inv = y.c[3].inv().ok()?;
            let x = [y.c[0].mul(&inv), y.c[1].mul(&inv), y.c[2].mul(&inv)];
            let img = lambda_step(&model, &x).ok()?;
            Some(format!("{:?}", img.map(|v| v.value())))
        })
        .collect();
    let mut fibers: BTreeMap<String, usize> = BTreeMap::new();
    for k in images {
        *fibers.entry(k).or_insert(0) += 1;
    }
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for &sz in fibers.values() {
        *hist.entry(sz).or_insert(0) += 1;
    }
    let mode = hist
        .iter()
        .max_by_key(|&(_, &count)| count)
        .map(|(&sz, _)| sz)
        .unwrap_or(0);
    Ok((hist, mode))
}

/// The multiplier of λ on the 2-form ω = dx₂∧dx₃ / f_{x₁}, computed by
/// running λ in 2-jet arithmetic along the surface at x.
pub fn form_multiplier<K: Scalar>(model: &SurfaceModel<K>, x: &[K; 3]) -> Result<K> {
    let token = model.token();
    let y = [x[0].clone(), x[1].clone(), x[2].clone(), token.one()];
    let f1 = model.quartic.derivative(0).eval(&y);
    if !f1.is_unit() {
        return Err(Error::ChartSingular);
    }
    let f2 = model.quartic.derivative(1).eval(&y);
    let f3 = model.quartic.derivative(2).eval(&y);
    // The implicit surface chart to first order:
    // X₁ = x₁ − (f₂ε₁ + f₃ε₂)/f₁,  X₂ = x₂ + ε₁,  X₃ = x₃ + ε₂.
    let f1inv = f1.inv()?;
    let x_jet: [Jet2<K>; 3] = [
        Jet2 {
            c: x[0].clone(),
            d1: f2.mul(&f1inv).neg(),
            d2: f3.mul(&f1inv).neg(),
        },
        Jet2::active1(x[1].clone()),
        Jet2::active2(x[2].clone()),
    ];
    let jet_model = SurfaceModel::new(model.n, &Jet2::constant(token.clone()));
    let img = lambda_step(&jet_model, &x_jet)?;
    // Jacobian of (x₂′, x₃′) in (ε₁, ε₂), times f₁(x)/f₁(x′).
    let det = img[1]
        .d1
        .mul(&img[2].d2)
        .sub(&img[1].d2.mul(&img[2].d1));
    let y_img = [
        img[0].c.clone(),
        img[1].c.clone(),
        img[2].c.clone(),
        token.one(),
    ];
    let f1_img = model.quartic.derivative(0).eval(&y_img);
    if !f1_img.is_unit() {
        return Err(Error::ChartSingular);
    }
    Ok(det.mul(&f1).mul(&f1_img.inv()?))
}

#[cfg(test)]
mod tests {
    use crate::consts;
    use crate::families::XVARS;
    use crate::mpoly::{parse_poly, MPoly};
    use crate::scalar::{q_of, Scalar, Q};

    #[test]
    fn p17_matches_hardcoded_linear_solve() {
        // period_map's n=7 linear solve hard-codes the coefficients of
        // p₁,₇ = (0 : a·x₁ + b : c); they must agree with the family
        // formula for that point.
        let token = q_of(1);
        let parse = |s: &str| parse_poly(s, &XVARS, token.clone()).unwrap();
        let p17: [MPoly<Q>; 3] = std::array::from_fn(|i| parse(consts::P17[i]));
        assert!(p17[0].is_zero());
        let x1 = MPoly::var(3, 0, token.clone());
        let a = parse("-x2**2-x2*x3+x2");
        let b = parse("x2**2-x2");
        assert_eq!(p17[1], a.mul(&x1).add(&b));
        assert_eq!(p17[2], parse("x2*x3+x3**2-x3"));
    }
}
