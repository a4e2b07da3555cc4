//! Exact projective primitives: points and lines of ℙ², points of ℙ³,
//! and PGL₃ transformations with the frame-map solve.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point of ℙ²: three homogeneous coordinates, not all zero.
#[derive(Clone, Debug)]
pub struct ProjPoint2<K: Scalar> {
    pub c: [K; 3],
}

/// A line of ℙ², stored as its normal vector (a dual point).
#[derive(Clone, Debug)]
pub struct ProjLine2<K: Scalar> {
    pub n: [K; 3],
}

/// A point of ℙ³.
#[derive(Clone, Debug)]
pub struct ProjPoint3<K: Scalar> {
    pub c: [K; 4],
}

/// Projective proportionality: all 2×2 minors vanish. Division-free, so
/// it is meaningful over the jet ring as well as over fields.
fn proportional<K: Scalar>(a: &[K], b: &[K]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if !a[i].mul(&b[j]).sub(&a[j].mul(&b[i])).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Scale so the first unit coordinate becomes 1. Over a field this is
/// the first nonzero coordinate; over the jet ring a nonzero nilpotent
/// coordinate is skipped (it cannot normalize anything).
fn canon_slice<K: Scalar>(v: &[K]) -> Result<Vec<K>> {
    for x in v {
        if x.is_unit() {
            let inv = x.inv()?;
            return Ok(v.iter().map(|c| c.mul(&inv)).collect());
        }
    }
    Err(Error::NonInvertible)
}

fn is_zero_vec<K: Scalar>(v: &[K]) -> bool {
    v.iter().all(K::is_zero)
}

macro_rules! proj_impl {
    ($ty:ident, $field:ident, $dim:expr) => {
        impl<K: Scalar> $ty<K> {
            pub fn new(coords: [K; $dim]) -> Result<Self> {
                if is_zero_vec(&coords) {
                    return Err(Error::NonInvertible);
                }
                Ok($ty { $field: coords })
            }

            /// Canonical representative: first unit coordinate scaled to 1.
            pub fn canon(&self) -> Result<[K; $dim]> {
                let v = canon_slice(&self.$field)?;
                Ok(std::array::from_fn(|i| v[i].clone()))
            }

            /// Canonical coordinates rendered as a string — the hashing /
            /// ordering key for projective dedup.
            pub fn key(&self) -> String {
                match self.canon() {
                    Ok(v) => format!("{:?}", v),
                    Err(_) => format!("!{:?}", self.$field),
                }
            }

            pub fn token(&self) -> &K {
                &self.$field[0]
            }
        }

        impl<K: Scalar> PartialEq for $ty<K> {
            fn eq(&self, other: &Self) -> bool {
                proportional(&self.$field, &other.$field)
            }
        }
    };
}

proj_impl!(ProjPoint2, c, 3);
proj_impl!(ProjLine2, n, 3);
proj_impl!(ProjPoint3, c, 4);

impl<K: Scalar> ProjPoint2<K> {
    pub fn on_line(&self, l: &ProjLine2<K>) -> bool {
        dot3(&self.c, &l.n).is_zero()
    }
}

impl<K: Scalar> ProjLine2<K> {
    /// The line through two distinct points (cross product).
    pub fn through(p: &ProjPoint2<K>, q: &ProjPoint2<K>) -> Result<Self> {
        let n = cross3(&p.c, &q.c);
        if is_zero_vec(&n) {
            return Err(Error::IdenticalLines);
        }
        Ok(ProjLine2 { n })
    }
}

pub fn dot3<K: Scalar>(a: &[K; 3], b: &[K; 3]) -> K {
    a[0].mul(&b[0]).add(&a[1].mul(&b[1])).add(&a[2].mul(&b[2]))
}

pub fn cross3<K: Scalar>(a: &[K; 3], b: &[K; 3]) -> [K; 3] {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

pub fn det3<K: Scalar>(a: &[K; 3], b: &[K; 3], c: &[K; 3]) -> K {
    dot3(a, &cross3(b, c))
}

/// Intersection point of two non-proportional lines.
pub fn meet<K: Scalar>(l1: &ProjLine2<K>, l2: &ProjLine2<K>) -> Result<ProjPoint2<K>> {
    let c = cross3(&l1.n, &l2.n);
    if is_zero_vec(&c) {
        return Err(Error::IdenticalLines);
    }
    Ok(ProjPoint2 { c })
}

/// An element of PGL₃ as an invertible 3×3 matrix acting on points by
/// matrix–vector product; lines transform by the adjugate transpose
/// (projectively the inverse transpose).
#[derive(Clone, Debug)]
pub struct ProjMap2<K: Scalar> {
    pub m: [[K; 3]; 3],
}

fn mat_vec<K: Scalar>(m: &[[K; 3]; 3], v: &[K; 3]) -> [K; 3] {
    std::array::from_fn(|i| dot3(&m[i], v))
}

fn mat_mul<K: Scalar>(a: &[[K; 3]; 3], b: &[[K; 3]; 3]) -> [[K; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            a[i][0]
                .mul(&b[0][j])
                .add(&a[i][1].mul(&b[1][j]))
                .add(&a[i][2].mul(&b[2][j]))
        })
    })
}

/// Adjugate: adj(M)·M = det(M)·I.
fn adjugate<K: Scalar>(m: &[[K; 3]; 3]) -> [[K; 3]; 3] {
    let co = |r1: usize, c1: usize, r2: usize, c2: usize| {
        m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]))
    };
    // adj[i][j] = cofactor(j, i)
    [
        [co(1, 1, 2, 2), co(0, 2, 2, 1), co(0, 1, 1, 2)],
        [co(1, 2, 2, 0), co(0, 0, 2, 2), co(0, 2, 1, 0)],
        [co(1, 0, 2, 1), co(0, 1, 2, 0), co(0, 0, 1, 1)],
    ]
}

fn mat_det<K: Scalar>(m: &[[K; 3]; 3]) -> K {
    det3(&m[0], &m[1], &m[2])
}

fn transpose<K: Scalar>(m: &[[K; 3]; 3]) -> [[K; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

impl<K: Scalar> ProjMap2<K> {
    pub fn new(m: [[K; 3]; 3]) -> Result<Self> {
        if !mat_det(&m).is_unit() {
            return Err(Error::NonInvertible);
        }
        Ok(ProjMap2 { m })
    }

    pub fn identity(token: &K) -> Self {
        let z = token.zero();
        let o = token.one();
        ProjMap2 {
            m: [
                [o.clone(), z.clone(), z.clone()],
                [z.clone(), o.clone(), z.clone()],
                [z.clone(), z, o],
            ],
        }
    }

    pub fn apply_point(&self, p: &ProjPoint2<K>) -> ProjPoint2<K> {
        ProjPoint2 {
            c: mat_vec(&self.m, &p.c),
        }
    }

    pub fn apply_line(&self, l: &ProjLine2<K>) -> ProjLine2<K> {
        let at = transpose(&adjugate(&self.m));
        ProjLine2 {
            n: mat_vec(&at, &l.n),
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        ProjMap2 {
            m: mat_mul(&self.m, &other.m),
        }
    }

    pub fn inverse(&self) -> Self {
        ProjMap2 {
            m: adjugate(&self.m),
        }
    }

    pub fn det(&self) -> K {
        mat_det(&self.m)
    }
}

/// The matrix whose columns are the frame's first three dual points,
/// scaled so their sum is the fourth — it maps e₁,e₂,e₃,(1:1:1) to the
/// frame lines (in the dual). `NonGenericFrame` when three of the four
/// lines are concurrent.
fn dual_frame_matrix<K: Scalar>(frame: &[ProjLine2<K>; 4]) -> Result<[[K; 3]; 3]> {
    let a: [[K; 3]; 3] = std::array::from_fn(|i| frame[i].n.clone());
    let cols = transpose(&a);
    if !mat_det(&cols).is_unit() {
        return Err(Error::NonGenericFrame);
    }
    // Solve cols·w = a4 (scale-free via the adjugate).
    let w = mat_vec(&adjugate(&cols), &frame[3].n);
    if w.iter().any(|x| !x.is_unit()) {
        return Err(Error::NonGenericFrame);
    }
    let scaled: [[K; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| a[i][j].mul(&w[i])));
    Ok(transpose(&scaled))
}

/// The unique projective map g with g·srcᵢ = dstᵢ for four lines in
/// general position on each side.
pub fn frame_map<K: Scalar>(
    src: &[ProjLine2<K>; 4],
    dst: &[ProjLine2<K>; 4],
) -> Result<ProjMap2<K>> {
    let ds = dual_frame_matrix(src)?;
    let dd = dual_frame_matrix(dst)?;
    // Dual-point matrix: src duals → standard frame → dst duals.
    let n = mat_mul(&dd, &adjugate(&ds));
    // Lines transform by N, so points transform by adj(N)ᵀ.
    let m = transpose(&adjugate(&n));
    ProjMap2::new(m)
}
