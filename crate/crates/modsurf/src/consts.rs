//! The polynomial and combinatorial constants of the two surface models,
//! collected in one place as parseable strings. A transcription typo
//! cannot survive: every family formula is exercised by the matroid
//! pipeline and every identity by the symbolic checks in the test suite.

/// Quartic equation of Z₇ in y₁..y₄.
pub(crate) const Z7_QUARTIC: &str = "y1**2*y2**2 + y1**2*y2*y3 - y1*y2**2*y3 - y1*y2*y3**2 - y1**2*y2*y4 \
     - y1*y2**2*y4 + y1*y2*y3*y4 - y2*y3**2*y4 + y1*y2*y4**2 + y3**2*y4**2";

pub(crate) const Z7_SING: [[i64; 4]; 8] = [
    [0, 0, 0, 1],
    [1, 0, 0, 1],
    [0, 0, 1, 0],
    [1, 0, 1, 0],
    [0, 1, 0, 0],
    [0, 1, 0, 1],
    [1, -1, 1, 0],
    [1, 0, 0, 0],
];

/// Normal vectors of C₀(x) for n=7, polynomials in x1,x2,x3.
pub(crate) const C0_7: [[&str; 3]; 7] = [
    ["1", "0", "0"],
    ["0", "1", "0"],
    ["0", "0", "1"],
    ["-1", "1", "1"],
    [
        "-x1*x2**2-x1*x2*x3+x1*x2-x2*x3+x3",
        "x1*x2+x1*x3-x1",
        "x2-1",
    ],
    [
        "-x1*x2**2-x1*x2*x3+x1*x2-x2*x3+x3",
        "x1*x2+x1*x3-x1+x2**2+x2*x3-2*x2-x3+1",
        "x2**2+x2*x3-x2-x3",
    ],
    [
        "-x1*x2**2-x1*x2*x3+x1*x2+x3**2",
        "x1*x2+x1*x3-x1-x2*x3-x3**2+x3",
        "x2**2+x2*x3-x2-x3",
    ],
];

/// Normal vectors of C₁(x) for n=7.
pub(crate) const C1_7: [[&str; 3]; 7] = [
    [
        "-x1*x2**2-x1*x2*x3+x1*x2+x3**2",
        "x1*x2**2+2*x1*x2*x3-x1*x2+x1*x3**2-x1*x3-x2**2*x3-2*x2*x3**2+x2*x3-x3**3+x3**2",
        "x2**2+x2*x3-x2-x3",
    ],
    ["-x1*x2-x1*x3+x1", "x1*x2+x1*x3-x1", "x2-1"],
    ["-x2", "1", "0"],
    [
        "-x1*x2**3-2*x1*x2**2*x3+x1*x2**2-x1*x2*x3**2+x1*x2*x3-x2**2*x3-x2*x3**2+x2*x3+x3**2",
        "x1*x2+x1*x3-x1+x2**2+x2*x3-2*x2-x3+1",
        "x2**2+x2*x3-x2-x3",
    ],
    [
        "-x1*x2**2-x1*x2*x3+x1*x2-x2*x3+x3",
        "0",
        "x2**2+x2*x3-x2-x3",
    ],
    [
        "-x2**2-x2*x3+x2+x3",
        "x1*x2+x1*x3-x1-x2*x3-x3**2+x3",
        "x2**2+x2*x3-x2-x3",
    ],
    ["0", "1", "1"],
];

/// The point p₁,₇ of C₀(x): its second coordinate is linear in x₁, which
/// is what the period map inverts.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) const P17: [&str; 3] = [
    "0",
    "-x1*x2**2-x1*x2*x3+x1*x2+x2**2-x2",
    "x2*x3+x3**2-x3",
];

/// Polynomial action of σ₁ on ℙ³ (restricting to Z₇), degree 4.
pub(crate) const SIGMA1_POLY: [&str; 4] = [
    "y1*y2**2*y3+y1*y2*y3**2-y2**2*y3**2-y2*y3**3-y1*y2*y3*y4-y2**2*y3*y4+y2*y3*y4**2+y3**2*y4**2",
    "y1*y2**3+y1*y2**2*y3+y2**2*y3**2+y2*y3**3-2*y1*y2**2*y4-y1*y2*y3*y4-2*y2*y3**2*y4-y3**3*y4+y1*y2*y4**2+y3**2*y4**2",
    "y1*y2**2*y3+y1*y2*y3**2-y2**2*y3**2-y2*y3**3-y1*y2*y3*y4+y2*y3**2*y4",
    "y2**3*y3+2*y2**2*y3**2+y2*y3**3-2*y2**2*y3*y4-3*y2*y3**2*y4-y3**3*y4+y2*y3*y4**2+y3**2*y4**2",
];

/// Polynomial action of σ₂ on ℙ³, degree 3.
pub(crate) const SIGMA2_POLY: [&str; 4] = [
    "-y2**2*y3-y2*y3**2+y2*y3*y4",
    "-y1*y2*y3+y2*y3**2+y2*y3*y4-y3*y4**2",
    "y1*y2**2+y1*y2*y3-y2**2*y3-y2*y3**2-y1*y2*y4+y2*y3*y4",
    "y2*y3*y4-y3*y4**2",
];

/// Generator permutations of aut(M₇) and the fibration-trivial σ₀, as
/// cycles on {1..14}.
pub(crate) const SIGMA1_CYCLES: &[&[usize]] = &[&[1, 7, 4, 3, 6, 5, 2], &[8, 14, 11, 10, 13, 12, 9]];
pub(crate) const SIGMA2_CYCLES: &[&[usize]] = &[&[1, 3, 5, 6, 7, 2], &[8, 10, 12, 13, 14, 9]];
pub(crate) const SIGMA0_CYCLES: &[&[usize]] =
    &[&[1, 2, 4], &[3, 6, 7], &[8, 9, 11], &[10, 13, 14]];

/// The quintic Q (base locus of the n=7 plane map) in z1,z2,z3.
pub(crate) const Q_QUINTIC: &str = "z1**3*z2**2+2*z1**2*z2**3+z1*z2**4+2*z1**3*z2*z3+4*z1**2*z2**2*z3+2*z1*z2**3*z3\
     +z1**3*z3**2-4*z1**2*z2*z3**2-9*z1*z2**2*z3**2-4*z2**3*z3**2-2*z1**2*z3**3\
     +2*z1*z2*z3**3+4*z2**2*z3**3+z1*z3**4";

/// Q₂ and Q₃ of F = (Q₁:Q₂:Q₃), with Q₁ = z₁·Q.
pub(crate) const Q2_SEXTIC: &str = "-z1**5*z2-3*z1**4*z2**2-3*z1**3*z2**3-z1**2*z2**4+z1**4*z2*z3+2*z1**3*z2**2*z3\
     +z1**2*z2**3*z3+z1**3*z2*z3**2+2*z1**2*z2**2*z3**2+z1*z2**3*z3**2-z1**2*z2*z3**3\
     +z2**3*z3**3-z2**2*z3**4";

pub(crate) const Q3_SEXTIC: &str = "2*z1**4*z2*z3+4*z1**3*z2**2*z3+2*z1**2*z2**3*z3+z1**4*z3**2-4*z1**3*z2*z3**2\
     -8*z1**2*z2**2*z3**2-3*z1*z2**3*z3**2-2*z1**3*z3**3+2*z1**2*z2*z3**3\
     +4*z1*z2**2*z3**3+z2**3*z3**3+z1**2*z3**4";

pub(crate) const R4_QUARTIC: &str =
    "z1**4+2*z1**3*z2+z1**2*z2**2-z1**2*z3**2-z1*z2*z3**2-z2*z3**3";

pub(crate) const R7_SEPTIC: &str = "z1**6*z2+4*z1**5*z2**2+6*z1**4*z2**3+4*z1**3*z2**4+z1**2*z2**5+z1**6*z3\
     -7*z1**4*z2**2*z3-11*z1**3*z2**3*z3-6*z1**2*z2**4*z3-z1*z2**5*z3\
     -z1**5*z3**2+3*z1**3*z2**2*z3**2+2*z1**2*z2**3*z3**2+3*z1**2*z2**2*z3**3\
     +5*z1*z2**3*z3**3+2*z2**4*z3**3-2*z1*z2**2*z3**4-2*z2**3*z3**4-z1*z2*z3**5";

/// Rational indeterminacy points of F: q₀ (a node of L+B) through q₅.
pub(crate) const F_INDET_RATIONAL: [[i64; 3]; 6] = [
    [0, 1, 1],
    [0, 0, 1],
    [1, 0, 1],
    [0, 1, 0],
    [-1, 1, 0],
    [1, 0, 0],
];

/// Minimal polynomial X³−4X²+3X+1 of r; (−r²+2r : r : 1) completes the
/// indeterminacy locus of F.
pub(crate) const F_INDET_CUBIC_MINPOLY: [i64; 4] = [1, 3, -4, 1];

/// The 12 lines of Z₇∖R₇, each as a pair of linear forms in y1..y4.
pub(crate) const Z7_EXCLUDED_LINES: [[&str; 2]; 12] = [
    ["y2", "y3"],
    ["y1", "y3"],
    ["y2", "y4"],
    ["y1-y3", "y4"],
    ["y1", "y4"],
    ["y2-y4", "y3"],
    ["y1-y3-y4", "y2+y3"],
    ["y1-y3", "y2+y3"],
    ["y2+y3", "y4"],
    ["y1-y4", "y3"],
    ["y1-y3", "y2-y4"],
    ["y1", "y2-y4"],
];

/// The conic C_o in Z₇∖R₇.
pub(crate) const Z7_EXCLUDED_CONIC: [&str; 2] = ["y1*y3-y3**2-y1*y4", "y2+y3-y4"];

/// The printed sample among the seven genus-one curves E₁..E₇.
pub(crate) const Z7_EXCLUDED_GENUS1: [&str; 2] = [
    "y1**2-2*y1*y3+y3**2-y1*y4",
    "y2**2+y2*y3+y1*y4-y3*y4-y4**2",
];

/// Chart point x* = (−6, −25/8, 5) on Z₇, used for the ℚ-exact checks.
pub(crate) const X_STAR_7: [&str; 3] = ["-6", "-25/8", "5"];

/// Fixed points of σ₂³ ∩ fixed locus data: w² + w + 1 = 0, point
/// (w+1 : −w : w : 1); and the period-2 quartic points
/// (r²+1 : r²−r+2 : r : 1) with r⁴ − r³ + 3r² − r + 1 = 0.
pub(crate) const W_MINPOLY: [i64; 3] = [1, 1, 1];
pub(crate) const PERIOD2_MINPOLY: [i64; 5] = [1, -1, 3, -1, 1];

/// Quartic equation of Z₈ in y₁..y₄.
pub(crate) const Z8_QUARTIC: &str = "y1*y2**2*y3 - y1**2*y2*y4 + y1*y2**2*y4 + y1**2*y3*y4 - 2*y1*y2*y3*y4\
     - y1*y3**2*y4 + y1*y3*y4**2 - y2*y3*y4**2 + y3**2*y4**2";

pub(crate) const Z8_SING: [[i64; 4]; 6] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 1, 1],
    [1, 0, 1, 0],
];

/// Normal vectors of C₀(x) for n=8.
pub(crate) const C0_8: [[&str; 3]; 8] = [
    ["1", "0", "0"],
    ["0", "1", "0"],
    ["0", "0", "1"],
    ["1", "1", "1"],
    [
        "x1-x2",
        "x1**2-x1*x2-x1*x3+x1-x2+x3",
        "x1-x2*x3-x2+x3",
    ],
    [
        "x1*x2-x1*x3-x2+x3",
        "x1*x2**2-x1*x2-x1*x3+x1-x2+x3",
        "x1*x2*x3-2*x1*x3+x1-x2+x3",
    ],
    ["x1-1", "x1*x2-x2", "x1-x2"],
    ["1", "x1", "x3"],
];

/// Normal vectors of C₁(x) for n=8; the last two are (1:x₁:0) and
/// (1:x₂:x₃), which is exactly what the period map reads off.
pub(crate) const C1_8: [[&str; 3]; 8] = [
    [
        "x1*x2-x1*x3-x2+x3",
        "x1*x2**2-x1*x2-x1*x3+x1-x2+x3",
        "x1*x2-x1*x3-x2**2+x2*x3",
    ],
    [
        "x1**2*x2-x1**2*x3-x1*x2**2+x1*x2*x3-x1*x2+x1*x3+x2**2-x2*x3",
        "x1**3*x2-x1**3*x3-x1**2*x2**2+x1**2*x3**2+2*x1*x2*x3-x1*x2-2*x1*x3**2+x1*x3+x2**2-2*x2*x3+x3**2",
        "x1**2*x2*x3-x1**2*x2-x1**2*x3+x1**2+x1*x2**2-2*x1*x2-x1*x3**2+2*x1*x3+x2**2-2*x2*x3+x3**2",
    ],
    ["x1-x2", "x1-x2", "x1-x2*x3-x2+x3"],
    ["x3", "x1*x2", "x3"],
    ["0", "1", "1"],
    ["x1-1", "0", "x1-x3"],
    ["1", "x1", "0"],
    ["1", "x2", "x3"],
];

/// The partition S₁..S₈ of the 28 pairs {i,j} ⊂ {1..8}: slot k of the
/// labeled operator collects the points p_{i,j} with {i,j} ∈ S_k.
pub(crate) const S8_PARTITION: [&[(usize, usize)]; 8] = [
    &[(1, 8), (2, 7), (3, 6), (4, 5)],
    &[(1, 7), (2, 6), (3, 5)],
    &[(1, 6), (2, 5), (3, 4), (7, 8)],
    &[(1, 5), (2, 4), (6, 8)],
    &[(1, 4), (2, 3), (5, 8), (6, 7)],
    &[(1, 3), (4, 8), (5, 7)],
    &[(1, 2), (3, 8), (4, 7), (5, 6)],
    &[(2, 8), (3, 7), (4, 6)],
];

/// Generator involutions of aut(M₈), and the λ-commuting involution s.
pub(crate) const S1_CYCLES_M8: &[&[usize]] =
    &[&[2, 4], &[3, 7], &[6, 8], &[9, 11], &[10, 14], &[13, 15]];
pub(crate) const S2_CYCLES_M8: &[&[usize]] = &[&[2, 6], &[4, 8], &[9, 13], &[11, 15]];
pub(crate) const S3_CYCLES_M8: &[&[usize]] =
    &[&[1, 2], &[3, 8], &[4, 7], &[5, 6], &[9, 13], &[10, 12], &[14, 16]];
pub(crate) const S_LAMBDA_CYCLES_M8: &[&[usize]] = &[&[1, 5], &[2, 6], &[3, 7], &[4, 8]];

/// The quartic branch component of the n=8 double cover, in z1,z2,z3.
pub(crate) const Q8_QUARTIC: &str = "z1**2*z2**2+2*z1**2*z2*z3-4*z1*z2**2*z3-z2**3*z3+z1**2*z3**2-4*z1*z2*z3**2\
     +6*z2**2*z3**2-z2*z3**3";

/// Rational base points of λ₈ (the √2 and i points are built from the
/// minimal polynomials below).
pub(crate) const L8_BASE_RATIONAL: [[i64; 4]; 3] = [[1, 1, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]];
/// (∓√2−1 : ±√2+2 : ±2√2+3 : 1) as (constant, √2-coefficient) per coordinate.
pub(crate) const L8_BASE_SQRT2: [[[i64; 2]; 4]; 2] = [
    [[-1, -1], [2, 1], [3, 2], [1, 0]],
    [[-1, 1], [2, -1], [3, -2], [1, 0]],
];
/// (±i : 0 : 1 : 1) as (constant, i-coefficient) per coordinate.
pub(crate) const L8_BASE_I: [[[i64; 2]; 4]; 2] = [
    [[0, 1], [0, 0], [1, 0], [1, 0]],
    [[0, -1], [0, 0], [1, 0], [1, 0]],
];

/// The 9 indeterminacy points of μ₈: seven rational, two in ℚ(√2).
pub(crate) const MU8_INDET_RATIONAL: [[i64; 3]; 7] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 1],
    [1, 0, 1],
    [1, 1, 0],
    [0, 1, 1],
];
pub(crate) const MU8_INDET_SQRT2: [[[i64; 2]; 3]; 2] = [
    [[2, -1], [3, -2], [1, 0]],
    [[2, 1], [3, 2], [1, 0]],
];

/// The 8 lines contained in Z₈, each as a pair of linear forms.
pub(crate) const Z8_LINES: [[&str; 2]; 8] = [
    ["y1", "y3"],
    ["y1", "y4"],
    ["y2", "y3"],
    ["y2", "y4"],
    ["y3", "y4"],
    ["y1-y4", "y2-y4"],
    ["y1-y3", "y2-y4"],
    ["y2-y4", "y3-y4"],
];

/// Weierstrass coefficients a₂, a₄, a₆ over ℚ(t), as (numerator,
/// denominator) polynomial strings in t.
pub(crate) const E7_COEFFS: [[&str; 2]; 3] = [
    ["t**4-2*t**3+3*t**2+6*t+1", "(t+1)**2"],
    ["8*t**3*(t**2-t-1)", "(t+1)**3"],
    ["16*t**6", "(t+1)**4"],
];

pub(crate) const E8_COEFFS: [[&str; 2]; 3] = [
    ["4*t**4-8*t**3+4*t**2+1", "t**4"],
    ["8*(t-1)**2", "t**6"],
    ["16*(t-1)**4", "t**8"],
];

/// The 7-torsion generator p_t = (0 : 4t³ : (t+1)²) on E₇, in affine
/// coordinates (x, y) = (0, 4t³/(t+1)²).
pub(crate) const E7_TORSION_POINT: [[&str; 2]; 2] = [["0", "1"], ["4*t**3", "(t+1)**2"]];

/// Places of the singular fibers: E₇ at ∞, 0, −1 and the cubic; E₈ at
/// 1, 0, ∞, 1/2 and the quadratic (stored as t² − t − 1/4 cleared to
/// 4t² − 4t − 1).
pub(crate) const E7_FIBER_CUBIC: [i64; 4] = [-1, -8, -5, 1];
pub(crate) const E8_FIBER_QUADRATIC: [i64; 3] = [-1, -4, 4];

/// The printed cubic affine model of the n=8 fibration, variables X, Y
/// with coefficients in ℚ(t): evaluating Z₈ at (X, 1+t(Y−1), Y, 1)
/// equals this times a cofactor.
pub(crate) const E8_CUBIC_MODEL: &str =
    "(t-1)*X**2 - t**2*X*Y**2 + X*Y + (t-1)**2*X + (t-1)*Y";

/// s-parameter substitution relating E₈ to the X₁(8) model
/// E′: η² = ξ³ + (2−s²)ξ² + ξ: s = 2t²/(t²−1).
pub(crate) const E8_S_SUBST: [&str; 2] = ["2*t**2", "t**2-1"];
