//! Labeled line arrangements, their singular-point combinatorics, the
//! operators Λ_{𝔫,𝔪} and the labeled operators for 7 and 8 lines.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::projgeom::{frame_map, meet, ProjLine2, ProjMap2, ProjPoint2};
use crate::scalar::Scalar;

/// An ordered list of pairwise-distinct projective lines. The order is
/// the labeling; the unlabeled view is the sorted set of canonical keys.
#[derive(Clone, Debug)]
pub struct LabeledArrangement<K: Scalar> {
    lines: Vec<ProjLine2<K>>,
}

/// Intersection points grouped by multiplicity: each entry is a point
/// together with the sorted indices of every line through it.
#[derive(Clone, Debug)]
pub struct SingularPointTable<K: Scalar> {
    pub points: Vec<(ProjPoint2<K>, Vec<usize>)>,
}

impl<K: Scalar> LabeledArrangement<K> {
    pub fn new(lines: Vec<ProjLine2<K>>) -> Result<Self> {
        for i in 0..lines.len() {
            for j in (i + 1)..lines.len() {
                if lines[i] == lines[j] {
                    return Err(Error::DuplicateLines(i, j));
                }
            }
        }
        Ok(LabeledArrangement { lines })
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn lines(&self) -> &[ProjLine2<K>] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &ProjLine2<K> {
        &self.lines[i]
    }

    /// Concatenation (e.g. C₀ ∪ C₁ keeping both labelings).
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let mut lines = self.lines.clone();
        lines.extend(other.lines.iter().cloned());
        LabeledArrangement::new(lines)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Result<Self> {
        LabeledArrangement::new(self.lines[range].to_vec())
    }

    pub fn apply(&self, g: &ProjMap2<K>) -> Result<Self> {
        LabeledArrangement::new(self.lines.iter().map(|l| g.apply_line(l)).collect())
    }

    /// Unlabeled equality: same set of lines in any order.
    pub fn same_unlabeled(&self, other: &Self) -> bool {
        if self.lines.len() != other.lines.len() {
            return false;
        }
        let mut a: Vec<String> = self.lines.iter().map(ProjLine2::key).collect();
        let mut b: Vec<String> = other.lines.iter().map(ProjLine2::key).collect();
        a.sort();
        b.sort();
        a == b
    }

    /// The complete intersection table, grouped projectively.
    pub fn singular_points(&self) -> Result<SingularPointTable<K>> {
        let mut groups: BTreeMap<String, (ProjPoint2<K>, Vec<usize>)> = BTreeMap::new();
        for i in 0..self.lines.len() {
            for j in (i + 1)..self.lines.len() {
                let p = meet(&self.lines[i], &self.lines[j])?;
                let e = groups.entry(p.key()).or_insert_with(|| (p, Vec::new()));
                for ix in [i, j] {
                    if !e.1.contains(&ix) {
                        e.1.push(ix);
                    }
                }
            }
        }
        let mut points: Vec<_> = groups.into_values().collect();
        for (_, ixs) in &mut points {
            ixs.sort_unstable();
        }
        Ok(SingularPointTable { points })
    }

    /// All lines of ℙ² containing exactly m ∈ m_set points of the k-point
    /// set for k ∈ n_set; candidates are spanned by point pairs, which is
    /// exhaustive because m ≥ 2.
    pub fn lambda_operator(&self, n_set: &[usize], m_set: &[usize]) -> Result<Vec<ProjLine2<K>>> {
        let table = self.singular_points()?;
        let pts: Vec<&ProjPoint2<K>> = table
            .points
            .iter()
            .filter(|(_, ixs)| n_set.contains(&ixs.len()))
            .map(|(p, _)| p)
            .collect();
        let mut out: BTreeMap<String, ProjLine2<K>> = BTreeMap::new();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let l = match ProjLine2::through(pts[i], pts[j]) {
                    Ok(l) => l,
                    Err(_) => continue,
                };
                let key = l.key();
                if out.contains_key(&key) {
                    continue;
                }
                let count = pts.iter().filter(|p| p.on_line(&l)).count();
                if m_set.contains(&count) {
                    out.insert(key, l);
                }
            }
        }
        Ok(out.into_values().collect())
    }

    pub fn t_vector(&self) -> Result<BTreeMap<usize, usize>> {
        let table = self.singular_points()?;
        let mut t = BTreeMap::new();
        for (_, ixs) in &table.points {
            *t.entry(ixs.len()).or_insert(0) += 1;
        }
        Ok(t)
    }
}

/// The labeled heptagon operator: slot j is the unique line through
/// exactly three double points of the hexagon H_j (the arrangement with
/// line j removed).
pub fn labeled_lambda7<K: Scalar>(c: &LabeledArrangement<K>) -> Result<LabeledArrangement<K>> {
    assert_eq!(c.len(), 7);
    let mut out = Vec::with_capacity(7);
    for j in 0..7 {
        let hex: Vec<ProjLine2<K>> = (0..7).filter(|&k| k != j).map(|k| c.line(k).clone()).collect();
        let hex = LabeledArrangement::new(hex)?;
        let candidates = hex.lambda_operator(&[2], &[3])?;
        match candidates.len() {
            1 => out.push(candidates.into_iter().next().unwrap()),
            n => {
                return Err(Error::DegenerateOperator {
                    slot: j,
                    detail: format!("{n} lines through 3 double points of hexagon"),
                })
            }
        }
    }
    LabeledArrangement::new(out)
}

/// The labeled octagon operator: slot k is the line containing every
/// intersection point p_{i,j} with {i,j} in the fixed partition class S_k.
pub fn labeled_lambda8<K: Scalar>(c: &LabeledArrangement<K>) -> Result<LabeledArrangement<K>> {
    assert_eq!(c.len(), 8);
    let mut out = Vec::with_capacity(8);
    for (k, class) in crate::consts::S8_PARTITION.iter().enumerate() {
        let pts: Vec<ProjPoint2<K>> = class
            .iter()
            .map(|&(i, j)| meet(c.line(i - 1), c.line(j - 1)))
            .collect::<Result<_>>()?;
        let mut line = None;
        'pairs: for a in 0..pts.len() {
            for b in (a + 1)..pts.len() {
                if let Ok(l) = ProjLine2::through(&pts[a], &pts[b]) {
                    line = Some(l);
                    break 'pairs;
                }
            }
        }
        let line = line.ok_or_else(|| Error::DegenerateOperator {
            slot: k,
            detail: "all points of S_k coincide".into(),
        })?;
        if !pts.iter().all(|p| p.on_line(&line)) {
            return Err(Error::DegenerateOperator {
                slot: k,
                detail: "points of S_k are not collinear".into(),
            });
        }
        out.push(line);
    }
    LabeledArrangement::new(out)
}

/// The unique projective map with g·Aᵢ = Bᵢ for all i, when it exists.
pub fn proj_equivalent<K: Scalar>(
    a: &LabeledArrangement<K>,
    b: &LabeledArrangement<K>,
) -> Result<Option<ProjMap2<K>>> {
    assert!(a.len() == b.len() && a.len() >= 4);
    let fa: [ProjLine2<K>; 4] = std::array::from_fn(|i| a.line(i).clone());
    let fb: [ProjLine2<K>; 4] = std::array::from_fn(|i| b.line(i).clone());
    let g = frame_map(&fa, &fb)?;
    for i in 0..a.len() {
        if g.apply_line(a.line(i)) != *b.line(i) {
            return Ok(None);
        }
    }
    Ok(Some(g))
}
