//! Rank-3 matroids given by their non-bases, permutation groups acting
//! on the atoms, and the two combinatorial matroids M₇ and M₈ attached
//! to the heptagon and octagon configurations.

use std::collections::{BTreeSet, VecDeque};

use crate::arrangements::LabeledArrangement;
use crate::projgeom::det3;
use crate::scalar::Scalar;

/// A permutation of {1, …, n} in one-line notation: `map[i-1]` is the
/// image of i.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (1..=n).collect(),
        }
    }

    pub fn from_one_line(map: Vec<usize>) -> Self {
        let mut seen = vec![false; map.len()];
        for &v in &map {
            assert!(v >= 1 && v <= map.len() && !seen[v - 1], "not a permutation");
            seen[v - 1] = true;
        }
        Permutation { map }
    }

    /// Cycles use 1-based atoms; omitted atoms are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Self {
        let mut map: Vec<usize> = (1..=n).collect();
        for cyc in cycles {
            for w in 0..cyc.len() {
                map[cyc[w] - 1] = cyc[(w + 1) % cyc.len()];
            }
        }
        Permutation::from_one_line(map)
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1]
    }

    /// (a∘b)(i) = a(b(i)).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Permutation {
            map: other.map.iter().map(|&i| self.map[i - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v - 1] = i + 1;
        }
        Permutation { map }
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let id = Permutation::identity(self.n());
        let mut k = 1;
        while p != id {
            p = p.compose(self);
            k += 1;
        }
        k
    }
}

/// A simple rank-3 matroid on atoms {1, …, n}, presented by its set of
/// dependent triples (non-bases), stored sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank3Matroid {
    pub n: usize,
    pub nonbases: BTreeSet<[usize; 3]>,
}

impl Rank3Matroid {
    pub fn new(n: usize, triples: impl IntoIterator<Item = [usize; 3]>) -> Self {
        let mut nonbases = BTreeSet::new();
        for mut t in triples {
            t.sort_unstable();
            assert!(t[0] >= 1 && t[2] <= n && t[0] < t[1] && t[1] < t[2]);
            nonbases.insert(t);
        }
        Rank3Matroid { n, nonbases }
    }

    /// The matroid of a line arrangement: a triple is dependent iff the
    /// three lines are concurrent (their normals are coplanar).
    pub fn from_arrangement<K: Scalar>(arr: &LabeledArrangement<K>) -> Self {
        let n = arr.len();
        let mut triples = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    if det3(&arr.line(i).n, &arr.line(j).n, &arr.line(k).n).is_zero() {
                        triples.push([i + 1, j + 1, k + 1]);
                    }
                }
            }
        }
        Rank3Matroid::new(n, triples)
    }

    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        if p.n() != self.n {
            return false;
        }
        self.nonbases.iter().all(|t| {
            let mut im = [p.apply(t[0]), p.apply(t[1]), p.apply(t[2])];
            im.sort_unstable();
            self.nonbases.contains(&im)
        })
    }

    /// Weak-order comparison: every non-basis of `self` is one of `other`.
    pub fn refines(&self, other: &Rank3Matroid) -> bool {
        self.n == other.n && self.nonbases.is_subset(&other.nonbases)
    }
}

/// The subgroup generated by `gens`, by breadth-first closure.
pub fn group_closure(gens: &[Permutation]) -> Vec<Permutation> {
    assert!(!gens.is_empty());
    let n = gens[0].n();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let id = Permutation::identity(n);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.into_iter().collect()
}

/// The published generators of aut(M₇) (and the fibration-trivial σ₀)
/// as permutations of the 14 atoms.
pub fn sigma1_m7() -> Permutation {
    Permutation::from_cycles(14, crate::consts::SIGMA1_CYCLES)
}
pub fn sigma2_m7() -> Permutation {
    Permutation::from_cycles(14, crate::consts::SIGMA2_CYCLES)
}
pub fn sigma0_m7() -> Permutation {
    Permutation::from_cycles(14, crate::consts::SIGMA0_CYCLES)
}

/// The published generators of aut(M₈) and the λ-commuting involution s,
/// as permutations of the 16 atoms.
pub fn s1_m8() -> Permutation {
    Permutation::from_cycles(16, crate::consts::S1_CYCLES_M8)
}
pub fn s2_m8() -> Permutation {
    Permutation::from_cycles(16, crate::consts::S2_CYCLES_M8)
}
pub fn s3_m8() -> Permutation {
    Permutation::from_cycles(16, crate::consts::S3_CYCLES_M8)
}
pub fn s_lambda_m8() -> Permutation {
    Permutation::from_cycles(16, crate::consts::S_LAMBDA_CYCLES_M8)
}

/// M₇ on 14 atoms: lines 1–7 and their images 8–14 under the labeled
/// operator. With γ(i) the position of i in the 7-cycle of σ₁, the
/// dependent triples are {a, b, 7+c} for the unique c with
/// 2γ(c) ≡ γ(a)+γ(b) (mod 7).
pub fn matroid_m7() -> Rank3Matroid {
    let cycle = crate::consts::SIGMA1_CYCLES[0];
    let mut gamma = [0usize; 8];
    for (pos, &i) in cycle.iter().enumerate() {
        gamma[i] = pos;
    }
    let mut inv_two_gamma = [0usize; 7]; // 2γ(c) mod 7 → c
    for c in 1..=7 {
        inv_two_gamma[2 * gamma[c] % 7] = c;
    }
    let mut triples = Vec::new();
    for a in 1..=7usize {
        for b in (a + 1)..=7 {
            let c = inv_two_gamma[(gamma[a] + gamma[b]) % 7];
            triples.push([a, b, 7 + c]);
        }
    }
    Rank3Matroid::new(14, triples)
}

/// M₈ on 16 atoms: lines 1–8 and their images 9–16. The dependent
/// triples are {i, j, 8+k} for each pair {i,j} in the partition class
/// S_k.
pub fn matroid_m8() -> Rank3Matroid {
    let mut triples = Vec::new();
    for (k, class) in crate::consts::S8_PARTITION.iter().enumerate() {
        for &(i, j) in class.iter() {
            triples.push([i, j, 8 + (k + 1)]);
        }
    }
    Rank3Matroid::new(16, triples)
}
