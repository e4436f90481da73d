//! The recursive weight on labelled matchings and its aggregate check.

use alloc::vec;
use alloc::vec::Vec;

use super::labelled::{labelled_matchings, DeletionOrder, Frame, LabelledMatching};
use super::{is_hat, Matching};
use crate::engine::Recurrences;
use crate::error::EnumerationError;
use crate::partition::{partitions_of, Partition};
use crate::ratfunc::BetaPoly;

/// How a deleted hexagon sits in `g_n ∪ b_λ`, by the number of components
/// it meets and the change in `ℓ(λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HexClass {
    /// One component, length kept: `λ_i` shrinks by 3.
    S1,
    /// Three components merged.
    S2,
    /// One component split in three.
    S3,
    /// Two components merged.
    S4,
    /// Two components rearranged into two.
    S5,
    /// One component split in two.
    S6,
}

pub fn hexagon_class(components: usize, delta_len: isize) -> Option<HexClass> {
    Some(match (components, delta_len) {
        (1, 0) => HexClass::S1,
        (3, -2) => HexClass::S2,
        (1, 2) => HexClass::S3,
        (2, -1) => HexClass::S4,
        (2, 0) => HexClass::S5,
        (1, 1) => HexClass::S6,
        _ => return None,
    })
}

/// Weights handed out, by lexicographic rank, to the non-bipartite
/// hexagons that share a vertex set and a result shape.
fn class_weights(class: HexClass, rank: usize) -> usize {
    match class {
        HexClass::S1 => [1, 2, 2][rank.min(2)],
        HexClass::S2 => if rank < 4 { 1 } else { 2 },
        HexClass::S4 => if rank < 2 { 1 } else { 2 },
        HexClass::S3 | HexClass::S5 | HexClass::S6 => 1,
    }
}

/// All perfect matchings of a sorted vertex list.
fn pairings(verts: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&first, rest)) = verts.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for (k, &w) in rest.iter().enumerate() {
        let mut others = rest.to_vec();
        others.remove(k);
        for mut p in pairings(&others) {
            p.insert(0, (first, w));
            out.push(p);
        }
    }
    out
}

/// `b ∪ P` is one cycle through all of `verts`.
fn closes_single_cycle(b: &Matching, pairs: &[(usize, usize)], len: usize) -> bool {
    let other = |v: usize| pairs.iter().find_map(|&(x, y)| if x == v { Some(y) } else if y == v { Some(x) } else { None });
    let start = pairs[0].0;
    let mut v = start;
    let mut steps = 0;
    loop {
        let Some(w) = other(v) else { return false };
        v = b.partner(w);
        steps += 2;
        if v == start {
            return steps == len;
        }
    }
}

/// `g ∪ P` has no cycle.
fn gray_acyclic(n: usize, pairs: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..2 * n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let g = Matching::gray(n);
    let inside: Vec<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut edges: Vec<(usize, usize)> = pairs.to_vec();
    for &u in &inside {
        let w = g.partner(u);
        if u < w {
            edges.push((u, w));
        } else if !inside.contains(&w) {
            edges.push((w, u));
        }
    }
    for (u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

fn shape_after(lambda: &Partition, pairs: &[(usize, usize)]) -> Partition {
    let mut f = Frame::with_pairs(lambda, pairs);
    let mut verts: Vec<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    for v in verts {
        if f.alive(v) {
            f.delete_edge(v);
        }
    }
    f.lambda()
}

fn pairs_bipartite(pairs: &[(usize, usize)]) -> bool {
    pairs.iter().all(|&(u, v)| is_hat(u) != is_hat(v))
}

/// Weight added by deleting the target hexagon, whose δ-edges are
/// `actual`: 0 if bipartite, otherwise by rank among the non-bipartite
/// hexagons on the same vertices that leave a valid matching of the same
/// shape.
fn hexagon_weight(m: &LabelledMatching, actual: &[(usize, usize)], class: HexClass) -> usize {
    if pairs_bipartite(actual) {
        return 0;
    }
    let mut verts: Vec<usize> = actual.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    let b = Matching::black(&m.lambda);
    let shape = shape_after(&m.lambda, actual);
    let mut group: Vec<Vec<(usize, usize)>> = pairings(&verts)
        .into_iter()
        .filter(|p| !pairs_bipartite(p))
        .filter(|p| closes_single_cycle(&b, p, 6) && gray_acyclic(m.n(), p))
        .filter(|p| shape_after(&m.lambda, p) == shape)
        .collect();
    group.sort();
    let mut key = actual.to_vec();
    key.sort();
    let rank = group.iter().position(|p| *p == key).expect("the actual hexagon is in its own group");
    class_weights(class, rank)
}

/// `wt(δ)`, defined by deleting the smallest part of `ν` recursively, or
/// one edge at a time when `ν = (n)`.
pub fn weight(m: &LabelledMatching) -> Result<usize, EnumerationError> {
    let n = m.n();
    if n <= 1 {
        return Ok(0);
    }
    let nu = m.nu();
    if nu.len() == 1 {
        let del = m.delete_edge(super::vertex(n, false));
        return Ok(!del.bipartite as usize + weight(&del.result)?);
    }
    let i = *nu.parts().last().expect("nonempty");
    let del = m.delete_cycle(i, DeletionOrder::Ascending)?;
    let add = match i {
        1 => 0,
        2 => !del.bipartite as usize,
        3 => {
            let dl = del.result.lambda.len() as isize - m.lambda.len() as isize;
            let class = hexagon_class(del.components, dl).ok_or(EnumerationError::ShapeMismatch("unclassified hexagon"))?;
            hexagon_weight(m, &del.removed, class)
        }
        _ => return Err(EnumerationError::OutOfScope(nu)),
    };
    Ok(add + weight(&del.result)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremARow {
    pub lambda: Partition,
    /// Number of labelled matchings of each weight.
    pub histogram: Vec<u64>,
    pub expected: BetaPoly,
    /// Labelled matchings with weight 0 that are not bipartite, or bipartite
    /// with positive weight.
    pub bipartite_mismatches: u64,
    /// Labelled matchings with weight above `n − ℓ(ν)`.
    pub out_of_range: u64,
}

impl TheoremARow {
    pub fn ok(&self) -> bool {
        BetaPoly::from_counts(&self.histogram) == self.expected && self.bipartite_mismatches == 0 && self.out_of_range == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremAReport {
    pub nu: Partition,
    pub rows: Vec<TheoremARow>,
}

impl TheoremAReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(TheoremARow::ok)
    }
}

/// Compares `Σ β^{wt}` over labelled matchings with `ã^λ_{(n),ν}(1+β)` for
/// every `λ ⊢ n`, and checks the bipartite and degree statements.
pub fn theorem_a_check(nu: &Partition, budget: usize) -> Result<TheoremAReport, EnumerationError> {
    let n = nu.weight();
    let bound = n - nu.len();
    let mut rec = Recurrences::new();
    let mut rows = Vec::new();
    for lambda in partitions_of(n) {
        let expected = rec
            .a_tilde(&lambda, nu)
            .map_err(|_| EnumerationError::OutOfScope(nu.clone()))?
            .to_beta()
            .map_err(|_| EnumerationError::ShapeMismatch("a-tilde is not a polynomial"))?;
        let mut histogram = Vec::new();
        let (mut bad_bip, mut bad_range) = (0, 0);
        for lm in labelled_matchings(&lambda, nu, budget)? {
            let w = weight(&lm)?;
            if histogram.len() <= w {
                histogram.resize(w + 1, 0);
            }
            histogram[w] += 1;
            if (w == 0) != lm.delta.is_bipartite() {
                bad_bip += 1;
            }
            if w > bound {
                bad_range += 1;
            }
        }
        rows.push(TheoremARow { lambda, histogram, expected, bipartite_mismatches: bad_bip, out_of_range: bad_range });
    }
    Ok(TheoremAReport { nu: nu.clone(), rows })
}
