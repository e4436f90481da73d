//! Exhaustive enumeration of labelled star hypermaps and the aggregate
//! checks run over it.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::StarHypermap;
use crate::engine::{CoeffKind, CoefficientEngine};
use crate::error::EnumerationError;
use crate::partition::{factorial, Partition};
use crate::ratfunc::BetaPoly;

/// Cyclic orders of `items` as successor assignments, the first item fixed.
fn cyclic_orders(items: &[usize], mut f: impl FnMut(&[(usize, usize)])) {
    let Some((&first, rest)) = items.split_first() else {
        return;
    };
    let mut rest = rest.to_vec();
    let mut succ = Vec::with_capacity(items.len());
    type Visit<'a> = dyn FnMut(&[(usize, usize)]) + 'a;
    fn heap(k: usize, rest: &mut [usize], first: usize, succ: &mut Vec<(usize, usize)>, f: &mut Visit<'_>) {
        if k <= 1 {
            succ.clear();
            let mut prev = first;
            for &x in rest.iter() {
                succ.push((prev, x));
                prev = x;
            }
            succ.push((prev, first));
            f(succ);
            return;
        }
        for i in 0..k {
            heap(k - 1, rest, first, succ, f);
            if k % 2 == 0 {
                rest.swap(i, k - 1);
            } else {
                rest.swap(0, k - 1);
            }
        }
    }
    let k = rest.len();
    heap(k, &mut rest, first, &mut succ, &mut f);
}

/// Calls `f` on every labelled star hypermap whose black vertices have the
/// given degrees, in label order. No quotient by the mirror image.
pub fn enumerate_labelled(blocks: &[usize], budget: usize, mut f: impl FnMut(&StarHypermap)) -> Result<(), EnumerationError> {
    let n: usize = blocks.iter().sum();
    if n > budget {
        return Err(EnumerationError::BudgetExceeded { n, budget });
    }
    if n == 0 || blocks.contains(&0) {
        return Err(EnumerationError::ShapeMismatch("black vertices need positive degrees"));
    }
    let mut starts = Vec::new();
    let mut s = 0;
    for &d in blocks {
        starts.push(s);
        s += d;
    }
    let free: Vec<usize> = (0..n).filter(|e| !starts.contains(e)).collect();
    let all: Vec<usize> = (0..n).collect();
    let mut m = StarHypermap { blocks: blocks.to_vec(), white: vec![0; n], black: vec![0; n], twist: vec![false; n] };

    fn blacks(m: &mut StarHypermap, starts: &[usize], v: usize, free: &[usize], f: &mut dyn FnMut(&StarHypermap)) {
        if v == starts.len() {
            for mask in 0u64..1 << free.len() {
                for (i, &e) in free.iter().enumerate() {
                    m.twist[e] = mask >> i & 1 == 1;
                }
                f(m);
            }
            return;
        }
        let block: Vec<usize> = (starts[v]..starts[v] + m.blocks[v]).collect();
        cyclic_orders(&block, |succ| {
            for &(a, b) in succ {
                m.black[a] = b;
            }
            blacks(m, starts, v + 1, free, f);
        });
    }
    cyclic_orders(&all, |succ| {
        for &(a, b) in succ {
            m.white[a] = b;
        }
        blacks(&mut m, &starts, 0, &free, &mut f);
    });
    Ok(())
}

/// `(n−1)! ((k−1)!)^m 2^{(k−1)m}`: every labelled star hypermap with
/// `m` black vertices of degree `k`.
pub fn labelled_count(k: usize, m: usize) -> BigUint {
    let n = k * m;
    factorial(n - 1) * factorial(k - 1).pow(m as u32) * (BigUint::from(1u32) << ((k - 1) * m))
}

/// Maps of each face type: `(total, orientable)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub by_lambda: BTreeMap<Partition, (u64, u64)>,
}

impl Census {
    pub fn total(&self) -> u64 {
        self.by_lambda.values().map(|v| v.0).sum()
    }

    fn add(&mut self, lambda: Partition, orientable: bool) {
        let e = self.by_lambda.entry(lambda).or_default();
        e.0 += 1;
        e.1 += orientable as u64;
    }

    pub fn generic(blocks: &[usize], budget: usize) -> Result<Census, EnumerationError> {
        let mut c = Census::default();
        enumerate_labelled(blocks, budget, |m| c.add(m.face_degrees(), m.is_orientable()))?;
        Ok(c)
    }
}

/// Census of `ν = [2^m]` through labelled monopoles: one vertex with
/// half-edges `0..2m`, loop `i` joining `2i` and `2i+1`, each loop twisted
/// or not. Independent of the hypermap encoding.
pub fn monopole_census(m: usize, budget: usize) -> Result<Census, EnumerationError> {
    let n = 2 * m;
    if n > budget {
        return Err(EnumerationError::BudgetExceeded { n, budget });
    }
    let mut census = Census::default();
    let all: Vec<usize> = (0..n).collect();
    let mut succ = vec![0; n];
    cyclic_orders(&all, |pairs| {
        for &(a, b) in pairs {
            succ[a] = b;
        }
        for mask in 0u64..1 << m {
            let twisted = |h: usize| mask >> (h / 2) & 1 == 1;
            // Flags (half-edge, side); the corner after h meets side 0 of succ(h).
            let flag = |h: usize, s: usize| 2 * h + s;
            let mut corner = vec![0; 2 * n];
            let mut along = vec![0; 2 * n];
            for h in 0..n {
                let (a, b) = (flag(h, 1), flag(succ[h], 0));
                corner[a] = b;
                corner[b] = a;
                for s in 0..2 {
                    let t = if twisted(h) { s } else { 1 - s };
                    along[flag(h, s)] = flag(h ^ 1, t);
                }
            }
            let mut seen = vec![false; 2 * n];
            let mut degrees = Vec::new();
            for s in 0..2 * n {
                if seen[s] {
                    continue;
                }
                let mut len = 0;
                let mut x = s;
                loop {
                    seen[x] = true;
                    let y = corner[x];
                    seen[y] = true;
                    len += 2;
                    x = along[y];
                    if x == s {
                        break;
                    }
                }
                degrees.push(len / 2);
            }
            census.add(Partition::from_parts(degrees), mask == 0);
        }
    });
    Ok(census)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremHRow {
    pub lambda: Partition,
    /// Number of maps with each value of `ϑ`.
    pub histogram: Vec<u64>,
    pub expected: BetaPoly,
    /// Maps with `ϑ = 0` that are not orientable, or the reverse.
    pub orientable_mismatches: u64,
    /// Maps with `ϑ > n + 1 − ℓ(λ) − m`.
    pub out_of_range: u64,
}

impl TheoremHRow {
    pub fn ok(&self) -> bool {
        BetaPoly::from_counts(&self.histogram) == self.expected && self.orientable_mismatches == 0 && self.out_of_range == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremHReport {
    pub k: usize,
    pub m: usize,
    pub rows: Vec<TheoremHRow>,
    /// Maps with `χ > 2`, or orientable with odd `χ`.
    pub euler_violations: u64,
    pub total: u64,
}

impl TheoremHReport {
    pub fn passed(&self) -> bool {
        self.euler_violations == 0
            && BigUint::from(self.total) == labelled_count(self.k, self.m)
            && self.rows.iter().all(TheoremHRow::ok)
    }
}

/// Compares `Σ_M β^{ϑ(M)}` over maps with `ν = [k^m]` and face type `λ`
/// against `h̃^λ_{n,[k^m]}(1+β)` for every `λ ⊢ n`.
pub fn theorem_h_check(k: usize, m: usize, engine: &CoefficientEngine, budget: usize) -> Result<TheoremHReport, EnumerationError> {
    let n = k * m;
    let nu = Partition::rectangle(k, m);
    let table = engine
        .table(CoeffKind::HTilde, n, &nu)
        .map_err(|_| EnumerationError::ShapeMismatch("no h-tilde table for this shape"))?;
    let mut hist: BTreeMap<Partition, (Vec<u64>, u64, u64)> = BTreeMap::new();
    let (mut euler, mut total) = (0, 0);
    enumerate_labelled(&vec![k; m], budget, |map| {
        let lambda = map.face_degrees();
        let orientable = map.is_orientable();
        let chi = (1 + m) as isize - n as isize + lambda.len() as isize;
        if chi > 2 || (orientable && chi % 2 != 0) {
            euler += 1;
        }
        let bound = (n + 1).saturating_sub(lambda.len() + m);
        let t = map.theta();
        let e = hist.entry(lambda).or_default();
        if e.0.len() <= t {
            e.0.resize(t + 1, 0);
        }
        e.0[t] += 1;
        if (t == 0) != orientable {
            e.1 += 1;
        }
        if t > bound {
            e.2 += 1;
        }
        total += 1;
    })?;
    let mut rows = Vec::new();
    for (lambda, value) in table.rows() {
        let expected = value.to_beta().map_err(|_| EnumerationError::ShapeMismatch("h-tilde is not a polynomial"))?;
        let (histogram, orientable_mismatches, out_of_range) = hist.remove(&lambda).unwrap_or_default();
        rows.push(TheoremHRow { lambda, histogram, expected, orientable_mismatches, out_of_range });
    }
    Ok(TheoremHReport { k, m, rows, euler_violations: euler, total })
}
