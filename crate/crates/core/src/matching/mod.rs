//! Perfect matchings on `{1, 1̂, …, n, n̂}`, the canonical pair `(g_n, b_λ)`,
//! the cycle-type statistic `Λ`, and a brute-force class-algebra oracle.
//!
//! Vertex `i` (1-based) is stored as `2(i−1)` and `î` as `2(i−1)+1`, so
//! `g_n` is `v ↦ v ^ 1` and a vertex is a hat iff it is odd.

mod labelled;
mod weight;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::EnumerationError;
use crate::partition::{partitions_of, Partition};

pub use labelled::{labelled_matchings, Deletion, DeletionOrder, LabelledMatching};
pub use weight::{hexagon_class, theorem_a_check, weight, HexClass, TheoremAReport, TheoremARow};

/// A vertex as `(i, hat)`, `1 ≤ i ≤ n`.
pub type Endpoint = (usize, bool);

/// Default cap on `n` for exhaustive scans.
pub const DEFAULT_BUDGET: usize = 8;

pub fn vertex(i: usize, hat: bool) -> usize {
    2 * (i - 1) + hat as usize
}

pub fn is_hat(v: usize) -> bool {
    v % 2 == 1
}

/// A fixpoint-free involution on `2n` points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    partner: Vec<usize>,
}

impl Matching {
    /// From a partner table; `None` unless it is a fixpoint-free involution.
    pub fn from_partner(partner: Vec<usize>) -> Option<Self> {
        let ok = partner.len() % 2 == 0
            && partner.iter().enumerate().all(|(v, &w)| w < partner.len() && w != v && partner[w] == v);
        ok.then_some(Matching { partner })
    }

    /// From 1-based `(i, hat)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(Endpoint, Endpoint)]) -> Option<Self> {
        let mut partner = vec![usize::MAX; 2 * n];
        for &((a, ha), (b, hb)) in pairs {
            if a == 0 || b == 0 || a > n || b > n {
                return None;
            }
            let (x, y) = (vertex(a, ha), vertex(b, hb));
            partner[x] = y;
            partner[y] = x;
        }
        Self::from_partner(partner)
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.partner.iter().enumerate().filter(|(v, &w)| *v < w).map(|(v, &w)| (v, w)).collect()
    }

    /// `g_n`: `i ↔ î`.
    pub fn gray(n: usize) -> Matching {
        Matching { partner: (0..2 * n).map(|v| v ^ 1).collect() }
    }

    /// `b_λ`: `î ↔ i+1` inside each block of `λ`, wrapping at block ends.
    pub fn black(lambda: &Partition) -> Matching {
        let n = lambda.weight();
        let mut partner = vec![0; 2 * n];
        let mut start = 0;
        for &part in lambda.parts() {
            for p in start..start + part {
                let next = if p + 1 == start + part { start } else { p + 1 };
                partner[2 * p + 1] = 2 * next;
                partner[2 * next] = 2 * p + 1;
            }
            start += part;
        }
        Matching { partner }
    }

    /// Every edge joins a hat to a non-hat.
    pub fn is_bipartite(&self) -> bool {
        self.partner.iter().enumerate().all(|(v, &w)| is_hat(v) != is_hat(w))
    }

    /// `Λ(self, other)`: half-lengths of the cycles of the union.
    pub fn cycle_type(&self, other: &Matching) -> Partition {
        Partition::from_parts(union_cycles(&self.partner, &other.partner).iter().map(|c| c.len() / 2))
    }
}

/// Cycles of the union of two partner tables, each listed from its minimum
/// vertex by following `a` first.
pub(crate) fn union_cycles(a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; a.len()];
    let mut out = Vec::new();
    for s in 0..a.len() {
        if seen[s] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut v = s;
        loop {
            seen[v] = true;
            cyc.push(v);
            let w = a[v];
            seen[w] = true;
            cyc.push(w);
            v = b[w];
            if v == s {
                break;
            }
        }
        out.push(cyc);
    }
    out
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |v: usize| (v / 2 + 1, if is_hat(v) { "^" } else { "" });
        f.write_str("{")?;
        for (k, (u, v)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let (a, ha) = name(u);
            let (b, hb) = name(v);
            write!(f, "{a}{ha}-{b}{hb}")?;
        }
        f.write_str("}")
    }
}

fn check_budget(n: usize, budget: usize) -> Result<(), EnumerationError> {
    if n > budget {
        return Err(EnumerationError::BudgetExceeded { n, budget });
    }
    Ok(())
}

/// Calls `f` on each of the `(2n−1)!!` matchings on `2n` points.
pub fn for_each_matching(n: usize, budget: usize, mut f: impl FnMut(&Matching)) -> Result<(), EnumerationError> {
    check_budget(n, budget)?;
    let mut m = Matching { partner: vec![usize::MAX; 2 * n] };
    fn rec(m: &mut Matching, f: &mut dyn FnMut(&Matching)) {
        let Some(u) = m.partner.iter().position(|&x| x == usize::MAX) else {
            f(m);
            return;
        };
        for v in u + 1..m.partner.len() {
            if m.partner[v] == usize::MAX {
                m.partner[u] = v;
                m.partner[v] = u;
                rec(m, f);
                m.partner[u] = usize::MAX;
                m.partner[v] = usize::MAX;
            }
        }
    }
    rec(&mut m, &mut f);
    Ok(())
}

/// `G^λ_{μ,ν}`, each matching flagged bipartite or not.
pub fn enumerate_g(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    budget: usize,
) -> Result<Vec<(Matching, bool)>, EnumerationError> {
    let n = lambda.weight();
    if mu.weight() != n || nu.weight() != n {
        return Err(EnumerationError::ShapeMismatch("lambda, mu, nu must have one weight"));
    }
    let g = Matching::gray(n);
    let b = Matching::black(lambda);
    let mut out = Vec::new();
    for_each_matching(n, budget, |d| {
        if &g.cycle_type(d) == mu && &b.cycle_type(d) == nu {
            out.push((d.clone(), d.is_bipartite()));
        }
    })?;
    Ok(out)
}

/// `|G^λ_{μ,ν}|` and its bipartite part, per `(λ, ν)`, for fixed `μ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchingCounts {
    pub n: usize,
    pub mu: Partition,
    counts: BTreeMap<(Partition, Partition), (u64, u64)>,
}

impl MatchingCounts {
    pub fn total(&self, lambda: &Partition, nu: &Partition) -> u64 {
        self.counts.get(&(lambda.clone(), nu.clone())).map_or(0, |c| c.0)
    }

    pub fn bipartite(&self, lambda: &Partition, nu: &Partition) -> u64 {
        self.counts.get(&(lambda.clone(), nu.clone())).map_or(0, |c| c.1)
    }
}

/// One scan of all matchings, tallied by `(λ, Λ(b_λ, δ))` over those with
/// `Λ(g_n, δ) = μ`.
pub fn matching_counts(mu: &Partition, budget: usize) -> Result<MatchingCounts, EnumerationError> {
    let n = mu.weight();
    let g = Matching::gray(n);
    let blacks: Vec<(Partition, Matching)> = partitions_of(n).into_iter().map(|l| {
        let b = Matching::black(&l);
        (l, b)
    }).collect();
    let mut counts: BTreeMap<(Partition, Partition), (u64, u64)> = BTreeMap::new();
    for_each_matching(n, budget, |d| {
        if &g.cycle_type(d) != mu {
            return;
        }
        let bip = d.is_bipartite() as u64;
        for (l, b) in &blacks {
            let e = counts.entry((l.clone(), b.cycle_type(d))).or_default();
            e.0 += 1;
            e.1 += bip;
        }
    })?;
    Ok(MatchingCounts { n, mu: mu.clone(), counts })
}

/// `|G^ρ_{λ,ν}|` for every `λ`, at fixed `ρ` and `ν`: matchings with
/// `Λ(b_ρ, δ) = ν`, tallied by `Λ(g_n, δ)`.
pub fn gray_type_counts(rho: &Partition, nu: &Partition, budget: usize) -> Result<BTreeMap<Partition, u64>, EnumerationError> {
    let n = rho.weight();
    if nu.weight() != n {
        return Err(EnumerationError::ShapeMismatch("rho and nu must have one weight"));
    }
    let g = Matching::gray(n);
    let b = Matching::black(rho);
    let mut out = BTreeMap::new();
    for_each_matching(n, budget, |d| {
        if &b.cycle_type(d) == nu {
            *out.entry(g.cycle_type(d)).or_insert(0) += 1;
        }
    })?;
    Ok(out)
}

/// Permutations of `0..n` as image tables.
fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    fn heap(k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

fn perm_type(p: &[u8]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut parts = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            v = p[v] as usize;
            len += 1;
        }
        if len > 0 {
            parts.push(len);
        }
    }
    Partition::from_parts(parts)
}

/// A fixed permutation of cycle type `λ`, cycles on consecutive blocks.
fn canonical_perm(lambda: &Partition) -> Vec<u8> {
    let mut p = Vec::with_capacity(lambda.weight());
    let mut start = 0;
    for &part in lambda.parts() {
        for k in 0..part {
            p.push((start + (k + 1) % part) as u8);
        }
        start += part;
    }
    p
}

/// `c^λ_{μν}` for every `(λ, ν)` at fixed `μ`: the number of `σ ∈ C_μ` with
/// `σ^{-1} π ∈ C_ν` for one fixed `π ∈ C_λ`.
pub fn class_algebra_row(mu: &Partition, budget: usize) -> Result<BTreeMap<(Partition, Partition), u64>, EnumerationError> {
    let n = mu.weight();
    check_budget(n, budget)?;
    let sigmas: Vec<Vec<u8>> = permutations(n).into_iter().filter(|s| &perm_type(s) == mu).collect();
    let mut out = BTreeMap::new();
    for lambda in partitions_of(n) {
        let pi = canonical_perm(&lambda);
        for s in &sigmas {
            let mut inv = vec![0u8; n];
            for (i, &x) in s.iter().enumerate() {
                inv[x as usize] = i as u8;
            }
            // τ = σ^{-1} ∘ π
            let tau: Vec<u8> = pi.iter().map(|&x| inv[x as usize]).collect();
            *out.entry((lambda.clone(), perm_type(&tau))).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// `c^λ_{μν} = [C_λ] C_μ C_ν` by brute force.
pub fn class_algebra_c(lambda: &Partition, mu: &Partition, nu: &Partition, budget: usize) -> Result<u64, EnumerationError> {
    if lambda.weight() != mu.weight() || nu.weight() != mu.weight() {
        return Err(EnumerationError::ShapeMismatch("lambda, mu, nu must have one weight"));
    }
    Ok(class_algebra_row(mu, budget)?.get(&(lambda.clone(), nu.clone())).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_pair() {
        let b = Matching::black(&p("2"));
        assert_eq!(b.partner(vertex(1, true)), vertex(2, false));
        assert_eq!(b.partner(vertex(2, true)), vertex(1, false));
        assert_eq!(Matching::black(&p("1,1")), Matching::gray(2));
        for l in partitions_of(5) {
            assert_eq!(Matching::gray(5).cycle_type(&Matching::black(&l)), l);
        }
    }

    #[test]
    fn cycle_types() {
        let g = Matching::gray(3);
        assert_eq!(g.cycle_type(&g), p("1,1,1"));
        let d = Matching::from_pairs(2, &[((1, false), (2, false)), ((1, true), (2, true))]).unwrap();
        assert_eq!(Matching::gray(2).cycle_type(&d), p("2"));
        assert!(!d.is_bipartite());
    }

    #[test]
    fn small_counts() {
        let g = enumerate_g(&p("2"), &p("2"), &p("2"), 8).unwrap();
        assert_eq!(g.len(), 1);
        let mut total = 0;
        for_each_matching(4, 8, |_| total += 1).unwrap();
        assert_eq!(total, 105);
        assert!(for_each_matching(9, 8, |_| ()).is_err());
    }

    #[test]
    fn class_algebra() {
        assert_eq!(class_algebra_c(&p("1,1,1"), &p("3"), &p("3"), 7).unwrap(), 2);
        assert_eq!(class_algebra_c(&p("2,1"), &p("3"), &p("3"), 7).unwrap(), 0);
        assert!(class_algebra_c(&p("8"), &p("8"), &p("8"), 7).is_err());
    }

    #[test]
    fn gray_types_agree_with_enumerate_g() {
        for nu in partitions_of(4) {
            let counts = gray_type_counts(&p("4"), &nu, 8).unwrap();
            for l in partitions_of(4) {
                let want = enumerate_g(&p("4"), &l, &nu, 8).unwrap().len() as u64;
                assert_eq!(counts.get(&l).copied().unwrap_or(0), want);
            }
        }
        assert!(gray_type_counts(&p("3"), &p("2"), 8).is_err());
    }
}
