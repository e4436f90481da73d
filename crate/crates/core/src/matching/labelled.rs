//! Labelled matchings and the edge-deletion procedure.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{enumerate_g, is_hat, union_cycles, Matching};
use crate::error::EnumerationError;
use crate::partition::Partition;

const DEAD: usize = usize::MAX;

/// `δ ∈ G^λ_{(n),ν}` plus, for every `i > 1`, a bijection from the cycles of
/// `b_λ ∪ δ` of half-length `i` to `{1, …, m_i(ν)}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LabelledMatching {
    pub lambda: Partition,
    pub delta: Matching,
    /// Keyed by the minimum vertex of the cycle.
    labels: BTreeMap<usize, usize>,
}

/// Within-cycle order in which the δ-edges of a cycle are removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeletionOrder {
    /// Always the edge at the smallest remaining vertex.
    Ascending,
    Descending,
}

/// Outcome of deleting one cycle (or one edge) of `b ∪ δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deletion {
    pub result: LabelledMatching,
    /// Removed δ-edges, in the vertex names of the input.
    pub removed: Vec<(usize, usize)>,
    /// Every removed edge joins a hat to a non-hat.
    pub bipartite: bool,
    /// Number of cycles of `g_n ∪ b_λ` the removed vertices meet.
    pub components: usize,
}

impl LabelledMatching {
    /// Labels every non-trivial cycle in order of its minimum vertex.
    pub fn with_default_labels(lambda: Partition, delta: Matching) -> Self {
        let b = Matching::black(&lambda);
        let mut next: BTreeMap<usize, usize> = BTreeMap::new();
        let mut labels = BTreeMap::new();
        for c in union_cycles(b.partners(), delta.partners()) {
            let half = c.len() / 2;
            if half > 1 {
                let l = next.entry(half).or_insert(0);
                *l += 1;
                labels.insert(c[0], *l);
            }
        }
        LabelledMatching { lambda, delta, labels }
    }

    pub fn n(&self) -> usize {
        self.delta.n()
    }

    pub fn nu(&self) -> Partition {
        Matching::black(&self.lambda).cycle_type(&self.delta)
    }

    /// Cycles of `b_λ ∪ δ`, each from its minimum vertex.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        union_cycles(Matching::black(&self.lambda).partners(), self.delta.partners())
    }

    /// Label of the cycle through `v`, if it has one.
    pub fn label_at(&self, v: usize) -> Option<usize> {
        self.cycles().into_iter().find(|c| c.contains(&v)).and_then(|c| self.labels.get(&c[0]).copied())
    }

    pub fn labels(&self) -> &BTreeMap<usize, usize> {
        &self.labels
    }

    /// The cycle removed when the smallest part of `ν` is `i`: for `i = 1`
    /// the fixed point with the smallest vertex, otherwise the cycle of
    /// half-length `i` with the largest label.
    pub fn target_cycle(&self, i: usize) -> Option<Vec<usize>> {
        let cycles = self.cycles();
        if i == 1 {
            return cycles.into_iter().find(|c| c.len() == 2);
        }
        let top = self.nu().multiplicity(i);
        cycles.into_iter().find(|c| c.len() == 2 * i && self.labels.get(&c[0]) == Some(&top))
    }

    /// Deletes the target cycle of half-length `i` edge by edge.
    pub fn delete_cycle(&self, i: usize, order: DeletionOrder) -> Result<Deletion, EnumerationError> {
        let cycle = self.target_cycle(i).ok_or(EnumerationError::NoSuchCycle(i))?;
        let mut verts = cycle.clone();
        verts.sort_unstable();
        let mut frame = Frame::new(&self.lambda, &self.delta);
        let components = frame.components_meeting(&verts);
        let mut removed = Vec::new();
        loop {
            let alive = verts.iter().copied().filter(|&v| frame.alive(v));
            let u = match order {
                DeletionOrder::Ascending => alive.min(),
                DeletionOrder::Descending => alive.max(),
            };
            let Some(u) = u else { break };
            removed.push(frame.delete_edge(u));
        }
        Ok(self.finish(frame, removed, components, Some(cycle[0])))
    }

    /// Deletes the single δ-edge at `u`. Labels of the result are
    /// reassigned, so this is meant for `ℓ(ν) = 1`.
    pub fn delete_edge(&self, u: usize) -> Deletion {
        let mut frame = Frame::new(&self.lambda, &self.delta);
        let components = frame.components_meeting(&[u, self.delta.partner(u)]);
        let e = frame.delete_edge(u);
        self.finish(frame, vec![e], components, None)
    }

    fn finish(&self, frame: Frame, mut removed: Vec<(usize, usize)>, components: usize, gone: Option<usize>) -> Deletion {
        for e in &mut removed {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        let bipartite = removed.iter().all(|&(u, v)| is_hat(u) != is_hat(v));
        let (lambda, rename) = frame.relabel();
        let n = lambda.weight();
        let mut partner = vec![0; 2 * n];
        for (v, &w) in frame.d.iter().enumerate() {
            if w != DEAD {
                partner[rename[v]] = rename[w];
            }
        }
        let delta = Matching::from_partner(partner).expect("relabelled involution");
        // Surviving cycles of b ∪ δ are untouched, so labels carry over.
        let mut labels = BTreeMap::new();
        for c in self.cycles() {
            if Some(c[0]) == gone || !frame.alive(c[0]) {
                continue;
            }
            if let Some(&l) = self.labels.get(&c[0]) {
                let key = c.iter().map(|&v| rename[v]).min().expect("nonempty cycle");
                labels.insert(key, l);
            }
        }
        // A single-edge deletion shortens a cycle in place; label afresh.
        if gone.is_none() {
            labels = LabelledMatching::with_default_labels(lambda.clone(), delta.clone()).labels;
        }
        Deletion { result: LabelledMatching { lambda, delta, labels }, removed, bipartite, components }
    }
}

/// `g`, `b`, `δ` on the original vertex names, with deleted vertices marked.
#[derive(Clone, Debug)]
pub(crate) struct Frame {
    pub g: Vec<usize>,
    pub b: Vec<usize>,
    pub d: Vec<usize>,
}

impl Frame {
    pub fn new(lambda: &Partition, delta: &Matching) -> Self {
        Frame {
            g: Matching::gray(lambda.weight()).partners().to_vec(),
            b: Matching::black(lambda).partners().to_vec(),
            d: delta.partners().to_vec(),
        }
    }

    /// Frame with δ replaced by the given pairs only; the rest of δ is
    /// irrelevant to how `g` and `b` are rewired.
    pub fn with_pairs(lambda: &Partition, pairs: &[(usize, usize)]) -> Self {
        let n = lambda.weight();
        let mut d = vec![DEAD; 2 * n];
        for &(u, v) in pairs {
            d[u] = v;
            d[v] = u;
        }
        Frame { g: Matching::gray(n).partners().to_vec(), b: Matching::black(lambda).partners().to_vec(), d }
    }

    pub fn alive(&self, v: usize) -> bool {
        self.g[v] != DEAD
    }

    pub fn components_meeting(&self, verts: &[usize]) -> usize {
        union_cycles(&self.g, &self.b).iter().filter(|c| c.iter().any(|v| verts.contains(v))).count()
    }

    /// Removes `u` and `δ(u)`, joins their gray partners and, unless the
    /// edge was also black, their black partners.
    pub fn delete_edge(&mut self, u: usize) -> (usize, usize) {
        let v = self.d[u];
        let (gu, gv, bu, bv) = (self.g[u], self.g[v], self.b[u], self.b[v]);
        for x in [u, v] {
            self.g[x] = DEAD;
            self.b[x] = DEAD;
            self.d[x] = DEAD;
        }
        if gu != v {
            self.g[gu] = gv;
            self.g[gv] = gu;
        }
        if bu != v {
            self.b[bu] = bv;
            self.b[bv] = bu;
        }
        (u, v)
    }

    /// Cycle type of the surviving `g ∪ b`.
    pub fn lambda(&self) -> Partition {
        Partition::from_parts(self.live_cycles().iter().map(|c| c.len() / 2))
    }

    fn live_cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.g.len()];
        let mut out = Vec::new();
        for s in 0..self.g.len() {
            if seen[s] || !self.alive(s) {
                continue;
            }
            let mut cyc = Vec::new();
            let mut v = s;
            loop {
                seen[v] = true;
                cyc.push(v);
                let w = self.g[v];
                seen[w] = true;
                cyc.push(w);
                v = self.b[w];
                if v == s {
                    break;
                }
            }
            out.push(cyc);
        }
        out
    }

    /// Renames the survivors so that `g` and `b` become `g_{n'}` and
    /// `b_{λ'}`. Each cycle keeps its old hat/non-hat colouring when that is
    /// still proper, and is otherwise recoloured from its minimum vertex.
    /// Cycles go longest first (ties by minimum vertex), each walked from
    /// its smallest non-hat vertex along `g` first.
    pub fn relabel(&self) -> (Partition, Vec<usize>) {
        let mut cycles = self.live_cycles();
        for c in &mut cycles {
            c.sort_unstable();
        }
        cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        let mut rename = vec![DEAD; self.g.len()];
        let mut pos = 0;
        for c in &cycles {
            let proper = c.iter().all(|&v| is_hat(v) != is_hat(self.g[v]) && is_hat(v) != is_hat(self.b[v]));
            let start = if proper {
                *c.iter().find(|&&v| !is_hat(v)).expect("a proper cycle has a non-hat")
            } else {
                c[0]
            };
            let half = c.len() / 2;
            let mut v = start;
            for k in 0..half {
                rename[v] = 2 * (pos + k);
                let w = self.g[v];
                rename[w] = 2 * (pos + k) + 1;
                v = self.b[w];
            }
            debug_assert_eq!(v, start);
            pos += half;
        }
        (Partition::from_parts(cycles.iter().map(|c| c.len() / 2)), rename)
    }
}

/// Every labelled matching over `G^λ_{(n),ν}`.
pub fn labelled_matchings(lambda: &Partition, nu: &Partition, budget: usize) -> Result<Vec<LabelledMatching>, EnumerationError> {
    let n = lambda.weight();
    let mut out = Vec::new();
    let b = Matching::black(lambda);
    for (delta, _) in enumerate_g(lambda, &Partition::row(n), nu, budget)? {
        let mut by_size: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in union_cycles(b.partners(), delta.partners()) {
            if c.len() > 2 {
                by_size.entry(c.len() / 2).or_default().push(c[0]);
            }
        }
        let groups: Vec<Vec<usize>> = by_size.into_values().collect();
        let mut labels = BTreeMap::new();
        fn assign(
            groups: &[Vec<usize>],
            labels: &mut BTreeMap<usize, usize>,
            emit: &mut dyn FnMut(&BTreeMap<usize, usize>),
        ) {
            let Some((first, rest)) = groups.split_first() else {
                emit(labels);
                return;
            };
            for perm in permutations(first.len()) {
                for (k, &key) in first.iter().enumerate() {
                    labels.insert(key, perm[k] + 1);
                }
                assign(rest, labels, emit);
            }
        }
        assign(&groups, &mut labels, &mut |l| {
            out.push(LabelledMatching { lambda: lambda.clone(), delta: delta.clone(), labels: l.clone() })
        });
    }
    Ok(out)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::vertex;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn relabel_is_canonical_on_the_identity() {
        let l = p("3,2");
        let f = Frame::new(&l, &Matching::black(&l));
        let (lp, rename) = f.relabel();
        assert_eq!(lp, l);
        assert!(rename.iter().enumerate().all(|(v, &w)| v == w));
    }

    #[test]
    fn labelled_counts() {
        // ν = (2,2): two squares can be labelled in 2 ways.
        let l = p("2,1,1");
        let nu = p("2,2");
        let plain = enumerate_g(&l, &p("4"), &nu, 8).unwrap().len();
        assert_eq!(labelled_matchings(&l, &nu, 8).unwrap().len(), 2 * plain);
    }

    #[test]
    fn single_edge_deletion() {
        let d = Matching::from_pairs(2, &[((1, false), (2, false)), ((1, true), (2, true))]).unwrap();
        let m = LabelledMatching::with_default_labels(p("2"), d);
        let del = m.delete_edge(vertex(2, false));
        assert!(!del.bipartite);
        assert_eq!(del.result.n(), 1);
        assert_eq!(del.result.lambda, p("1"));
    }
}
