//! Labelled star hypermaps as rotation systems with twisted edges, their
//! faces and orientability, root deletion, and the measure of
//! non-orientability `ϑ`.
//!
//! Edges are `0..n` (label `e+1`). Black vertex `i` carries the consecutive
//! block of edges after those of vertices `0..i`. A map is stored in
//! canonical form: the smallest edge at every black vertex is untwisted.

mod census;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::EnumerationError;
use crate::partition::Partition;

pub use census::{
    enumerate_labelled, labelled_count, monopole_census, theorem_h_check, Census, TheoremHReport, TheoremHRow,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootClass {
    Leaf,
    CrossBorder,
    Border,
    Handle,
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootClass::Leaf => "leaf",
            RootClass::CrossBorder => "cross-border",
            RootClass::Border => "border",
            RootClass::Handle => "handle",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StarHypermap {
    /// Black-vertex degrees in label order.
    blocks: Vec<usize>,
    /// Successor of each edge around the white vertex.
    white: Vec<usize>,
    /// Successor of each edge around its black vertex.
    black: Vec<usize>,
    twist: Vec<bool>,
}

impl StarHypermap {
    /// Builds and canonicalizes; `None` if the data are inconsistent.
    pub fn new(blocks: Vec<usize>, white: Vec<usize>, black: Vec<usize>, twist: Vec<bool>) -> Option<Self> {
        let n: usize = blocks.iter().sum();
        if white.len() != n || black.len() != n || twist.len() != n || blocks.contains(&0) {
            return None;
        }
        if !single_cycle(&white) {
            return None;
        }
        let mut start = 0;
        for &d in &blocks {
            let block = start..start + d;
            if !block.clone().all(|e| block.contains(&black[e])) || !single_cycle_on(&black, block.clone()) {
                return None;
            }
            start += d;
        }
        let mut m = StarHypermap { blocks, white, black, twist };
        m.canonicalize();
        Some(m)
    }

    pub fn n(&self) -> usize {
        self.white.len()
    }

    /// Black-vertex degrees in label order.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn nu(&self) -> Partition {
        Partition::from_parts(self.blocks.iter().copied())
    }

    pub fn white_rotation(&self) -> &[usize] {
        &self.white
    }

    pub fn black_rotation(&self) -> &[usize] {
        &self.black
    }

    pub fn twists(&self) -> &[bool] {
        &self.twist
    }

    fn block_of(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n());
        let mut start = 0;
        for (v, &d) in self.blocks.iter().enumerate() {
            for _ in 0..d {
                out.push((v, start));
            }
            start += d;
        }
        out
    }

    /// Flips every black vertex whose smallest edge is twisted.
    pub fn canonicalize(&mut self) {
        let mut start = 0;
        for &d in &self.blocks.clone() {
            if self.twist[start] {
                self.flip_black(start, d);
            }
            start += d;
        }
    }

    /// Reverses the rotation at the black vertex owning `start..start+d`
    /// and toggles the twists of its edges.
    fn flip_black(&mut self, start: usize, d: usize) {
        let mut rev = self.black.clone();
        for e in start..start + d {
            rev[self.black[e]] = e;
            self.twist[e] = !self.twist[e];
        }
        self.black = rev;
    }

    /// Flips the white vertex: the mirror image.
    pub fn mirror(&self) -> StarHypermap {
        let mut m = self.clone();
        for e in 0..self.n() {
            m.white[self.white[e]] = e;
            m.twist[e] = !m.twist[e];
        }
        m.canonicalize();
        m
    }

    /// Face degrees from a walk on `4n` flags `(edge, end, side)`.
    pub fn face_degrees(&self) -> Partition {
        let n = self.n();
        let flag = |e: usize, end: usize, s: usize| 4 * e + 2 * end + s;
        let mut corner = vec![0; 4 * n];
        let mut along = vec![0; 4 * n];
        for e in 0..n {
            for (end, succ) in [(0, &self.white), (1, &self.black)] {
                let (a, b) = (flag(e, end, 1), flag(succ[e], end, 0));
                corner[a] = b;
                corner[b] = a;
            }
            for s in 0..2 {
                let t = if self.twist[e] { s } else { 1 - s };
                along[flag(e, 0, s)] = flag(e, 1, t);
                along[flag(e, 1, t)] = flag(e, 0, s);
            }
        }
        let mut seen = vec![false; 4 * n];
        let mut degrees = Vec::new();
        for s in 0..4 * n {
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
            degrees.push(len / 4);
        }
        Partition::from_parts(degrees)
    }

    /// Whether some set of vertex flips clears every twist.
    pub fn is_orientable(&self) -> bool {
        // Node 0 is the white vertex, node v+1 the black vertex v.
        let nodes = self.blocks.len() + 1;
        let mut parent: Vec<usize> = (0..nodes).collect();
        let mut parity = vec![false; nodes];
        fn find(parent: &mut [usize], parity: &mut [bool], x: usize) -> (usize, bool) {
            if parent[x] == x {
                return (x, false);
            }
            let (r, p) = find(parent, parity, parent[x]);
            parent[x] = r;
            parity[x] ^= p;
            (r, parity[x])
        }
        for (e, (v, _)) in self.block_of().into_iter().enumerate() {
            let (ra, pa) = find(&mut parent, &mut parity, 0);
            let (rb, pb) = find(&mut parent, &mut parity, v + 1);
            if ra == rb {
                if pa ^ pb != self.twist[e] {
                    return false;
                }
            } else {
                parent[rb] = ra;
                parity[rb] = pa ^ pb ^ self.twist[e];
            }
        }
        true
    }

    /// `(1 + ℓ(ν)) − n + ℓ(λ)`.
    pub fn euler_characteristic(&self) -> isize {
        (1 + self.blocks.len()) as isize - self.n() as isize + self.face_degrees().len() as isize
    }

    /// Removes edge 0 and renames every other edge one lower.
    pub fn delete_root(&self) -> StarHypermap {
        let n = self.n();
        assert!(n > 0, "the empty map has no root");
        let pred = |succ: &[usize], e: usize| succ.iter().position(|&x| x == e).expect("permutation");
        let mut white = self.white.clone();
        let mut black = self.black.clone();
        let pw = pred(&white, 0);
        white[pw] = white[0];
        let pb = pred(&black, 0);
        black[pb] = black[0];
        let shift = |v: &[usize]| v[1..].iter().map(|&x| x - 1).collect::<Vec<_>>();
        let mut blocks = self.blocks.clone();
        if blocks[0] == 1 {
            blocks.remove(0);
        } else {
            blocks[0] -= 1;
        }
        let mut m = StarHypermap { blocks, white: shift(&white), black: shift(&black), twist: self.twist[1..].to_vec() };
        m.canonicalize();
        m
    }

    /// The map whose root ribbon carries the opposite twist.
    pub fn twist_root(&self) -> StarHypermap {
        let mut m = self.clone();
        m.twist[0] = !m.twist[0];
        m.canonicalize();
        m
    }

    /// Root type, read off the change in the number of faces.
    pub fn classify_root(&self) -> RootClass {
        if self.blocks[0] == 1 {
            return RootClass::Leaf;
        }
        let before = self.face_degrees().len() as isize;
        let after = self.delete_root().face_degrees().len() as isize;
        match after - before {
            0 => RootClass::CrossBorder,
            -1 => RootClass::Border,
            1 => RootClass::Handle,
            d => unreachable!("deleting one edge changed the face count by {d}"),
        }
    }

    /// `τ(M)`, defined only when the root is a handle.
    pub fn checked_twist_root(&self) -> Result<StarHypermap, EnumerationError> {
        if self.n() == 0 || self.classify_root() != RootClass::Handle {
            return Err(EnumerationError::NotAHandle);
        }
        Ok(self.twist_root())
    }

    /// `ϑ(M)` together with the root types met on the way to the empty map.
    pub fn theta_trace(&self) -> (usize, Vec<RootClass>) {
        let mut trace = Vec::with_capacity(self.n());
        let mut total = 0;
        let mut m = self.clone();
        while m.n() > 0 {
            let class = m.classify_root();
            trace.push(class);
            total += match class {
                RootClass::Leaf | RootClass::Border => 0,
                RootClass::CrossBorder => 1,
                RootClass::Handle => m.handle_increment(),
            };
            m = m.delete_root();
        }
        (total, trace)
    }

    pub fn theta(&self) -> usize {
        self.theta_trace().0
    }

    /// Which of `M`, `τ(M)` gets `ϑ(M')` and which `1 + ϑ(M')`: the
    /// orientable one (at most one is) gets the former; failing that, the
    /// lexicographically smaller encoding does.
    fn handle_increment(&self) -> usize {
        if self.is_orientable() {
            return 0;
        }
        let tau = self.twist_root();
        if tau.is_orientable() {
            return 1;
        }
        (*self > tau) as usize
    }
}

fn single_cycle(succ: &[usize]) -> bool {
    single_cycle_on(succ, 0..succ.len())
}

fn single_cycle_on(succ: &[usize], range: core::ops::Range<usize>) -> bool {
    let len = range.len();
    if len == 0 {
        return true;
    }
    let start = range.start;
    let mut x = start;
    for step in 1..=len {
        x = succ[x];
        if !range.contains(&x) {
            return false;
        }
        if x == start {
            return step == len;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_parallel(twisted: bool) -> StarHypermap {
        StarHypermap::new(vec![2], vec![1, 0], vec![1, 0], vec![false, twisted]).unwrap()
    }

    #[test]
    fn small_faces() {
        let one = StarHypermap::new(vec![1], vec![0], vec![0], vec![false]).unwrap();
        assert_eq!(one.face_degrees(), Partition::row(1));
        assert_eq!(two_parallel(false).face_degrees(), Partition::column(2));
        assert_eq!(two_parallel(true).face_degrees(), Partition::row(2));
        assert_eq!(two_parallel(true).euler_characteristic(), 1);
    }

    #[test]
    fn orientability() {
        assert!(two_parallel(false).is_orientable());
        assert!(!two_parallel(true).is_orientable());
        // A lone twisted edge is cleared by one flip.
        let m = StarHypermap::new(vec![1, 1], vec![1, 0], vec![0, 1], vec![false, true]).unwrap();
        assert!(m.is_orientable());
    }

    #[test]
    fn projective_map_has_theta_one() {
        let m = two_parallel(true);
        assert_eq!(m.classify_root(), RootClass::CrossBorder);
        assert_eq!(m.theta(), 1);
        assert_eq!(two_parallel(false).theta(), 0);
        assert_eq!(two_parallel(false).classify_root(), RootClass::Border);
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let m = two_parallel(true);
        let mut again = m.clone();
        again.canonicalize();
        assert_eq!(again, m);
        assert_eq!(m.mirror().mirror(), m);
    }
}
