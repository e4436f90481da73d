//! Integer partitions stored densely as weakly decreasing part lists.
//!
//! Recurrences index parts positionally, so the dense form is the primary
//! representation; multiplicities are computed on demand.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::ParseError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn from_parts<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The one-part partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_parts([n])
    }

    /// `[1^n]`.
    pub fn column(n: usize) -> Self {
        Self::rectangle(1, n)
    }

    /// `[k^m]`.
    pub fn rectangle(k: usize, m: usize) -> Self {
        Self::from_parts(core::iter::repeat(k).take(m))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `m_i(λ)`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Pairs `(i, m_i)` for every distinct part, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Distinct part values, largest first.
    pub fn distinct_parts(&self) -> Vec<usize> {
        self.multiplicities().into_iter().map(|(v, _)| v).collect()
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .fold(BigUint::one(), |acc, (i, m)| {
                acc * BigUint::from(i).pow(m as u32) * factorial(m)
            })
    }

    /// `Aut_λ = ∏ m_i!`.
    pub fn aut(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .fold(BigUint::one(), |acc, (_, m)| acc * factorial(m))
    }

    /// Product of the parts' factorials.
    pub fn factorial_product(&self) -> BigUint {
        self.parts
            .iter()
            .fold(BigUint::one(), |acc, &p| acc * factorial(p))
    }

    /// Size of the conjugacy class `C_λ` of `S_n`, i.e. `n!/z_λ`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.weight()) / self.z()
    }

    /// Ordered choice count `m_{i_1,…,i_k}(λ)`: ways to pick a part equal to
    /// `i_1`, then a different part equal to `i_2`, and so on.
    pub fn mult_count(&self, values: &[usize]) -> u64 {
        let mut taken: Vec<usize> = Vec::with_capacity(values.len());
        let mut total = 1u64;
        for &v in values {
            let avail = self.multiplicity(v) as i64 - taken.iter().filter(|&&t| t == v).count() as i64;
            if v == 0 || avail <= 0 {
                return 0;
            }
            total *= avail as u64;
            taken.push(v);
        }
        total
    }

    /// Removes one part equal to each entry of `remove` and inserts the
    /// entries of `add`. Zero parts in `add` vanish. Absent when a removed
    /// value is missing.
    pub fn replace(&self, remove: &[usize], add: &[usize]) -> Option<Partition> {
        let mut parts = self.parts.clone();
        for &r in remove {
            let pos = parts.iter().position(|&p| p == r)?;
            parts.remove(pos);
        }
        parts.extend(add.iter().copied());
        Some(Self::from_parts(parts))
    }

    /// `λ ∪ ρ`.
    pub fn union(&self, other: &Partition) -> Partition {
        Self::from_parts(self.parts.iter().chain(other.parts.iter()).copied())
    }

    /// Adds one part `i`.
    pub fn with_part(&self, i: usize) -> Partition {
        self.replace(&[], &[i]).expect("insertion always succeeds")
    }

    /// Removes one part `i`.
    pub fn without_part(&self, i: usize) -> Option<Partition> {
        self.replace(&[i], &[])
    }

    /// Removes every part equal to `i`, returning the rest and the count.
    pub fn strip(&self, i: usize) -> (Partition, usize) {
        let rest = Partition { parts: self.parts.iter().copied().filter(|&p| p != i).collect() };
        (rest, self.multiplicity(i))
    }

    /// Componentwise `λ − κ` with `κ` aligned to the parts of `λ`; zero
    /// differences are dropped and the result resorted.
    pub fn minus(&self, kappa: &[usize]) -> Option<Partition> {
        if kappa.len() != self.parts.len() {
            return None;
        }
        let mut out = Vec::with_capacity(kappa.len());
        for (&l, &k) in self.parts.iter().zip(kappa) {
            out.push(l.checked_sub(k)?);
        }
        Some(Self::from_parts(out))
    }

    /// Applies a named surgery; see [`Surgery`].
    pub fn surgery(&self, op: Surgery) -> Option<Partition> {
        op.apply(self)
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.first();
        Partition {
            parts: (1..=first).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect(),
        }
    }

    /// Dominance order `self ≥ other`, both of the same weight.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

/// The part-surgery family used by the recurrences.
///
/// Down operations lower or merge parts: `↓(i)` replaces `i` by `i−1`,
/// `↓(i,j)` replaces `i, j` by `i+j−1`, and the doubled/tripled variants
/// subtract 2 or 3 instead. Up operations split: `↑(i,j)` replaces
/// `i+j+1` by `i, j`, `↑↑` uses `i+j+2`, `↑↑↑(i,j)` uses `i+j+3` and
/// `↑↑↑(i,j,k)` replaces `i+j+k+3` by three parts. Split pieces must be
/// positive; merged or lowered results may hit zero and disappear.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surgery {
    Down(usize),
    DownMerge(usize, usize),
    Up(usize, usize),
    DoubleDown(usize),
    DoubleDownMerge(usize, usize),
    DoubleUp(usize, usize),
    TripleDown(usize),
    TripleDownMerge(usize, usize),
    TripleDownMerge3(usize, usize, usize),
    TripleUp(usize, usize),
    TripleUp3(usize, usize, usize),
}

impl Surgery {
    pub fn apply(self, lambda: &Partition) -> Option<Partition> {
        use Surgery::*;
        fn lowered(total: usize, by: usize) -> Option<usize> {
            total.checked_sub(by)
        }
        fn pieces(p: &[usize]) -> Option<()> {
            if p.iter().all(|&x| x > 0) {
                Some(())
            } else {
                None
            }
        }
        match self {
            Down(i) => lambda.replace(&[i], &[lowered(i, 1)?]),
            DoubleDown(i) => lambda.replace(&[i], &[lowered(i, 2)?]),
            TripleDown(i) => lambda.replace(&[i], &[lowered(i, 3)?]),
            DownMerge(i, j) => lambda.replace(&[i, j], &[lowered(i + j, 1)?]),
            DoubleDownMerge(i, j) => lambda.replace(&[i, j], &[lowered(i + j, 2)?]),
            TripleDownMerge(i, j) => lambda.replace(&[i, j], &[lowered(i + j, 3)?]),
            TripleDownMerge3(i, j, k) => lambda.replace(&[i, j, k], &[lowered(i + j + k, 3)?]),
            Up(i, j) => {
                pieces(&[i, j])?;
                lambda.replace(&[i + j + 1], &[i, j])
            }
            DoubleUp(i, j) => {
                pieces(&[i, j])?;
                lambda.replace(&[i + j + 2], &[i, j])
            }
            TripleUp(i, j) => {
                pieces(&[i, j])?;
                lambda.replace(&[i + j + 3], &[i, j])
            }
            TripleUp3(i, j, k) => {
                pieces(&[i, j, k])?;
                lambda.replace(&[i + j + k + 3], &[i, j, k])
            }
        }
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Partitions of `n` accepted by `keep`, same order as [`partitions_of`].
pub fn partitions_where<F: Fn(&Partition) -> bool>(n: usize, keep: F) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| keep(p)).collect()
}

/// True when all parts but at most one are `≤ 3`.
pub fn at_most_one_large_part(p: &Partition) -> bool {
    p.parts.iter().filter(|&&x| x > 3).count() <= 1
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Accepts `4,2,1`, `(4,2,1)`, `[2^3]`, `[3 1^2]`, `[3,1^2]` and the empty
/// forms `""`, `()`, `[]`.
impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')))
            .unwrap_or(t);
        let mut parts = Vec::new();
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let bad = || ParseError::Partition(String::from(s));
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let base: usize = base.parse().map_err(|_| bad())?;
            if base == 0 {
                return Err(bad());
            }
            parts.extend(core::iter::repeat(base).take(exp));
        }
        Ok(Partition::from_parts(parts))
    }
}
