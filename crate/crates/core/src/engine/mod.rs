//! Connection coefficients `a^λ_{n,ν}` and `h^λ_{n,ν}` via the operator
//! tower, their normalized variants, and the recurrence route.

mod recur;
mod report;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::error::EngineError;
use crate::partition::{factorial, partitions_of, Partition};
use crate::powersum::{p1_over_alpha_fn, OperatorTower, PSFun};
use crate::ratfunc::RatFunc;

pub use recur::Recurrences;
pub use report::{check_table, ConjectureReport, Violation, ViolationKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoeffKind {
    A,
    H,
    ATilde,
    HTilde,
}

impl CoeffKind {
    pub fn name(self) -> &'static str {
        match self {
            CoeffKind::A => "a",
            CoeffKind::H => "h",
            CoeffKind::ATilde => "a~",
            CoeffKind::HTilde => "h~",
        }
    }
}

impl fmt::Display for CoeffKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoeffKind {
    type Err = EngineError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" => Ok(CoeffKind::A),
            "h" => Ok(CoeffKind::H),
            "a~" | "at" | "atilde" | "ã" => Ok(CoeffKind::ATilde),
            "h~" | "ht" | "htilde" | "h̃" => Ok(CoeffKind::HTilde),
            _ => Err(EngineError::ShapeMismatch("unknown coefficient kind")),
        }
    }
}

/// One coefficient per `λ ⊢ n`, zeros included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    pub n: usize,
    pub nu: Partition,
    pub kind: CoeffKind,
    entries: BTreeMap<Partition, RatFunc>,
}

impl CoeffTable {
    pub fn from_fn<F: FnMut(&Partition) -> RatFunc>(n: usize, nu: Partition, kind: CoeffKind, mut f: F) -> Self {
        let entries = partitions_of(n).into_iter().map(|l| {
            let v = f(&l);
            (l, v)
        });
        CoeffTable { n, nu, kind, entries: entries.collect() }
    }

    pub fn get(&self, lambda: &Partition) -> &RatFunc {
        &self.entries[lambda]
    }

    /// Rows in reverse-lexicographic order of `λ`.
    pub fn rows(&self) -> Vec<(Partition, RatFunc)> {
        partitions_of(self.n).into_iter().map(|l| {
            let v = self.entries[&l].clone();
            (l, v)
        }).collect()
    }

    fn map(&self, kind: CoeffKind, f: impl Fn(&Partition, &RatFunc) -> RatFunc) -> CoeffTable {
        CoeffTable::from_fn(self.n, self.nu.clone(), kind, |l| f(l, &self.entries[l]))
    }

    fn expect_kind(&self, kind: CoeffKind) -> Result<(), EngineError> {
        if self.kind != kind {
            return Err(EngineError::ShapeMismatch("table has the wrong kind"));
        }
        Ok(())
    }
}

fn check_shape(n: usize, nu: &Partition) -> Result<(), EngineError> {
    if nu.weight() != n || n == 0 {
        return Err(EngineError::NotAPartitionOf { nu: nu.clone(), n });
    }
    Ok(())
}

fn big(x: num_bigint::BigUint) -> RatFunc {
    RatFunc::from_biguint(x)
}

/// `h^λ = α n z_λ^{−1} α^{−ℓ(λ)} a^λ`.
pub fn h_from_a(table: &CoeffTable) -> Result<CoeffTable, EngineError> {
    table.expect_kind(CoeffKind::A)?;
    let n = table.n;
    Ok(table.map(CoeffKind::H, |l, a| {
        let c = &RatFunc::alpha_pow(1 - l.len() as i64).scale_int(&BigInt::from(n)) / &big(l.z());
        &c * a
    }))
}

/// `ã = (Aut_ν / m₁(ν)!) a`.
pub fn a_tilde(table: &CoeffTable) -> Result<CoeffTable, EngineError> {
    table.expect_kind(CoeffKind::A)?;
    let c = &big(table.nu.aut()) / &big(factorial(table.nu.multiplicity(1)));
    Ok(table.map(CoeffKind::ATilde, |_, a| &c * a))
}

/// `h̃ = (m! k!^m / n) h` for `ν = [k^m]`.
pub fn h_tilde(table: &CoeffTable) -> Result<CoeffTable, EngineError> {
    table.expect_kind(CoeffKind::H)?;
    let (k, m) = rectangle_shape(&table.nu).ok_or(EngineError::ShapeMismatch("h~ needs a rectangular nu"))?;
    let c = &big(factorial(m) * factorial(k).pow(m as u32)) / &RatFunc::from_int(table.n as i64);
    Ok(table.map(CoeffKind::HTilde, |_, h| &c * h))
}

/// `(k, m)` when `ν = [k^m]`.
pub fn rectangle_shape(nu: &Partition) -> Option<(usize, usize)> {
    let k = nu.first();
    (k > 0 && nu.parts().iter().all(|&p| p == k)).then_some((k, nu.len()))
}

/// Theorem 1 route: `F = (1/∏ν_i!) Ω_{ν₂}⋯Ω_{ν_p} Δ^{ν₁−1}(p₁/α)`.
#[derive(Clone, Debug)]
pub struct CoefficientEngine {
    tower: OperatorTower,
}

impl CoefficientEngine {
    /// Handles every `n ≤ n_max`.
    pub fn new(n_max: usize) -> Self {
        let n_max = n_max.max(1);
        CoefficientEngine { tower: OperatorTower::build_partial(n_max, (n_max / 2).max(1)) }
    }

    pub fn from_tower(tower: OperatorTower) -> Self {
        CoefficientEngine { tower }
    }

    pub fn tower(&self) -> &OperatorTower {
        &self.tower
    }

    pub fn n_max(&self) -> usize {
        self.tower.bound()
    }

    /// The series `F`, Ω factors applied with `ν_p` innermost.
    pub fn series(&self, n: usize, nu: &Partition) -> Result<PSFun, EngineError> {
        let tail: Vec<usize> = nu.parts()[1..].iter().rev().copied().collect();
        self.series_ordered(n, nu, &tail)
    }

    /// `F` with the `Ω` factors applied in `order`, first entry innermost.
    /// `order` must be a rearrangement of `ν₂, …, ν_p`.
    pub fn series_ordered(&self, n: usize, nu: &Partition, order: &[usize]) -> Result<PSFun, EngineError> {
        check_shape(n, nu)?;
        let mut sorted = order.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted != nu.parts()[1..] {
            return Err(EngineError::ShapeMismatch("order is not a rearrangement of the tail of nu"));
        }
        if n > self.tower.bound() {
            return Err(crate::error::OperatorError::DegreeOverflow { requested: n, bound: self.tower.bound() }.into());
        }
        let mut f = p1_over_alpha_fn();
        for _ in 1..nu.first() {
            f = self.tower.delta().apply(&f)?;
        }
        for &k in order {
            let op = self.tower.omega(k).ok_or(crate::error::OperatorError::DegreeOverflow {
                requested: n,
                bound: self.tower.bound(),
            })?;
            f = op.apply(&f)?;
        }
        Ok(f.scale(&(&RatFunc::one() / &big(nu.factorial_product()))))
    }

    pub fn a_table(&self, n: usize, nu: &Partition) -> Result<CoeffTable, EngineError> {
        let f = self.series(n, nu)?;
        Ok(Self::extract(n, nu, &f))
    }

    pub fn a_table_ordered(&self, n: usize, nu: &Partition, order: &[usize]) -> Result<CoeffTable, EngineError> {
        let f = self.series_ordered(n, nu, order)?;
        Ok(Self::extract(n, nu, &f))
    }

    /// `a^λ = z_λ α^{ℓ(λ)} [p_λ]F / Aut_ν`.
    fn extract(n: usize, nu: &Partition, f: &PSFun) -> CoeffTable {
        let aut = big(nu.aut());
        CoeffTable::from_fn(n, nu.clone(), CoeffKind::A, |l| {
            let c = f.coeff(l);
            if c.is_zero() {
                return c;
            }
            &(&c * &RatFunc::alpha_pow(l.len() as i64).scale_int(&BigInt::from(l.z()))) / &aut
        })
    }

    pub fn table(&self, kind: CoeffKind, n: usize, nu: &Partition) -> Result<CoeffTable, EngineError> {
        let a = self.a_table(n, nu)?;
        match kind {
            CoeffKind::A => Ok(a),
            CoeffKind::ATilde => a_tilde(&a),
            CoeffKind::H => h_from_a(&a),
            CoeffKind::HTilde => h_tilde(&h_from_a(&a)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_tables() {
        let e = CoefficientEngine::new(4);
        let t2 = e.a_table(2, &p("2")).unwrap();
        assert_eq!(t2.get(&p("2")).to_string(), "a-1");
        assert_eq!(t2.get(&p("1,1")).to_string(), "a");
        let t3 = e.a_table(3, &p("3")).unwrap();
        assert_eq!(t3.get(&p("3")).to_beta().unwrap().symbolic(), "2*b^2+b+1");
        assert_eq!(t3.get(&p("1,1,1")).to_string(), "2*a^2");
        assert_eq!(t3.get(&p("2,1")).to_string(), "2*a^2-2*a");
        let t21 = e.a_table(3, &p("2,1")).unwrap();
        assert_eq!(t21.get(&p("2,1")).to_string(), "2*a");
    }

    #[test]
    fn normalizations() {
        let e = CoefficientEngine::new(3);
        let h = h_from_a(&e.a_table(2, &p("2")).unwrap()).unwrap();
        assert_eq!(h.get(&p("2")).to_string(), "a-1");
        assert_eq!(h.get(&p("1,1")).to_string(), "1");
        let h1 = e.table(CoeffKind::H, 1, &p("1")).unwrap();
        assert_eq!(h1.get(&p("1")).to_string(), "1");
        let ht = e.table(CoeffKind::HTilde, 2, &p("2")).unwrap();
        assert_eq!(ht.get(&p("2")).to_beta().unwrap().symbolic(), "b");
        assert_eq!(ht.get(&p("1,1")).to_string(), "1");
        let ht3 = e.table(CoeffKind::HTilde, 3, &p("3")).unwrap();
        assert_eq!(ht3.get(&p("3")).to_beta().unwrap().symbolic(), "4*b^2+2*b+2");
        assert!(e.table(CoeffKind::HTilde, 3, &p("2,1")).is_err());
        assert!(h_from_a(&h).is_err());
    }

    #[test]
    fn bad_shapes() {
        let e = CoefficientEngine::new(3);
        assert!(matches!(e.a_table(3, &p("2")), Err(EngineError::NotAPartitionOf { .. })));
        assert!(e.a_table(5, &p("5")).is_err());
    }
}
