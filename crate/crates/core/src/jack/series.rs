use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{jack_gram_schmidt, JackTable};
use crate::engine::{CoeffKind, CoeffTable};
use crate::error::EngineError;
use crate::partition::{partitions_of, Partition};
use crate::ratfunc::RatFunc;

/// Sparse element of `Λ(x) ⊗ Λ(y) ⊗ Λ(z)` on `p_λ(x) p_μ(y) p_ν(z)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TripleSeries {
    terms: BTreeMap<(Partition, Partition, Partition), RatFunc>,
}

impl TripleSeries {
    pub fn coeff(&self, l: &Partition, m: &Partition, n: &Partition) -> RatFunc {
        self.terms.get(&(l.clone(), m.clone(), n.clone())).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: (Partition, Partition, Partition), c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TripleSeries, c: &RatFunc) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), &(v * c));
        }
    }

    pub fn mul(&self, other: &TripleSeries) -> TripleSeries {
        let mut out = TripleSeries::default();
        for ((a, b, c), x) in &self.terms {
            for ((d, e, f), y) in &other.terms {
                out.add_term((a.union(d), b.union(e), c.union(f)), &(x * y));
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition, Partition), &RatFunc)> {
        self.terms.iter()
    }
}

/// Jack tables for every degree `≤ n_max`, with extraction of
/// `a^λ_{μν}` from `Φ` and `h^λ_{μν}` from `Ψ = α t ∂_t log Φ`.
#[derive(Clone, Debug)]
pub struct JackOracle {
    tables: Vec<JackTable>,
}

impl JackOracle {
    pub fn new(n_max: usize) -> Self {
        JackOracle { tables: (0..=n_max).map(jack_gram_schmidt).collect() }
    }

    /// Degree `d` at index `d`.
    pub fn from_tables(tables: Vec<JackTable>) -> Self {
        JackOracle { tables }
    }

    pub fn n_max(&self) -> usize {
        self.tables.len() - 1
    }

    pub fn table(&self, n: usize) -> &JackTable {
        &self.tables[n]
    }

    pub fn tables(&self) -> &[JackTable] {
        &self.tables
    }

    fn check(&self, n: usize) -> Result<(), EngineError> {
        if n > self.n_max() {
            return Err(crate::error::OperatorError::DegreeOverflow { requested: n, bound: self.n_max() }.into());
        }
        Ok(())
    }

    /// `[p_λ(x) p_μ(y) p_ν(z)] Φ = Σ_γ θ^γ_λ θ^γ_μ θ^γ_ν / j_γ`.
    pub fn phi_coeff(&self, l: &Partition, m: &Partition, n: &Partition) -> Result<RatFunc, EngineError> {
        let d = l.weight();
        if m.weight() != d || n.weight() != d {
            return Err(EngineError::ShapeMismatch("phi coefficient needs three partitions of one weight"));
        }
        self.check(d)?;
        let mut acc = RatFunc::zero();
        for j in self.tables[d].expansions() {
            let x = j.theta(l);
            if x.is_zero() {
                continue;
            }
            acc += &(&(&(&x * &j.theta(m)) * &j.theta(n)) / &j.norm);
        }
        Ok(acc)
    }

    /// `a^λ_{μν} = z_λ α^{ℓ(λ)} [p_λ p_μ p_ν] Φ`.
    pub fn a(&self, l: &Partition, m: &Partition, n: &Partition) -> Result<RatFunc, EngineError> {
        let c = self.phi_coeff(l, m, n)?;
        Ok(&c * &RatFunc::alpha_pow(l.len() as i64).scale_int(&BigInt::from(l.z())))
    }

    /// The table `a^λ_{(n),ν}` for `λ ⊢ n`.
    pub fn a_table(&self, n: usize, nu: &Partition) -> Result<CoeffTable, EngineError> {
        if nu.weight() != n || n == 0 {
            return Err(EngineError::NotAPartitionOf { nu: nu.clone(), n });
        }
        self.check(n)?;
        let row = Partition::row(n);
        Ok(CoeffTable::from_fn(n, nu.clone(), CoeffKind::A, |l| self.a(l, &row, nu).expect("shape checked")))
    }

    /// The degree-`d` part of `Φ`.
    pub fn phi(&self, d: usize) -> Result<TripleSeries, EngineError> {
        self.check(d)?;
        let ps = partitions_of(d);
        let mut out = TripleSeries::default();
        for j in self.tables[d].expansions() {
            let inv = j.norm.inv().expect("Jack norms are nonzero");
            for l in &ps {
                let x = &j.theta(l) * &inv;
                if x.is_zero() {
                    continue;
                }
                for m in &ps {
                    let xy = &x * &j.theta(m);
                    if xy.is_zero() {
                        continue;
                    }
                    for n in &ps {
                        out.add_term((l.clone(), m.clone(), n.clone()), &(&xy * &j.theta(n)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Ψ_1, …, Ψ_{d_max}` from `d L_d = d Φ_d − Σ_{k<d} k L_k Φ_{d−k}` and
    /// `Ψ_d = α d L_d`. Index 0 is empty.
    pub fn psi(&self, d_max: usize) -> Result<Vec<TripleSeries>, EngineError> {
        self.check(d_max)?;
        let phis: Vec<TripleSeries> = (0..=d_max).map(|d| self.phi(d)).collect::<Result<_, _>>()?;
        // dl[d] = d·L_d
        let mut dl: Vec<TripleSeries> = vec![TripleSeries::default()];
        for d in 1..=d_max {
            let mut cur = TripleSeries::default();
            cur.add_scaled(&phis[d], &RatFunc::from_int(d as i64));
            for k in 1..d {
                cur.add_scaled(&dl[k].mul(&phis[d - k]), &RatFunc::from_int(-1));
            }
            dl.push(cur);
        }
        let a = RatFunc::alpha();
        Ok(dl.iter().map(|s| {
            let mut out = TripleSeries::default();
            out.add_scaled(s, &a);
            out
        }).collect())
    }

    /// `h^λ_{μν}` read off `Ψ`.
    pub fn h(&self, l: &Partition, m: &Partition, n: &Partition) -> Result<RatFunc, EngineError> {
        let psi = self.psi(l.weight())?;
        Ok(psi[l.weight()].coeff(l, m, n))
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
    fn low_degree_values() {
        let o = JackOracle::new(3);
        assert!(o.a(&p("1"), &p("1"), &p("1")).unwrap().is_one());
        assert_eq!(o.a(&p("2"), &p("2"), &p("2")).unwrap().to_string(), "a-1");
        assert!(o.h(&p("1,1"), &p("2"), &p("2")).unwrap().is_one());
        assert!(o.a(&p("2"), &p("1"), &p("2")).is_err());
        assert!(o.a(&p("4"), &p("4"), &p("4")).is_err());
    }
}
