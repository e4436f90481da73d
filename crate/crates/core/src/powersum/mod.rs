//! Symmetric functions in the power-sum basis over `ℚ(α)`, and sparse
//! graded operators acting on them.

mod calculus;
mod operator;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::partition::Partition;
use crate::ratfunc::RatFunc;

pub use calculus::*;
pub use operator::{derivations, Family, GradedOperator};

/// Finite sum `Σ c_λ p_λ`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PSFun {
    terms: BTreeMap<Partition, RatFunc>,
}

impl PSFun {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `p_λ`.
    pub fn p(lambda: Partition) -> Self {
        Self::term(lambda, RatFunc::one())
    }

    pub fn term(lambda: Partition, c: RatFunc) -> Self {
        let mut f = Self::zero();
        f.add_term(lambda, &c);
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, RatFunc)>>(terms: I) -> Self {
        let mut f = Self::zero();
        for (l, c) in terms {
            f.add_term(l, &c);
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> RatFunc {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest weight among the terms; `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::weight);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add_term(&mut self, lambda: Partition, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &PSFun, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        for (l, x) in &other.terms {
            self.add_term(l.clone(), &(x * c));
        }
    }

    pub fn add(&self, other: &PSFun) -> PSFun {
        let mut out = self.clone();
        out.add_scaled(other, &RatFunc::one());
        out
    }

    pub fn sub(&self, other: &PSFun) -> PSFun {
        let mut out = self.clone();
        out.add_scaled(other, &RatFunc::from_int(-1));
        out
    }

    pub fn scale(&self, c: &RatFunc) -> PSFun {
        let mut out = PSFun::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn scale_int(&self, c: i64) -> PSFun {
        self.scale(&RatFunc::from_int(c))
    }

    /// Product in the algebra of symmetric functions.
    pub fn mul(&self, other: &PSFun) -> PSFun {
        let mut out = PSFun::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.union(b), &(x * y));
            }
        }
        out
    }

    /// Terms of weight exactly `d`.
    pub fn degree_part(&self, d: usize) -> PSFun {
        PSFun { terms: self.terms.iter().filter(|(l, _)| l.weight() == d).map(|(l, c)| (l.clone(), c.clone())).collect() }
    }

    /// Deformed Hall product `⟨p_λ, p_μ⟩_α = α^{ℓ(λ)} z_λ δ_{λμ}`.
    pub fn inner(&self, other: &PSFun) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (l, x) in &self.terms {
            if let Some(y) = other.terms.get(l) {
                let w = RatFunc::alpha_pow(l.len() as i64).scale_int(&BigInt::from(l.z()));
                acc += &(&(x * y) * &w);
            }
        }
        acc
    }

    pub fn into_terms(self) -> BTreeMap<Partition, RatFunc> {
        self.terms
    }

    pub fn map_coeffs<F: Fn(&RatFunc) -> RatFunc>(&self, f: F) -> PSFun {
        PSFun::from_terms(self.terms.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    pub fn keys(&self) -> Vec<Partition> {
        self.terms.keys().cloned().collect()
    }
}

impl fmt::Display for PSFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*p[{l}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PSFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PSFun({self})")
    }
}
