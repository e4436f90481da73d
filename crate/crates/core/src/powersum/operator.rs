use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::PSFun;
use crate::error::OperatorError;
use crate::partition::{partitions_of, Partition};
use crate::ratfunc::RatFunc;

/// All ways to hit `p_λ` with `r` ordered partial derivatives: each entry
/// is `(values, multiplicity, remaining partition)` where `values[t]` is the
/// part removed by the `t`-th derivative.
pub fn derivations(lambda: &Partition, r: usize) -> Vec<(Vec<usize>, u64, Partition)> {
    let distinct = lambda.distinct_parts();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(
        lambda: &Partition,
        distinct: &[usize],
        r: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, u64, Partition)>,
    ) {
        if cur.len() == r {
            let w = if r == 0 { 1 } else { lambda.mult_count(cur) };
            if w > 0 {
                let rest = lambda.replace(cur, &[]).expect("counted parts exist");
                out.push((cur.clone(), w, rest));
            }
            return;
        }
        for &v in distinct {
            cur.push(v);
            rec(lambda, distinct, r, cur, out);
            cur.pop();
        }
    }
    rec(lambda, &distinct, r, &mut cur, &mut out);
    out
}

type Rule<'a> = Box<dyn Fn(&[usize]) -> Vec<(RatFunc, Vec<usize>)> + 'a>;

/// One sum of a differential operator: `r` derivatives `∂_{v_1}⋯∂_{v_r}`
/// followed by multiplication by the `p`'s the rule returns for `v`.
pub struct Family<'a> {
    pub derivs: usize,
    pub rule: Rule<'a>,
}

impl<'a> Family<'a> {
    pub fn new<F>(derivs: usize, rule: F) -> Self
    where
        F: Fn(&[usize]) -> Vec<(RatFunc, Vec<usize>)> + 'a,
    {
        Family { derivs, rule: Box::new(rule) }
    }

    fn act(&self, lambda: &Partition, out: &mut PSFun) {
        for (vals, w, rest) in derivations(lambda, self.derivs) {
            let w = BigInt::from(w);
            for (c, mults) in (self.rule)(&vals) {
                out.add_term(rest.union(&Partition::from_parts(mults)), &c.scale_int(&w));
            }
        }
    }
}

/// Linear map on `⊕_{d ≤ max_input} Λ^d` shifting degree by `shift`,
/// stored column by column on the power-sum basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedOperator {
    shift: isize,
    max_input: usize,
    columns: BTreeMap<Partition, PSFun>,
}

impl GradedOperator {
    /// Materializes `Σ families` on every `p_λ` with `|λ| ≤ max_input`.
    pub fn from_families(shift: isize, max_input: usize, families: &[Family<'_>]) -> Self {
        Self::from_fn(shift, max_input, |lambda| {
            let mut col = PSFun::zero();
            for fam in families {
                fam.act(lambda, &mut col);
            }
            col
        })
    }

    pub fn from_fn<F: FnMut(&Partition) -> PSFun>(shift: isize, max_input: usize, mut f: F) -> Self {
        let mut columns = BTreeMap::new();
        for d in 0..=max_input {
            for lambda in partitions_of(d) {
                let col = f(&lambda);
                debug_assert!(col.terms().all(|(l, _)| l.weight() as isize == d as isize + shift));
                if !col.is_zero() {
                    columns.insert(lambda, col);
                }
            }
        }
        GradedOperator { shift, max_input, columns }
    }

    pub fn identity(max_input: usize) -> Self {
        Self::from_fn(0, max_input, |l| PSFun::p(l.clone()))
    }

    pub fn shift(&self) -> isize {
        self.shift
    }

    /// Largest input degree on which the operator is materialized.
    pub fn max_input(&self) -> usize {
        self.max_input
    }

    /// Image of `p_λ`.
    pub fn column(&self, lambda: &Partition) -> Result<PSFun, OperatorError> {
        self.check(lambda.weight())?;
        Ok(self.columns.get(lambda).cloned().unwrap_or_default())
    }

    fn check(&self, d: usize) -> Result<(), OperatorError> {
        if d > self.max_input {
            return Err(OperatorError::DegreeOverflow { requested: d, bound: self.max_input });
        }
        Ok(())
    }

    pub fn apply(&self, f: &PSFun) -> Result<PSFun, OperatorError> {
        let mut out = PSFun::zero();
        for (l, c) in f.terms() {
            self.check(l.weight())?;
            if let Some(col) = self.columns.get(l) {
                out.add_scaled(col, c);
            }
        }
        Ok(out)
    }

    /// `self ∘ inner`, on the inputs where both steps stay materialized.
    pub fn compose(&self, inner: &GradedOperator) -> GradedOperator {
        let bound = (self.max_input as isize - inner.shift).max(-1);
        let max_input = inner.max_input.min(bound.max(0) as usize);
        let empty = bound < 0;
        Self::from_fn(self.shift + inner.shift, max_input, |l| {
            if empty {
                return PSFun::zero();
            }
            let mid = inner.columns.get(l).cloned().unwrap_or_default();
            self.apply(&mid).expect("composition stays within bounds")
        })
    }

    fn combine(&self, other: &GradedOperator, sign: i64) -> Result<GradedOperator, OperatorError> {
        if self.shift != other.shift {
            return Err(OperatorError::ShiftMismatch { left: self.shift, right: other.shift });
        }
        let c = RatFunc::from_int(sign);
        Ok(Self::from_fn(self.shift, self.max_input.min(other.max_input), |l| {
            let mut col = self.columns.get(l).cloned().unwrap_or_default();
            if let Some(o) = other.columns.get(l) {
                col.add_scaled(o, &c);
            }
            col
        }))
    }

    pub fn add(&self, other: &GradedOperator) -> Result<GradedOperator, OperatorError> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &GradedOperator) -> Result<GradedOperator, OperatorError> {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: &RatFunc) -> GradedOperator {
        GradedOperator {
            shift: self.shift,
            max_input: self.max_input,
            columns: self
                .columns
                .iter()
                .map(|(l, col)| (l.clone(), col.scale(c)))
                .filter(|(_, col)| !col.is_zero())
                .collect(),
        }
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(a: &GradedOperator, b: &GradedOperator) -> GradedOperator {
        a.compose(b).sub(&b.compose(a)).expect("both products shift by the same amount")
    }

    /// Restriction to inputs of degree `≤ d`.
    pub fn truncate(&self, d: usize) -> GradedOperator {
        GradedOperator {
            shift: self.shift,
            max_input: self.max_input.min(d),
            columns: self.columns.iter().filter(|(l, _)| l.weight() <= d).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// First basis element `p_λ`, `|λ| ≤ up_to`, on which `a` and `b` differ.
    pub fn first_difference(
        a: &GradedOperator,
        b: &GradedOperator,
        up_to: usize,
    ) -> Result<Option<Partition>, OperatorError> {
        if a.shift != b.shift {
            return Err(OperatorError::ShiftMismatch { left: a.shift, right: b.shift });
        }
        a.check(up_to)?;
        b.check(up_to)?;
        for d in 0..=up_to {
            for l in partitions_of(d) {
                if a.columns.get(&l) != b.columns.get(&l) {
                    return Ok(Some(l));
                }
            }
        }
        Ok(None)
    }

    /// `(input, output, coefficient)` triples, input-degree ascending.
    pub fn entries(&self) -> Vec<(Partition, Partition, RatFunc)> {
        let mut out = Vec::new();
        for d in 0..=self.max_input {
            for l in partitions_of(d) {
                if let Some(col) = self.columns.get(&l) {
                    for (m, c) in col.terms() {
                        out.push((l.clone(), m.clone(), c.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Shorthand for a single-term rule result.
pub(crate) fn one(c: RatFunc, mults: &[usize]) -> Vec<(RatFunc, Vec<usize>)> {
    vec![(c, mults.to_vec())]
}
