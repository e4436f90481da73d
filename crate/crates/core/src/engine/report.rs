use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::{h_from_a, CoeffKind, CoeffTable};
use crate::error::EngineError;
use crate::partition::Partition;
use crate::ratfunc::RatFunc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `Aut_ν |C_λ| a` is not an integer polynomial of degree `≤ bound`.
    AIntegrality { bound: usize },
    /// `Aut_ν ∏ν_i! h` is not an integer polynomial of degree `≤ bound`.
    HIntegrality { bound: isize },
    /// The β-expansion of `a` or `h` has a negative or fractional coefficient.
    BetaPositivity(CoeffKind),
    Duality,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub n: usize,
    pub nu: Partition,
    pub lambda: Partition,
    pub kind: ViolationKind,
    pub value: RatFunc,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} nu={:?} lambda={:?}: {:?} (value {})", self.n, self.nu, self.lambda, self.kind, self.value)
    }
}

/// Tally over many tables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjectureReport {
    pub tables: usize,
    pub entries: usize,
    pub violations: Vec<Violation>,
}

impl ConjectureReport {
    pub fn absorb(&mut self, table: &CoeffTable, violations: Vec<Violation>) {
        self.tables += 1;
        self.entries += table.rows().len();
        self.violations.extend(violations);
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, pred: impl Fn(&ViolationKind) -> bool) -> usize {
        self.violations.iter().filter(|v| pred(&v.kind)).count()
    }
}

fn int_poly_within(f: &RatFunc, bound: isize) -> bool {
    f.is_integer_polynomial() && f.degree().map_or(true, |d| d <= bound)
}

fn beta_ok(f: &RatFunc) -> bool {
    f.to_beta().is_ok_and(|b| b.is_integral() && b.is_nonnegative())
}

/// Checks integrality with degree bounds, β-positivity of `a` and `h`, and
/// the `α ↔ 1/α` functional equation on one `a` table.
pub fn check_table(table: &CoeffTable) -> Result<Vec<Violation>, EngineError> {
    if table.kind != CoeffKind::A {
        return Err(EngineError::ShapeMismatch("check_table expects an a table"));
    }
    let n = table.n;
    let nu = &table.nu;
    let h = h_from_a(table)?;
    let aut = RatFunc::from_biguint(nu.aut());
    let aut_fact = &aut * &RatFunc::from_biguint(nu.factorial_product());
    let mut out = Vec::new();
    let mut push = |lambda: &Partition, kind, value: &RatFunc| {
        out.push(Violation { n, nu: nu.clone(), lambda: lambda.clone(), kind, value: value.clone() });
    };
    for (lambda, a) in table.rows() {
        let ha = h.get(&lambda);
        let l = lambda.len() as i64;
        let bound_a = n - nu.len();
        if !int_poly_within(&(&a * &(&aut * &RatFunc::from_biguint(lambda.class_size()))), bound_a as isize) {
            push(&lambda, ViolationKind::AIntegrality { bound: bound_a }, &a);
        }
        let bound_h = n as isize + 1 - lambda.len() as isize - nu.len() as isize;
        if !int_poly_within(&(ha * &aut_fact), bound_h) {
            push(&lambda, ViolationKind::HIntegrality { bound: bound_h }, ha);
        }
        if !beta_ok(&a) {
            push(&lambda, ViolationKind::BetaPositivity(CoeffKind::A), &a);
        }
        if !beta_ok(ha) {
            push(&lambda, ViolationKind::BetaPositivity(CoeffKind::H), ha);
        }
        let lhs = &RatFunc::alpha_pow(l) * &a.invert_variable();
        let e = -(n as i64) + 1 + l + nu.len() as i64;
        let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        let rhs = RatFunc::alpha_pow(e - l).scale_int(&BigInt::from(sign)) * a.clone();
        if lhs != rhs {
            push(&lambda, ViolationKind::Duality, &a);
        }
    }
    Ok(out)
}
