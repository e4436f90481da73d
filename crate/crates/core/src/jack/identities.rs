use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{JackExpansion, JackTable};
use crate::partition::{partitions_of, Partition};
use crate::powersum::{e2, e2_perp, p1_perp, GradedOperator, OperatorTower, PSFun};
use crate::ratfunc::RatFunc;

/// Element of `Λ(x) ⊗ Λ(y)`, keyed by `(x-partition, y-partition)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bilinear {
    terms: BTreeMap<(Partition, Partition), RatFunc>,
}

impl Bilinear {
    /// `self += c · f(x) g(y)`.
    pub fn add_product(&mut self, c: &RatFunc, fx: &PSFun, gy: &PSFun) {
        for (a, x) in fx.terms() {
            let cx = c * x;
            for (b, y) in gy.terms() {
                let e = self.terms.entry((a.clone(), b.clone())).or_default();
                *e += &(&cx * y);
            }
        }
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn coeff(&self, x: &Partition, y: &Partition) -> RatFunc {
        self.terms.get(&(x.clone(), y.clone())).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// First key where the two sides disagree, with both values.
    pub fn first_difference(&self, other: &Bilinear) -> Option<((Partition, Partition), RatFunc, RatFunc)> {
        let keys: alloc::collections::BTreeSet<_> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.coeff(&k.0, &k.1), other.coeff(&k.0, &k.1));
            (a != b).then(|| (k.clone(), a, b))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Identity {
    Orthogonality,
    Eigen,
    ThetaRecursion,
    Ede,
    Lem,
    DPi(usize),
    PiClosedForm(usize),
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identity::Orthogonality => f.write_str("orthogonality"),
            Identity::Eigen => f.write_str("eigenfunction"),
            Identity::ThetaRecursion => f.write_str("theta-recursion"),
            Identity::Ede => f.write_str("E2perp-Delta"),
            Identity::Lem => f.write_str("p1perp-E2"),
            Identity::DPi(k) => write!(f, "Pi{k}-Omega{k}"),
            Identity::PiClosedForm(k) => write!(f, "Pi{k}-closed-form"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub degree: usize,
    /// `None` when the identity holds; otherwise the first disagreement.
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| c.failure.is_some())
    }

    fn push(&mut self, identity: Identity, degree: usize, failure: Option<String>) {
        self.checks.push(IdentityCheck { identity, degree, failure });
    }

    fn push_bilinear(&mut self, identity: Identity, degree: usize, lhs: &Bilinear, rhs: &Bilinear) {
        let failure = lhs
            .first_difference(rhs)
            .map(|((x, y), a, b)| format!("at p[{x}](x) p[{y}](y): lhs {a}, rhs {b}"));
        self.push(identity, degree, failure);
    }
}

/// `θ^λ_{[1^{n−2} 2]}`, zero below degree 2.
fn theta_12(j: &JackExpansion) -> RatFunc {
    let n = j.lambda.weight();
    if n < 2 {
        return RatFunc::zero();
    }
    j.theta(&Partition::column(n - 2).with_part(2))
}

/// `Σ_ρ θ^ρ_{(d)} / j_ρ · f(J_ρ)(x) ⊗ g(J_ρ)(y)`.
fn cauchy_sum(table: &JackTable, f: impl Fn(&PSFun) -> PSFun, g: impl Fn(&PSFun) -> PSFun) -> Bilinear {
    let mut out = Bilinear::default();
    let row = Partition::row(table.n);
    for j in table.expansions() {
        let c = &j.theta(&row) / &j.norm;
        let jj = j.to_psfun();
        out.add_product(&c, &f(&jj), &g(&jj));
    }
    out
}

fn apply(op: &GradedOperator) -> impl Fn(&PSFun) -> PSFun + '_ {
    move |f| op.apply(f).expect("degree within the tower bound")
}

fn id(f: &PSFun) -> PSFun {
    f.clone()
}

/// Checks the Jack-function identities on every degree `≤ n_max`, given
/// `tables[d]` for `d ≤ n_max`.
pub fn identity_suite(tables: &[JackTable], n_max: usize) -> IdentityReport {
    assert!(tables.len() > n_max, "need Jack tables up to degree {n_max}");
    let tower = OperatorTower::build_partial(n_max, 3);
    let d = tower.d_alpha();
    let mut report = IdentityReport::default();

    for (n, t) in tables.iter().enumerate().take(n_max + 1).skip(1) {
        let ps = partitions_of(n);
        let mut bad = None;
        'outer: for (i, a) in ps.iter().enumerate() {
            for b in &ps[i + 1..] {
                let v = t.get(a).to_psfun().inner(&t.get(b).to_psfun());
                if !v.is_zero() {
                    bad = Some(format!("<J[{a}], J[{b}]> = {v}"));
                    break 'outer;
                }
            }
        }
        report.push(Identity::Orthogonality, n, bad);

        let bad = t.expansions().find_map(|j| {
            let jj = j.to_psfun();
            let lhs = d.apply(&jj).expect("within bound");
            (lhs != jj.scale(&theta_12(j))).then(|| format!("D J[{}] is not a multiple of J", j.lambda))
        });
        report.push(Identity::Eigen, n, bad);
    }

    for n in 1..n_max {
        let (t, up) = (&tables[n], &tables[n + 1]);
        let mut bad = None;
        for g in t.expansions() {
            let gp = &g.lambda;
            for i in 0..=gp.len() {
                let prev = if i == 0 { usize::MAX } else { gp.parts()[i - 1] };
                let cur = gp.parts().get(i).copied().unwrap_or(0);
                if prev <= cur {
                    continue;
                }
                let mut parts = gp.parts().to_vec();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                let gi = up.get(&Partition::from_parts(parts));
                let lhs = gi.theta(&Partition::row(n + 1));
                let rhs = &g.theta(&Partition::row(n)) * &(&theta_12(gi) - &theta_12(g));
                if lhs != rhs && bad.is_none() {
                    bad = Some(format!("gamma={gp} i={}: {lhs} vs {rhs}", i + 1));
                }
            }
        }
        report.push(Identity::ThetaRecursion, n + 1, bad);

        let ep = e2_perp(n_max);
        let lhs = cauchy_sum(up, id, apply(&ep));
        let rhs = cauchy_sum(t, apply(tower.delta()), id);
        report.push_bilinear(Identity::Ede, n + 1, &lhs, &rhs);

        let pp = p1_perp(n_max);
        let e = e2(n_max);
        let lhs = cauchy_sum(up, id, apply(&pp));
        let alpha = RatFunc::alpha();
        let rhs = cauchy_sum(t, |f| e.apply(f).expect("within bound").scale(&alpha), id);
        report.push_bilinear(Identity::Lem, n + 1, &lhs, &rhs);
    }

    for k in 1..=3.min(n_max) {
        let (Some(pi), Some(om)) = (tower.pi(k), tower.omega(k)) else { continue };
        for n in 1..=n_max.saturating_sub(k) {
            let lhs = cauchy_sum(&tables[n + k], id, apply(pi));
            let rhs = cauchy_sum(&tables[n], apply(om), id);
            report.push_bilinear(Identity::DPi(k), n + k, &lhs, &rhs);
        }
    }

    let full = OperatorTower::build(n_max);
    for k in 1..=n_max.min(5) {
        let closed = crate::powersum::pi_closed(k, n_max);
        let built = full.pi(k).expect("tower holds every k <= bound");
        let diff = GradedOperator::first_difference(built, &closed, n_max).expect("same shift and bound");
        report.push(Identity::PiClosedForm(k), n_max, diff.map(|l| format!("differs on p[{l}]")));
    }
    report
}
