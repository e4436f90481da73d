//! Verification suites behind `jacklab verify`.

use rayon::prelude::*;
use serde::Serialize;

use jacklab_core::engine::check_table;
use jacklab_core::hypermap::theorem_h_check;
use jacklab_core::jack::{identity_suite, JackOracle};
use jacklab_core::matching::{class_algebra_row, matching_counts, theorem_a_check, DEFAULT_BUDGET};
use jacklab_core::partition::{at_most_one_large_part, partitions_of};
use jacklab_core::powersum::{omega_closed, pi_closed};
use jacklab_core::{CoefficientEngine, GradedOperator, OperatorTower, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, failure: Option<String>) -> Check {
        Check { name: name.into(), passed: failure.is_none(), detail: failure }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<Check>) -> SuiteReport {
        SuiteReport { suite: suite.to_string(), passed: checks.iter().all(|c| c.passed), checks }
    }
}

/// The hypermap shapes `(k, m)` of the full `ϑ` verification matrix.
pub fn default_hypermap_shapes() -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = (1..=8).map(|n| (1, n)).collect();
    v.extend((1..=3).map(|m| (2, m)));
    v.extend((1..=2).map(|m| (3, m)));
    v.extend((2..=6).map(|n| (n, 1)));
    v.sort();
    v.dedup();
    v
}

/// Closed forms of `Ω_1, Ω_2, Ω_3` against the commutator tower, and
/// `Π_k = k! ∂/∂p_k` for `k ≤ 5`, on every `p_λ` with `|λ| ≤ degree`.
pub fn omega(degree: usize) -> SuiteReport {
    let mut checks = Vec::new();
    let tower = OperatorTower::build_partial(degree + 3, 3);
    for k in 1..=3 {
        let closed = omega_closed(k, degree + 3).expect("closed forms exist for k <= 3");
        let diff = GradedOperator::first_difference(&closed, tower.omega(k).expect("built"), degree);
        checks.push(Check::new(format!("Omega{k} closed form"), describe(diff)));
    }
    let tower = OperatorTower::build_partial(degree, 5);
    for k in 1..=5.min(degree.max(1)) {
        let diff = GradedOperator::first_difference(tower.pi(k).expect("built"), &pi_closed(k, degree), degree);
        checks.push(Check::new(format!("Pi{k} = {k}! d/dp{k}"), describe(diff)));
    }
    SuiteReport::new("omega", checks)
}

fn describe<E: std::fmt::Display>(r: Result<Option<Partition>, E>) -> Option<String> {
    match r {
        Ok(None) => None,
        Ok(Some(l)) => Some(format!("differs on p[{l}]")),
        Err(e) => Some(e.to_string()),
    }
}

/// The Jack identity suite on every degree `≤ degree`.
pub fn identities(degree: usize) -> SuiteReport {
    let oracle = JackOracle::new(degree);
    let report = identity_suite(oracle.tables(), degree);
    let checks = report
        .checks
        .into_iter()
        .map(|c| Check::new(format!("{} at degree {}", c.identity, c.degree), c.failure))
        .collect();
    SuiteReport::new("identities", checks)
}

/// Integrality, degree bounds, β-positivity and duality of every
/// `a^λ_{n,ν}` and `h^λ_{n,ν}` table with `n ≤ n_max`.
pub fn conjectures(n_max: usize) -> SuiteReport {
    let engine = CoefficientEngine::new(n_max);
    let shapes: Vec<(usize, Partition)> = (1..=n_max).flat_map(|n| partitions_of(n).into_iter().map(move |nu| (n, nu))).collect();
    let checks = shapes
        .par_iter()
        .map(|(n, nu)| {
            let name = format!("n={n} nu={nu}");
            let failure = match engine.a_table(*n, nu).map_err(|e| e.to_string()).and_then(|t| check_table(&t).map_err(|e| e.to_string())) {
                Ok(v) if v.is_empty() => None,
                Ok(v) => Some(v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")),
                Err(e) => Some(e),
            };
            Check::new(name, failure)
        })
        .collect();
    SuiteReport::new("conjectures", checks)
}

/// The weight theorem on every in-scope `ν ⊢ n ≤ n_max`, plus
/// [`specializations`].
pub fn matchings(n_max: usize) -> SuiteReport {
    let budget = n_max.max(DEFAULT_BUDGET);
    let shapes: Vec<Partition> = (1..=n_max).flat_map(|n| partitions_of(n).into_iter().filter(at_most_one_large_part)).collect();
    let mut checks: Vec<Check> = shapes
        .par_iter()
        .map(|nu| {
            let failure = match theorem_a_check(nu, budget) {
                Ok(r) => {
                    let bad: Vec<String> = r
                        .rows
                        .iter()
                        .filter(|row| !row.ok())
                        .map(|row| format!("lambda={} got {:?} want {}", row.lambda, row.histogram, row.expected))
                        .collect();
                    (!bad.is_empty()).then(|| bad.join("; "))
                }
                Err(e) => Some(e.to_string()),
            };
            Check::new(format!("weight nu={nu}"), failure)
        })
        .collect();
    checks.extend(specializations(n_max).checks);
    SuiteReport::new("matchings", checks)
}

/// `a(2) = |G|` for every `n ≤ n_max` and, for `n ≤ 6`, `a(1) = c`.
pub fn specializations(n_max: usize) -> SuiteReport {
    let budget = n_max.max(DEFAULT_BUDGET);
    let engine = CoefficientEngine::new(n_max);
    let checks: Vec<Check> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let row = Partition::row(n);
            let counts = match matching_counts(&row, budget) {
                Ok(c) => c,
                Err(e) => return Check::new(format!("specializations n={n}"), Some(e.to_string())),
            };
            let c = (n <= 6).then(|| class_algebra_row(&row, 6).expect("within budget"));
            let mut bad = Vec::new();
            for nu in partitions_of(n) {
                let t = engine.a_table(n, &nu).expect("within bound");
                for (l, a) in t.rows() {
                    let two = a.eval_int(2).map(|x| x.to_string());
                    if two != Some(counts.total(&l, &nu).to_string()) {
                        bad.push(format!("a(2) at lambda={l} nu={nu}"));
                    }
                    if let Some(c) = &c {
                        let want = c.get(&(l.clone(), nu.clone())).copied().unwrap_or(0);
                        if a.eval_int(1).map(|x| x.to_string()) != Some(want.to_string()) {
                            bad.push(format!("a(1) at lambda={l} nu={nu}"));
                        }
                    }
                }
            }
            Check::new(format!("specializations n={n}"), (!bad.is_empty()).then(|| bad.join("; ")))
        })
        .collect();
    SuiteReport::new("specializations", checks)
}

/// The `ϑ` check on each `(k, m)`: the generating polynomial, orientability, the
/// codomain bound, Euler characteristics and the total count.
pub fn hypermaps(shapes: &[(usize, usize)]) -> SuiteReport {
    let n_max = shapes.iter().map(|&(k, m)| k * m).max().unwrap_or(1);
    let engine = CoefficientEngine::new(n_max);
    let budget = n_max.max(DEFAULT_BUDGET);
    let checks = shapes
        .par_iter()
        .map(|&(k, m)| {
            let failure = match theorem_h_check(k, m, &engine, budget) {
                Ok(r) if r.passed() => None,
                Ok(r) => {
                    let mut bad: Vec<String> = r
                        .rows
                        .iter()
                        .filter(|row| !row.ok())
                        .map(|row| format!("lambda={} got {:?} want {}", row.lambda, row.histogram, row.expected))
                        .collect();
                    if r.euler_violations > 0 {
                        bad.push(format!("{} Euler violations", r.euler_violations));
                    }
                    bad.push(format!("total {}", r.total));
                    Some(bad.join("; "))
                }
                Err(e) => Some(e.to_string()),
            };
            Check::new(format!("theta k={k} m={m}"), failure)
        })
        .collect();
    SuiteReport::new("hypermaps", checks)
}
