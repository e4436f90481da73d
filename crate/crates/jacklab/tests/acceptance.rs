//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use jacklab::verify;
use jacklab_core::engine::{check_table, ViolationKind};
use jacklab_core::hypermap::Census;
use jacklab_core::jack::JackOracle;
use jacklab_core::matching::{enumerate_g, gray_type_counts, labelled_matchings, DEFAULT_BUDGET};
use jacklab_core::partition::{factorial, partitions_of};
use jacklab_core::{BetaPoly, CoeffKind, CoefficientEngine, Partition};
use num_bigint::BigUint;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn suite(r: verify::SuiteReport) -> Outcome {
    let bad: Vec<String> = r.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail.as_deref().unwrap_or(""))).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad.join("; "))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn operator_identities() -> Outcome {
    suite(verify::omega(10))
}

fn route_equivalence() -> Outcome {
    let oracle = JackOracle::new(7);
    let engine = CoefficientEngine::new(7);
    for n in 1..=7 {
        for nu in partitions_of(n) {
            let a = engine.a_table(n, &nu).map_err(|e| e.to_string())?;
            let b = oracle.a_table(n, &nu).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("n={n} nu={nu}"))?;
        }
    }
    Ok(())
}

fn specializations() -> Outcome {
    let r = verify::specializations(7);
    ensure(r.checks.len() == 7, || "missing degrees".into())?;
    suite(r)
}

fn reproduced_values() -> Outcome {
    let engine = CoefficientEngine::new(8);
    let three = Partition::row(3);
    let a = engine.a_table(3, &three).map_err(|e| e.to_string())?;
    let want: BetaPoly = "[1,1,2]".parse().expect("literal");
    ensure(a.get(&three).to_beta().ok() == Some(want), || format!("a(3;3,3) = {}", a.get(&three)))?;
    for n in 1..=8 {
        let ones = Partition::column(n);
        let row = Partition::row(n);
        for kind in [CoeffKind::A, CoeffKind::H] {
            let t = engine.table(kind, n, &ones).map_err(|e| e.to_string())?;
            ensure(t.get(&row).is_one(), || format!("{kind} at n={n} is {}", t.get(&row)))?;
        }
        let c = Census::generic(&vec![1; n], 8).map_err(|e| e.to_string())?;
        let fact = factorial(n - 1);
        let total = c.by_lambda.get(&row).map_or(0, |v| v.0);
        ensure(c.by_lambda.len() == 1 && BigUint::from(total) == fact, || format!("census at n={n}"))?;
    }
    Ok(())
}

fn violations(pred: fn(&ViolationKind) -> bool) -> Outcome {
    let engine = CoefficientEngine::new(8);
    let mut bad = Vec::new();
    for n in 1..=8 {
        for nu in partitions_of(n) {
            let t = engine.a_table(n, &nu).map_err(|e| e.to_string())?;
            let v = check_table(&t).map_err(|e| e.to_string())?;
            bad.extend(v.into_iter().filter(|v| pred(&v.kind)).map(|v| v.to_string()));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

fn corollary() -> Outcome {
    violations(|k| matches!(k, ViolationKind::AIntegrality { .. } | ViolationKind::HIntegrality { .. } | ViolationKind::Duality))
}

fn beta_positivity() -> Outcome {
    violations(|k| matches!(k, ViolationKind::BetaPositivity(_)))
}

fn theorem_a() -> Outcome {
    let r = verify::matchings(6);
    let weight: Vec<_> = r.checks.iter().filter(|c| c.name.starts_with("weight")).collect();
    ensure(weight.len() > 20, || "too few shapes".into())?;
    let bad: Vec<_> = weight.iter().filter(|c| !c.passed).collect();
    ensure(bad.is_empty(), || format!("{bad:?}"))
}

fn theorem_h() -> Outcome {
    suite(verify::hypermaps(&verify::default_hypermap_shapes()))
}

fn jack_identities() -> Outcome {
    suite(verify::identities(5))
}

fn structural_counts() -> Outcome {
    for n in 1..=6 {
        let row = Partition::row(n);
        for nu in partitions_of(n) {
            let factor = nu.aut() / factorial(nu.multiplicity(1));
            for l in partitions_of(n) {
                let plain = enumerate_g(&l, &row, &nu, DEFAULT_BUDGET).map_err(|e| e.to_string())?.len();
                let lab = labelled_matchings(&l, &nu, DEFAULT_BUDGET).map_err(|e| e.to_string())?.len();
                ensure(BigUint::from(lab) == &factor * BigUint::from(plain), || format!("matchings lambda={l} nu={nu}"))?;
            }
        }
    }
    for (k, m) in verify::default_hypermap_shapes() {
        let n = k * m;
        let nu = Partition::rectangle(k, m);
        let census = Census::generic(&vec![k; m], 8).map_err(|e| e.to_string())?;
        let l_counts = gray_type_counts(&Partition::row(n), &nu, 8).map_err(|e| e.to_string())?;
        let factor = factorial(m) * factorial(k).pow(m as u32) / BigUint::from(n);
        for l in partitions_of(n) {
            let got = census.by_lambda.get(&l).map_or(0, |v| v.0);
            let want = &factor * BigUint::from(l_counts.get(&l).copied().unwrap_or(0));
            ensure(BigUint::from(got) == want, || format!("hypermaps k={k} m={m} lambda={l}: {got} vs {want}"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("operator identities: Omega2, Omega3 closed forms and Pi_k = k! d/dp_k to degree 10", operator_identities),
        ("route equivalence: operator route equals the Jack oracle for n <= 7", route_equivalence),
        ("specializations: a(1) = c for n <= 6 and a(2) = |G| for n <= 7", specializations),
        ("reference values: a(3;3,3), a and h at nu = [1^n], and the k = 1 census", reproduced_values),
        ("integrality, degree bounds and duality for n <= 8", corollary),
        ("beta-positivity of every a and h table for n <= 8", beta_positivity),
        ("weight theorem on labelled matchings for n <= 6", theorem_a),
        ("theta theorem on labelled star hypermaps, k in {1,2,3,n}", theorem_h),
        ("Jack identity suite through degree 5", jack_identities),
        ("structural counts of labelled matchings and star hypermaps", structural_counts),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = f();
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(()) => println!("[PASS] criterion {}: {name} ({secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name} ({secs:.1}s): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
