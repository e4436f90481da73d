use jacklab_core::engine::h_from_a;
use jacklab_core::jack::{identity_suite, jack_gram_schmidt, Identity, JackOracle};
use jacklab_core::partition::partitions_of;
use jacklab_core::{CoefficientEngine, Partition, RatFunc};

#[test]
fn identities_hold_through_degree_5() {
    let oracle = JackOracle::new(5);
    let report = identity_suite(oracle.tables(), 5);
    for c in report.failures() {
        eprintln!("{} at degree {}: {}", c.identity, c.degree, c.failure.as_deref().unwrap_or(""));
    }
    assert!(report.passed());
    for id in [Identity::Eigen, Identity::ThetaRecursion, Identity::Ede, Identity::Lem, Identity::DPi(3)] {
        assert!(report.checks.iter().any(|c| c.identity == id), "{id} was not exercised");
    }
}

#[test]
fn jacks_are_orthogonal_through_degree_7() {
    for n in 6..=7 {
        let t = jack_gram_schmidt(n);
        let ps = partitions_of(n);
        for (i, a) in ps.iter().enumerate() {
            for b in &ps[i + 1..] {
                assert!(t.get(a).to_psfun().inner(&t.get(b).to_psfun()).is_zero());
            }
        }
    }
}

#[test]
fn operator_route_equals_oracle_through_7() {
    let oracle = JackOracle::new(7);
    let engine = CoefficientEngine::new(7);
    for n in 1..=7 {
        for nu in partitions_of(n) {
            assert_eq!(engine.a_table(n, &nu).unwrap(), oracle.a_table(n, &nu).unwrap(), "nu={nu:?}");
        }
    }
}

#[test]
fn psi_matches_h_transform() {
    let oracle = JackOracle::new(5);
    let psi = oracle.psi(5).unwrap();
    for (n, psi_n) in psi.iter().enumerate().skip(1) {
        let row = Partition::row(n);
        for nu in partitions_of(n) {
            let h = h_from_a(&oracle.a_table(n, &nu).unwrap()).unwrap();
            for (l, v) in h.rows() {
                assert_eq!(psi_n.coeff(&l, &row, &nu), v, "n={n} nu={nu:?} lambda={l:?}");
            }
        }
    }
    // Off the μ = (n) slice the logarithm matters: Ψ ≠ αnΦ there.
    let l = Partition::column(2);
    assert_ne!(psi[2].coeff(&l, &l, &l), oracle.phi(2).unwrap().coeff(&l, &l, &l).scale_int(&2.into()) * RatFunc::alpha());
}

#[test]
fn a_is_symmetric_in_mu_nu() {
    let oracle = JackOracle::new(6);
    for n in 1..=6 {
        let ps = partitions_of(n);
        for l in &ps {
            for (i, m) in ps.iter().enumerate() {
                for nu in &ps[i..] {
                    assert_eq!(oracle.a(l, m, nu).unwrap(), oracle.a(l, nu, m).unwrap());
                }
            }
        }
    }
}

/// The two-slot kernel `Σ J(x)J(y)/j` does not see the normalization of
/// `J`, but `Φ` has three `J` factors against one norm, so `a` does.
#[test]
fn only_the_two_slot_kernel_ignores_normalization() {
    let oracle = JackOracle::new(4);
    let tables: Vec<_> = oracle
        .tables()
        .iter()
        .map(|t| {
            t.map(|j| {
                let c = RatFunc::from_int(j.lambda.len() as i64 + 1) * (RatFunc::alpha() + RatFunc::from_int(j.lambda.first() as i64));
                j.rescaled(&c)
            })
        })
        .collect();
    for t in &tables[1..] {
        let ps = partitions_of(t.n);
        for l in &ps {
            for m in &ps {
                let k: RatFunc = t.expansions().map(|j| &(&j.theta(l) * &j.theta(m)) / &j.norm).sum();
                let want = if l == m {
                    (RatFunc::alpha_pow(l.len() as i64).scale_int(&l.z().into())).inv().unwrap()
                } else {
                    RatFunc::zero()
                };
                assert_eq!(k, want);
            }
        }
    }
    let scaled = JackOracle::from_tables(tables);
    let nu = Partition::row(2);
    assert_ne!(scaled.a_table(2, &nu).unwrap(), oracle.a_table(2, &nu).unwrap());
}
