use std::collections::BTreeMap;

use jacklab_core::matching::{
    class_algebra_row, enumerate_g, labelled_matchings, matching_counts, theorem_a_check, weight, DeletionOrder,
    LabelledMatching, Matching, DEFAULT_BUDGET,
};
use jacklab_core::partition::{at_most_one_large_part, partitions_of, Surgery};
use jacklab_core::{CoefficientEngine, Partition, RatFunc};
use num_rational::BigRational;
use num_traits::ToPrimitive;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn eval(r: &RatFunc, x: i64) -> BigRational {
    r.eval_int(x).expect("no pole")
}

#[test]
fn weight_generating_function_matches_a_tilde() {
    let mut checked = 0;
    for n in 1..=6 {
        for nu in partitions_of(n).into_iter().filter(at_most_one_large_part) {
            let r = theorem_a_check(&nu, DEFAULT_BUDGET).unwrap();
            for row in r.rows.iter().filter(|r| !r.ok()) {
                eprintln!("nu={nu} lambda={} hist={:?} want={}", row.lambda, row.histogram, row.expected);
            }
            assert!(r.passed(), "nu={nu}");
            checked += r.rows.len();
        }
    }
    assert!(checked > 100);
}

#[test]
fn small_weight_examples() {
    let d = Matching::from_pairs(2, &[((1, false), (2, false)), ((1, true), (2, true))]).unwrap();
    assert_eq!(weight(&LabelledMatching::with_default_labels(p("2"), d)).unwrap(), 1);
    let mut hist = [0u64; 3];
    for lm in labelled_matchings(&p("3"), &p("3"), DEFAULT_BUDGET).unwrap() {
        hist[weight(&lm).unwrap()] += 1;
    }
    assert_eq!(hist, [1, 1, 2]);
    let lm = labelled_matchings(&p("4,4"), &p("4,4"), DEFAULT_BUDGET).unwrap().remove(0);
    assert!(weight(&lm).is_err());
}

#[test]
fn specializations_at_one_and_two() {
    let engine = CoefficientEngine::new(7);
    for n in 1..=7 {
        let row = Partition::row(n);
        let counts = matching_counts(&row, DEFAULT_BUDGET).unwrap();
        let c = (n <= 6).then(|| class_algebra_row(&row, 6).unwrap());
        for nu in partitions_of(n) {
            let t = engine.a_table(n, &nu).unwrap();
            for (l, a) in t.rows() {
                let g = counts.total(&l, &nu);
                assert_eq!(eval(&a, 2), BigRational::from_integer(g.into()), "a(2) lambda={l} nu={nu}");
                if let Some(c) = &c {
                    let want = c.get(&(l.clone(), nu.clone())).copied().unwrap_or(0);
                    assert_eq!(eval(&a, 1), BigRational::from_integer(want.into()), "a(1) lambda={l} nu={nu}");
                    // Bipartite matchings count the same thing.
                    assert_eq!(counts.bipartite(&l, &nu), want);
                }
            }
        }
    }
}

#[test]
fn labelled_count_relation() {
    for n in 1..=6 {
        for nu in partitions_of(n) {
            let factor = (nu.aut() / jacklab_core::partition::factorial(nu.multiplicity(1))).to_u64().unwrap();
            for l in partitions_of(n) {
                let plain = enumerate_g(&l, &Partition::row(n), &nu, DEFAULT_BUDGET).unwrap().len() as u64;
                let labelled = labelled_matchings(&l, &nu, DEFAULT_BUDGET).unwrap().len() as u64;
                assert_eq!(labelled, factor * plain, "lambda={l} nu={nu}");
            }
        }
    }
}

#[test]
fn deletion_order_is_irrelevant() {
    for n in 2..=5 {
        for nu in partitions_of(n).into_iter().filter(|nu| nu.len() > 1) {
            let i = *nu.parts().last().unwrap();
            for l in partitions_of(n) {
                for lm in labelled_matchings(&l, &nu, DEFAULT_BUDGET).unwrap() {
                    let a = lm.delete_cycle(i, DeletionOrder::Ascending).unwrap();
                    let b = lm.delete_cycle(i, DeletionOrder::Descending).unwrap();
                    assert_eq!(a.result, b.result);
                    assert_eq!(a.bipartite, b.bipartite);
                }
            }
        }
    }
}

#[test]
fn fixed_point_deletion_only_drops_a_one() {
    for n in 2..=5 {
        for nu in partitions_of(n).into_iter().filter(|nu| nu.multiplicity(1) > 0 && nu.len() > 1) {
            for l in partitions_of(n) {
                for lm in labelled_matchings(&l, &nu, DEFAULT_BUDGET).unwrap() {
                    let d = lm.delete_cycle(1, DeletionOrder::Ascending).unwrap();
                    assert_eq!(d.result.nu(), nu.without_part(1).unwrap());
                    assert!(d.bipartite);
                }
            }
        }
    }
}

/// Deleting the top-labelled square either shrinks one cycle of `g ∪ b` by
/// two (always non-bipartite), splits one (always bipartite), or merges two
/// (half bipartite). Each case is counted against the reduced objects.
#[test]
fn square_cases_have_the_predicted_sizes() {
    let labelled_count = |l: &Partition, nu: &Partition| labelled_matchings(l, nu, DEFAULT_BUDGET).unwrap().len() as u64;
    for n in 3..=6 {
        for nu in partitions_of(n).into_iter().filter(|nu| nu.multiplicity(1) == 0 && nu.multiplicity(2) > 0 && nu.len() > 1) {
            let reduced = nu.without_part(2).unwrap();
            for l in partitions_of(n) {
                // λ' -> (bipartite, non-bipartite)
                let mut seen: BTreeMap<Partition, (u64, u64)> = BTreeMap::new();
                for lm in labelled_matchings(&l, &nu, DEFAULT_BUDGET).unwrap() {
                    let d = lm.delete_cycle(2, DeletionOrder::Ascending).unwrap();
                    let e = seen.entry(d.result.lambda).or_default();
                    if d.bipartite { e.0 += 1 } else { e.1 += 1 }
                }
                let mut want: BTreeMap<Partition, (u64, u64)> = BTreeMap::new();
                let parts = l.parts();
                for &li in parts {
                    if li > 2 {
                        let lp = l.surgery(Surgery::DoubleDown(li)).unwrap();
                        want.entry(lp.clone()).or_default().1 += (li * (li - 1) / 2) as u64 * labelled_count(&lp, &reduced);
                    }
                    for d in 1..li.saturating_sub(2) {
                        let lp = l.surgery(Surgery::DoubleUp(li - 2 - d, d)).unwrap();
                        // Summed over d the ½ λ_i factor is integral.
                        want.entry(lp.clone()).or_default().0 += li as u64 * labelled_count(&lp, &reduced);
                    }
                }
                for v in want.values_mut() {
                    v.0 /= 2;
                }
                for i in 0..parts.len() {
                    for j in i + 1..parts.len() {
                        if parts[i] + parts[j] == 2 {
                            continue;
                        }
                        let lp = l.surgery(Surgery::DoubleDownMerge(parts[i], parts[j])).unwrap();
                        let c = (parts[i] * parts[j]) as u64 * labelled_count(&lp, &reduced);
                        let e = want.entry(lp).or_default();
                        e.0 += c;
                        e.1 += c;
                    }
                }
                want.retain(|_, v| *v != (0, 0));
                assert_eq!(seen, want, "lambda={l} nu={nu}");
            }
        }
    }
}
