use std::collections::BTreeMap;

use jacklab_core::hypermap::{
    enumerate_labelled, labelled_count, monopole_census, theorem_h_check, Census, RootClass, StarHypermap,
};
use jacklab_core::matching::{enumerate_g, DEFAULT_BUDGET};
use jacklab_core::partition::{factorial, partitions_of};
use jacklab_core::{CoefficientEngine, Partition};
use num_bigint::BigUint;

fn check(engine: &CoefficientEngine, k: usize, m: usize) {
    let r = theorem_h_check(k, m, engine, 8).unwrap();
    for row in r.rows.iter().filter(|r| !r.ok()) {
        eprintln!("k={k} m={m} lambda={} hist={:?} want={}", row.lambda, row.histogram, row.expected);
    }
    assert!(r.passed(), "k={k} m={m}");
}

#[test]
fn theta_generating_function_matches_h_tilde() {
    let engine = CoefficientEngine::new(6);
    for m in 1..=3 {
        check(&engine, 2, m);
    }
    for m in 1..=2 {
        check(&engine, 3, m);
    }
    for n in 1..=6 {
        check(&engine, n, 1);
    }
}

#[test]
fn single_edge_vertices_through_eight() {
    let engine = CoefficientEngine::new(8);
    for n in 1..=8 {
        check(&engine, 1, n);
        // Only λ = (n) occurs, (n−1)! times, all orientable.
        let c = Census::generic(&vec![1; n], 8).unwrap();
        let total = factorial(n - 1);
        assert_eq!(c.by_lambda.len(), 1);
        let (t, o) = c.by_lambda[&Partition::row(n)];
        assert_eq!((BigUint::from(t), BigUint::from(o)), (total.clone(), total));
    }
}

#[test]
fn one_black_vertex_of_degree_three() {
    let engine = CoefficientEngine::new(3);
    let r = theorem_h_check(3, 1, &engine, 8).unwrap();
    let row = r.rows.iter().find(|r| r.lambda == Partition::row(3)).unwrap();
    assert_eq!(row.histogram.iter().sum::<u64>(), 8);
}

#[test]
fn monopoles_agree_with_hypermaps() {
    for m in 1..=3 {
        assert_eq!(monopole_census(m, 8).unwrap(), Census::generic(&vec![2; m], 8).unwrap());
    }
}

#[test]
fn counts_match_matching_oracle() {
    for (k, m) in [(1, 3), (1, 5), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (5, 1), (6, 1)] {
        let n = k * m;
        let nu = Partition::rectangle(k, m);
        let census = Census::generic(&vec![k; m], 8).unwrap();
        assert_eq!(BigUint::from(census.total()), labelled_count(k, m));
        let factor = factorial(m) * factorial(k).pow(m as u32) / BigUint::from(n);
        for l in partitions_of(n) {
            let oracle = enumerate_g(&Partition::row(n), &l, &nu, DEFAULT_BUDGET).unwrap().len();
            let got = census.by_lambda.get(&l).map_or(0, |v| v.0);
            assert_eq!(BigUint::from(got), &factor * BigUint::from(oracle), "k={k} m={m} lambda={l}");
        }
    }
}

#[test]
fn root_operations() {
    for blocks in [vec![2, 2], vec![3, 1, 2], vec![4, 2], vec![5]] {
        let mut by_class: BTreeMap<RootClass, usize> = BTreeMap::new();
        enumerate_labelled(&blocks, 8, |m| {
            let mut again = m.clone();
            again.canonicalize();
            assert_eq!(&again, m);
            assert_eq!(&m.mirror().mirror(), m);
            assert_eq!(m.mirror().face_degrees(), m.face_degrees());
            let chi = m.euler_characteristic();
            assert!(chi <= 2);
            if m.is_orientable() {
                assert_eq!(chi % 2, 0);
            }
            let class = m.classify_root();
            *by_class.entry(class).or_default() += 1;
            let faces = m.face_degrees().len() as isize;
            let after = m.delete_root().face_degrees().len() as isize;
            match class {
                RootClass::Leaf => assert_eq!(after, faces),
                RootClass::CrossBorder => assert_eq!(after, faces),
                RootClass::Border => assert_eq!(after, faces - 1),
                RootClass::Handle => {
                    let tau = m.checked_twist_root().unwrap();
                    assert_eq!(tau.delete_root(), m.delete_root());
                    assert!(!(m.is_orientable() && tau.is_orientable()));
                    assert_eq!(tau.twist_root(), *m);
                }
            }
            if class != RootClass::Handle {
                assert!(m.checked_twist_root().is_err());
            }
        })
        .unwrap();
        if blocks[0] > 1 {
            assert!(by_class.contains_key(&RootClass::Handle) && by_class.contains_key(&RootClass::Border));
        }
    }
}

#[test]
fn orientable_maps_have_theta_zero() {
    enumerate_labelled(&[3, 3], 8, |m| {
        assert_eq!(m.theta() == 0, m.is_orientable());
        let (t, trace) = m.theta_trace();
        assert_eq!(trace.len(), 6);
        assert_eq!(t, m.theta());
    })
    .unwrap();
    let bad = StarHypermap::new(vec![2], vec![0, 1], vec![1, 0], vec![false, false]);
    assert!(bad.is_none());
}
