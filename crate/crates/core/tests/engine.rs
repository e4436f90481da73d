use jacklab_core::engine::{a_tilde, check_table, h_from_a, h_tilde, ConjectureReport, ViolationKind};
use jacklab_core::partition::{at_most_one_large_part, partitions_of};
use jacklab_core::{CoefficientEngine, Partition, Recurrences};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn ann_and_hnn_match_main_route() {
    let e = CoefficientEngine::new(7);
    let mut r = Recurrences::new();
    for n in 1..=7 {
        let nu = Partition::row(n);
        let a = e.a_table(n, &nu).unwrap();
        let ht = h_tilde(&h_from_a(&a).unwrap()).unwrap();
        for (lambda, v) in a.rows() {
            assert_eq!(r.ann(&lambda), v, "ann at {lambda:?}");
            assert_eq!(&r.hnn(&lambda), ht.get(&lambda), "hnn at {lambda:?}");
        }
    }
}

#[test]
fn rectangular_h_recurrences_match_main_route() {
    let e = CoefficientEngine::new(9);
    let mut r = Recurrences::new();
    for (k, m) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3)] {
        let nu = Partition::rectangle(k, m);
        let ht = h_tilde(&h_from_a(&e.a_table(k * m, &nu).unwrap()).unwrap()).unwrap();
        for (lambda, v) in ht.rows() {
            let got = if k == 2 { r.h2m(&lambda) } else { r.h3m(&lambda) }.unwrap();
            assert_eq!(got, v, "[{k}^{m}] at {lambda:?}");
        }
    }
}

#[test]
fn dispatcher_matches_main_route() {
    let e = CoefficientEngine::new(7);
    let mut r = Recurrences::new();
    let mut checked = 0;
    for n in 1..=7 {
        for nu in partitions_of(n).into_iter().filter(at_most_one_large_part) {
            let at = a_tilde(&e.a_table(n, &nu).unwrap()).unwrap();
            for (lambda, v) in at.rows() {
                assert_eq!(r.a_tilde(&lambda, &nu).unwrap(), v, "nu={nu:?} lambda={lambda:?}");
                checked += 1;
            }
        }
    }
    assert!(checked > 300);
}

#[test]
fn ones_twos_threes_directly() {
    let e = CoefficientEngine::new(7);
    let mut r = Recurrences::new();
    for (rho, k) in [("4", 1), ("4", 3), ("5", 2), ("3,2", 2), ("2,2", 1)] {
        let rho = p(rho);
        let nu = rho.union(&Partition::column(k));
        let a = e.a_table(nu.weight(), &nu).unwrap();
        for (lambda, v) in a.rows() {
            let got = r.ones(&lambda, &rho, k).unwrap();
            assert_eq!(got, v, "ones rho={rho:?} lambda={lambda:?}");
        }
    }
    for (rho, l) in [("", 2), ("", 3), ("3", 2), ("4", 1), ("5", 1)] {
        let rho = p(rho);
        let nu = rho.union(&Partition::rectangle(2, l));
        let at = a_tilde(&e.a_table(nu.weight(), &nu).unwrap()).unwrap();
        for (lambda, v) in at.rows() {
            assert_eq!(r.twos(&lambda, &rho, l).unwrap(), v);
        }
    }
    for (rho, m) in [("", 2), ("4", 1), ("", 2)] {
        let rho = p(rho);
        let nu = rho.union(&Partition::rectangle(3, m));
        let at = a_tilde(&e.a_table(nu.weight(), &nu).unwrap()).unwrap();
        for (lambda, v) in at.rows() {
            assert_eq!(r.threes(&lambda, &rho, m).unwrap(), v);
        }
    }
    let at = a_tilde(&e.a_table(6, &p("3,3")).unwrap()).unwrap();
    assert_eq!(&r.threes(&p("3,3"), &Partition::empty(), 2).unwrap(), at.get(&p("3,3")));
}

#[test]
fn out_of_scope_shapes() {
    let mut r = Recurrences::new();
    assert!(r.a_tilde(&p("4,4"), &p("4,4")).is_err());
    assert!(r.ones(&p("2"), &p("1"), 1).is_err());
    assert!(r.threes(&p("3"), &Partition::empty(), 1).is_err());
}

#[test]
fn omega_order_is_irrelevant() {
    let e = CoefficientEngine::new(7);
    for n in 2..=7 {
        for nu in partitions_of(n) {
            let tail = &nu.parts()[1..];
            if tail.len() < 2 {
                continue;
            }
            let base = e.a_table(n, &nu).unwrap();
            let mut order = tail.to_vec();
            for _ in 0..tail.len() {
                order.rotate_left(1);
                assert_eq!(e.a_table_ordered(n, &nu, &order).unwrap(), base, "nu={nu:?} order={order:?}");
            }
            order.reverse();
            assert_eq!(e.a_table_ordered(n, &nu, &order).unwrap(), base);
        }
    }
    assert!(e.a_table_ordered(4, &p("2,1,1"), &[2, 1]).is_err());
}

#[test]
fn conjectured_properties_up_to_8() {
    let e = CoefficientEngine::new(8);
    let mut report = ConjectureReport::default();
    for n in 1..=8 {
        for nu in partitions_of(n) {
            let a = e.a_table(n, &nu).unwrap();
            let v = check_table(&a).unwrap();
            report.absorb(&a, v);
        }
    }
    assert_eq!(report.tables, 66);
    for v in &report.violations {
        eprintln!("{v}");
    }
    assert_eq!(report.count(|k| matches!(k, ViolationKind::BetaPositivity(_))), 0);
    assert!(report.is_clean());
}
