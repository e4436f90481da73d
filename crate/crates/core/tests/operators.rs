use jacklab_core::partition::partitions_of;
use jacklab_core::powersum::{e2, e2_perp, omega_closed, pi_closed, GradedOperator, OperatorTower};
use jacklab_core::PSFun;

#[test]
fn omega_closed_forms_match_commutators_to_degree_10() {
    let tower = OperatorTower::build_partial(13, 3);
    for k in 1..=3 {
        let closed = omega_closed(k, 13).unwrap();
        let diff = GradedOperator::first_difference(&closed, tower.omega(k).unwrap(), 10).unwrap();
        assert_eq!(diff, None, "Omega_{k} differs");
    }
}

#[test]
fn pi_is_a_scaled_derivative() {
    let tower = OperatorTower::build_partial(10, 5);
    for k in 1..=5 {
        let diff = GradedOperator::first_difference(tower.pi(k).unwrap(), &pi_closed(k, 10), 10).unwrap();
        assert_eq!(diff, None, "Pi_{k} differs");
    }
}

#[test]
fn e2_and_e2_perp_are_adjoint() {
    let (up, down) = (e2(8), e2_perp(8));
    for d in 0..8 {
        for l in partitions_of(d) {
            for m in partitions_of(d + 1) {
                let lhs = up.apply(&PSFun::p(l.clone())).unwrap().inner(&PSFun::p(m.clone()));
                let rhs = PSFun::p(l.clone()).inner(&down.apply(&PSFun::p(m.clone())).unwrap());
                assert_eq!(lhs, rhs, "{l:?} {m:?}");
            }
        }
    }
}

#[test]
fn operators_preserve_grading() {
    let tower = OperatorTower::build(7);
    for (k, shift) in [(1usize, 1isize), (2, 2), (3, 3)] {
        let op = tower.omega(k).unwrap();
        assert_eq!(op.shift(), shift);
        for (input, output, _) in op.entries() {
            assert_eq!(output.weight() as isize, input.weight() as isize + shift);
        }
    }
    assert!(tower.delta().entries().iter().all(|(i, o, _)| o.weight() == i.weight() + 1));
}
