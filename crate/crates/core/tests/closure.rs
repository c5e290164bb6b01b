use galois_closure::closure::{
    check_closure_system, check_equiv_characterizations, check_s_closure, operator_from_system,
    system_from_operator, theory_from_operator, ClosureOperator, ClosureSystem, MeetWitness,
};
use galois_closure::connection::Parameterization;
use galois_closure::fixtures;
use galois_closure::lattice::FiniteLattice;
use galois_closure::oracle::enumerate_operators;
use galois_closure::residuated::LeqFilter;

#[test]
fn s_closure_checks() {
    let space = fixtures::single_attribute_space(fixtures::drastic_chain());
    let l = space.lattice();
    let id = Parameterization::identity(l);
    assert!(check_s_closure(l, &ClosureOperator::identity(l), &id)
        .unwrap()
        .is_s_closure());

    let c = fixtures::zero_or_top_operator(&space);
    assert!(check_s_closure(l, &c, &id).unwrap().is_s_closure());

    let s = space.filter_parameterization(&LeqFilter::new([1, 3]));
    let report = check_s_closure(l, &c, &s).unwrap();
    assert!(report.ext.is_empty() && report.mon.is_empty());
    let a_times = s.position(&space.multiplication_connection(1)).unwrap();
    assert_eq!(report.idm, vec![(a_times, space.constant(0))]);
    // the failing value: C(a → C({y^0})) = C({y^b}) = {y^1}
    let v = s.get(a_times).upper(c.apply(space.constant(0)));
    assert_eq!(v, space.constant(2));
    assert_eq!(c.apply(v), l.top());
}

#[test]
fn characterizations() {
    let (l, c) = fixtures::extensive_non_idempotent();
    let r = check_equiv_characterizations(&l, &c, &Parameterization::identity(&l)).unwrap();
    assert!(r.mon_alt && !r.ord_idm && !r.s_closure);
    assert!(r.agree());

    let l3 = FiniteLattice::chain(&["0", "a", "1"]).unwrap();
    let id = Parameterization::identity(&l3);
    let mut closures = 0;
    for c in enumerate_operators(&l3).unwrap() {
        let r = check_equiv_characterizations(&l3, &c, &id).unwrap();
        assert!(r.agree(), "{:?}", c.table());
        if r.s_closure {
            closures += 1;
            assert!(r.rows().iter().all(|&(_, v)| v));
        }
    }
    // closure operators on a 3-chain correspond to subsets containing the top
    assert_eq!(closures, 4);
}

#[test]
fn closure_systems() {
    let l3 = FiniteLattice::chain(&["0", "a", "1"]).unwrap();
    let id = Parameterization::identity(&l3);
    assert!(check_closure_system(&l3, &ClosureSystem::new([2]), &id)
        .unwrap()
        .is_s_closure_system());
    let r = check_closure_system(&l3, &ClosureSystem::new([1]), &id).unwrap();
    assert_eq!(r.meet_closed, Some(MeetWitness::MissingTop));
    assert!(!r.single_condition.is_empty());

    let space = fixtures::single_attribute_space(fixtures::drastic_chain());
    let l = space.lattice();
    let id = Parameterization::identity(l);
    let sys = ClosureSystem::new([space.constant(0), space.constant(3)]);
    assert!(check_closure_system(l, &sys, &id).unwrap().is_s_closure_system());
    assert_eq!(
        operator_from_system(l, &sys, &id).unwrap(),
        fixtures::zero_or_top_operator(&space)
    );
    assert_eq!(
        system_from_operator(l, &fixtures::zero_or_top_operator(&space), &id).unwrap(),
        sys
    );

    assert_eq!(
        operator_from_system(&l3, &ClosureSystem::new([2]), &Parameterization::identity(&l3)).unwrap(),
        ClosureOperator::constant_top(&l3)
    );
    assert_eq!(
        operator_from_system(
            &l3,
            &ClosureSystem::new([0, 1, 2]),
            &Parameterization::identity(&l3)
        )
        .unwrap(),
        ClosureOperator::identity(&l3)
    );
}

#[test]
fn theories_of_operators() {
    let two = FiniteLattice::chain(&["0", "1"]).unwrap();
    assert_eq!(
        theory_from_operator(&two, &ClosureOperator::identity(&two)).len(),
        3
    );
    assert_eq!(
        theory_from_operator(&two, &ClosureOperator::constant_top(&two)).len(),
        4
    );
    let space = fixtures::single_attribute_space(fixtures::drastic_chain());
    let c = fixtures::zero_or_top_operator(&space);
    // one consequent for {y^0}, four for each of the other three elements
    assert_eq!(theory_from_operator(space.lattice(), &c).len(), 13);
    assert_eq!(
        theory_from_operator(space.lattice(), &ClosureOperator::identity(space.lattice())).len(),
        10
    );
}
