use std::sync::Arc;

use galois_closure::fixtures;
use galois_closure::lattice::FiniteLattice;
use galois_closure::oracle::residuum_by_scan;
use galois_closure::residuated::{
    a_multiple, a_shift, subsethood, validate_filter, validate_hedge, Hedge, LSetSpace, LeqFilter,
    ResiduatedLattice,
};

#[test]
fn fixture_algebras() {
    assert!(fixtures::drastic_chain().validate().is_valid());
    assert!(fixtures::idempotent_b_chain().validate().is_valid());

    let mut r = fixtures::drastic_chain();
    let (a, zero, one) = (1, 0, 3);
    r.set_residuum(a, zero, one);
    let report = r.validate();
    // a⊗1 = a ≰ 0, yet 1 ≤ a→0
    assert!(report.adjointness.contains(&(a, one, zero)));
}

#[test]
fn standard_chains() {
    let b = ResiduatedLattice::boolean();
    assert_eq!(b.otimes(1, 0), 0);
    assert_eq!(b.otimes(1, 1), 1);
    assert_eq!(b.residuum(1, 0), 0);

    let l = ResiduatedLattice::lukasiewicz_chain(3);
    let half = l.lattice().index_of("0.5").unwrap();
    assert_eq!(l.otimes(half, half), 0);

    let g = ResiduatedLattice::goedel_chain(3);
    assert_eq!(g.residuum(half, 0), 0);
    assert_eq!(g.otimes(half, half), half);
    for r in [l, g] {
        assert!(r.validate().is_valid());
        assert_eq!(
            residuum_by_scan(r.lattice(), &r.otimes_table()),
            r.residuum_table()
        );
    }
}

#[test]
fn hedges() {
    for r in [
        fixtures::drastic_chain(),
        fixtures::idempotent_b_chain(),
        ResiduatedLattice::goedel_chain(3),
    ] {
        assert!(validate_hedge(&r, &Hedge::identity(&r), true).is_valid());
        assert!(validate_hedge(&r, &Hedge::globalization(&r), true).is_valid());
    }
    let b = ResiduatedLattice::boolean();
    assert_eq!(Hedge::globalization(&b).star, vec![0, 1]);
    let f1 = fixtures::drastic_chain();
    assert_eq!(Hedge::globalization(&f1).apply(2), 0);

    let f2 = fixtures::idempotent_b_chain();
    let report = validate_hedge(&f2, &fixtures::non_idempotent_hedge(), true);
    assert!(report.top_fixed && report.subdiagonal.is_empty() && report.mon_star.is_empty());
    assert_eq!(report.idempotent, vec![2]);
}

#[test]
fn filters() {
    let l = fixtures::drastic_chain().lattice().clone();
    assert!(validate_filter(&l, &LeqFilter::top_only(&l)).is_valid());
    assert!(validate_filter(&l, &LeqFilter::whole(&l)).is_valid());
    let report = validate_filter(&l, &LeqFilter::new([1, 3]));
    assert!(!report.is_valid());
    assert_eq!(report.missing().into_iter().collect::<Vec<_>>(), vec![2]);
    assert!(!validate_filter(&l, &LeqFilter::new([])).is_valid());
}

#[test]
fn lset_lattices() {
    let b = LSetSpace::new(Arc::new(ResiduatedLattice::boolean()), &["y"], 16).unwrap();
    assert_eq!(b.lattice().len(), 2);

    let f1 = fixtures::single_attribute_space(fixtures::drastic_chain());
    let names: Vec<String> = f1.lattice().elements().map(|e| f1.lattice().name(e)).collect();
    assert_eq!(names, ["{y^0}", "{y^a}", "{y^b}", "{y^1}"]);
    assert_eq!(
        f1.lattice(),
        &FiniteLattice::chain(&["{y^0}", "{y^a}", "{y^b}", "{y^1}"]).unwrap()
    );

    let g = LSetSpace::new(Arc::new(ResiduatedLattice::goedel_chain(3)), &["y", "z"], 16).unwrap();
    let l = g.lattice();
    assert_eq!(l.len(), 9);
    let e = |s: &str| l.index_of(s).unwrap();
    assert!(l.leq(e("{y^0.5,z^0}"), e("{y^1,z^0.5}")));
    assert!(!l.leq(e("{y^1,z^0}"), e("{y^0.5,z^1}")));
}

#[test]
fn subsethood_and_shifts() {
    let b = ResiduatedLattice::boolean();
    let space = LSetSpace::new(Arc::new(b.clone()), &["y"], 16).unwrap();
    assert_eq!(subsethood(&b, &space.lset(1), &space.lset(0)).unwrap(), 0);
    assert_eq!(space.subsethood(1, 1), 1);

    for r in [fixtures::drastic_chain(), fixtures::idempotent_b_chain()] {
        let space = fixtures::single_attribute_space(r.clone());
        let y0 = space.lset(space.constant(0));
        let shifted = a_shift(&r, 1, &y0);
        assert_eq!(space.element(&shifted).unwrap(), space.constant(2));
        for e in space.lattice().elements() {
            let set = space.lset(e);
            assert_eq!(a_multiple(&r, 3, &set), set);
        }
    }
    let f1 = fixtures::drastic_chain();
    let space = fixtures::single_attribute_space(f1);
    assert_eq!(space.subsethood(space.constant(2), space.constant(0)), 2);
}

#[test]
fn parameterizations() {
    let b = LSetSpace::new(Arc::new(ResiduatedLattice::boolean()), &["y"], 16).unwrap();
    let r = b.algebra().clone();
    let p = b.hedge_parameterization(&Hedge::identity(&r));
    assert_eq!(p.len(), 2);
    assert!(p.position(&b.multiplication_connection(0)).is_some());
    assert_eq!(b.filter_parameterization(&LeqFilter::whole(r.lattice())).len(), 2);

    let f1 = fixtures::single_attribute_space(fixtures::drastic_chain());
    let glob = Hedge::globalization(f1.algebra());
    assert_eq!(f1.hedge_parameterization(&glob).len(), 2);
    assert_eq!(
        f1.filter_parameterization(&LeqFilter::top_only(f1.algebra().lattice()))
            .len(),
        1
    );

    // the non-idempotent hedge on the idempotent-b chain still yields a closed family here:
    // its degrees are 0, a, 1 and a⊗a = 0
    let f2 = fixtures::single_attribute_space(fixtures::idempotent_b_chain());
    let p = f2.hedge_parameterization(&fixtures::non_idempotent_hedge());
    assert_eq!(p.len(), 3);
    assert_eq!(p.generate_monoid(10).unwrap().len(), 3);

    let l = LSetSpace::new(Arc::new(ResiduatedLattice::lukasiewicz_chain(3)), &["y"], 16).unwrap();
    let k = LeqFilter::new([1, 2]);
    let p = l.filter_parameterization(&k);
    assert_eq!(p.len(), 2);
    assert!(!p.is_closed());
}

#[test]
fn connection_algebras() {
    for r in [
        ResiduatedLattice::goedel_chain(3),
        ResiduatedLattice::lukasiewicz_chain(3),
    ] {
        let space = fixtures::single_attribute_space(r.clone());
        let s = space.hedge_parameterization(&Hedge::identity(&r));
        let ca = space.parameterization_residuum(&s).unwrap();
        assert!(ca.report.is_valid());
        // member of a⊗ corresponds to the degree a
        let degree = |i: usize| {
            (0..3)
                .find(|&a| space.multiplication_connection(a) == *s.get(i))
                .unwrap()
        };
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(degree(ca.algebra.otimes(i, j)), r.otimes(degree(i), degree(j)));
                assert_eq!(
                    degree(ca.algebra.residuum(i, j)),
                    r.residuum(degree(i), degree(j))
                );
            }
        }
    }

    let b = LSetSpace::new(Arc::new(ResiduatedLattice::boolean()), &["y"], 16).unwrap();
    let s = b.hedge_parameterization(&Hedge::globalization(b.algebra()));
    let ca = b.parameterization_residuum(&s).unwrap();
    assert_eq!(ca.algebra.len(), 2);
    assert!(ca.report.is_valid());

    let f1 = fixtures::single_attribute_space(fixtures::drastic_chain());
    let s = f1.hedge_parameterization(&Hedge::globalization(f1.algebra()));
    let ca = f1.parameterization_residuum(&s).unwrap();
    assert_eq!(ca.algebra.len(), 2);
    assert!(ca.report.is_valid());

    let l = LSetSpace::new(Arc::new(ResiduatedLattice::lukasiewicz_chain(3)), &["y"], 16).unwrap();
    let p = l.filter_parameterization(&LeqFilter::new([1, 2]));
    assert!(l.parameterization_residuum(&p).is_err());
}
