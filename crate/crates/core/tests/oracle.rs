use std::collections::BTreeSet;

use galois_closure::connection::Parameterization;
use galois_closure::inference::{syntactic_closure, FiniteSystem, Implication, Theory, DEFAULT_BUDGET};
use galois_closure::lattice::FiniteLattice;
use galois_closure::oracle::{
    bfs_closure, bfs_provable, direct_semantic_closure, enumerate_operators, fd_closure,
};
use galois_closure::semantics::{attribute_mask, mask_attributes, Model};

#[test]
fn breadth_first_search() {
    let l = FiniteLattice::powerset(&["x", "y", "z"]).unwrap();
    let e = |s: &str| l.index_of(s).unwrap();
    let t = Theory::new(vec![
        Implication::new(e("{x}"), e("{y}")),
        Implication::new(e("{y}"), e("{z}")),
    ]);
    let sys = FiniteSystem::new(&l, &Parameterization::identity(&l)).unwrap();
    for a in l.elements() {
        for b in l.down_set(a) {
            assert!(bfs_provable(&sys, &t, &Implication::new(a, b), 0));
        }
    }
    assert!(bfs_provable(&sys, &t, &Implication::new(e("{x}"), e("{z}")), 2));
    assert!(!bfs_provable(
        &sys,
        &t,
        &Implication::new(e("{y}"), e("{x}")),
        1000
    ));

    let oracle = bfs_closure(&sys, &t);
    for a in l.elements() {
        let engine = syntactic_closure(&sys, &t, &a, DEFAULT_BUDGET).unwrap().value;
        assert_eq!(oracle.apply(a), engine);
        let deps: Vec<_> = t
            .iter()
            .map(|i| (mask_attributes(i.lhs), mask_attributes(i.rhs)))
            .collect();
        assert_eq!(attribute_mask(&fd_closure(&deps, &mask_attributes(a))), engine);
    }
}

#[test]
fn enumeration_and_semantic_scan() {
    let names = ["0", "1", "2", "3"];
    for n in 2..=4 {
        let l = FiniteLattice::chain(&names[..n]).unwrap();
        let maps: BTreeSet<Vec<usize>> = enumerate_operators(&l)
            .unwrap()
            .map(|c| c.table().to_vec())
            .collect();
        assert_eq!(maps.len(), n.pow(n as u32));
    }

    let one = FiniteLattice::chain(&["0"]).unwrap();
    let sys = FiniteSystem::new(&one, &Parameterization::identity(&one)).unwrap();
    assert_eq!(direct_semantic_closure(&sys, &Model::new(vec![0]), 0), 0);
    let l = FiniteLattice::powerset(&["p", "q"]).unwrap();
    let sys = FiniteSystem::new(&l, &Parameterization::identity(&l)).unwrap();
    assert_eq!(direct_semantic_closure(&sys, &Model::new(vec![]), 1), l.top());
}
