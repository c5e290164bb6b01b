//! Deliberately naive reference computations.
//!
//! Nothing here shares code with the saturation engine or the checkers it is
//! compared against, beyond the lattice tables themselves.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::closure::ClosureOperator;
use crate::inference::{EffectiveLattice, FiniteSystem, Implication, Theory};
use crate::lattice::FiniteLattice;
use crate::semantics::{holds, Model};

/// Largest number of self-maps [`enumerate_operators`] will produce.
pub const MAX_ENUMERATED_MAPS: usize = 3125;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{len}^{len} self-maps exceed the limit of {MAX_ENUMERATED_MAPS}")]
    TooLarge { len: usize },
}

/// All pairs `(a, b)` with `a ⇒ b` derivable within `depth` rounds.
///
/// Round 0 holds the axioms `a ⇒ b` with `b ≤ a` and the members of `Σ`.
/// Each further round applies pseudo-transitivity and the adjoint rule to
/// everything derived so far, all at once. Stops early once a round adds
/// nothing. The result is indexed `[a][b]`.
pub fn derivable(sys: &FiniteSystem<'_>, theory: &Theory<usize>, depth: usize) -> Vec<Vec<bool>> {
    let l = sys.lattice();
    let n = l.len();
    let mut d = vec![vec![false; n]; n];
    for a in l.elements() {
        for b in l.elements() {
            d[a][b] = l.leq(b, a);
        }
    }
    for imp in theory.iter() {
        d[imp.lhs][imp.rhs] = true;
    }
    for _ in 0..depth {
        let mut next = d.clone();
        for a in 0..n {
            for b in 0..n {
                if !d[a][b] {
                    continue;
                }
                for mu in 0..sys.monoid().len() {
                    next[sys.lower(&mu, &a)][sys.lower(&mu, &b)] = true;
                }
                for c in 0..n {
                    let bc = l.join(b, c);
                    let ac = l.join(a, c);
                    for e in 0..n {
                        if d[bc][e] {
                            next[ac][e] = true;
                        }
                    }
                }
            }
        }
        if next == d {
            break;
        }
        d = next;
    }
    d
}

/// Breadth-first search for `imp` among the implications derivable from `Σ`.
pub fn bfs_provable(
    sys: &FiniteSystem<'_>,
    theory: &Theory<usize>,
    imp: &Implication<usize>,
    depth: usize,
) -> bool {
    derivable(sys, theory, depth)[imp.lhs][imp.rhs]
}

/// `⋁{b : a ⇒ b derivable}` with unbounded depth.
pub fn bfs_closure(sys: &FiniteSystem<'_>, theory: &Theory<usize>) -> ClosureOperator {
    let l = sys.lattice();
    let n = l.len();
    let d = derivable(sys, theory, n * n);
    ClosureOperator::new(
        l.elements()
            .map(|a| l.join_all(l.elements().filter(|&b| d[a][b])))
            .collect(),
    )
}

/// Every self-map of `l`, in lexicographic order of tables.
pub fn enumerate_operators(l: &FiniteLattice) -> Result<impl Iterator<Item = ClosureOperator>, OracleError> {
    let n = l.len();
    let total = (n as u32)
        .checked_pow(n as u32)
        .filter(|&t| t as usize <= MAX_ENUMERATED_MAPS)
        .ok_or(OracleError::TooLarge { len: n })? as usize;
    Ok((0..total).map(move |mut code| {
        let mut table = vec![0; n];
        for slot in table.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        ClosureOperator::new(table)
    }))
}

/// `⋁{b : a ⇒ b is true in M}`, scanning every element `b`.
pub fn direct_semantic_closure(sys: &FiniteSystem<'_>, model: &Model<usize>, a: usize) -> usize {
    let l = sys.lattice();
    l.join_all(
        l.elements()
            .filter(|&b| holds(sys, model, &Implication::new(a, b)).expect("finite monoid is enumerable")),
    )
}

/// The textbook attribute-closure loop for functional dependencies.
pub fn fd_closure(
    dependencies: &[(BTreeSet<usize>, BTreeSet<usize>)],
    start: &BTreeSet<usize>,
) -> BTreeSet<usize> {
    let mut out = start.clone();
    loop {
        let before = out.len();
        for (lhs, rhs) in dependencies {
            if lhs.is_subset(&out) {
                out.extend(rhs.iter().copied());
            }
        }
        if out.len() == before {
            return out;
        }
    }
}

/// `a → b = ⋁{c : a ⊗ c ≤ b}`, by scanning all `c`.
pub fn residuum_by_scan(l: &FiniteLattice, otimes: &[Vec<usize>]) -> Vec<Vec<usize>> {
    l.elements()
        .map(|a| {
            l.elements()
                .map(|b| l.join_all(l.elements().filter(|&c| l.leq(otimes[a][c], b))))
                .collect()
        })
        .collect()
}
