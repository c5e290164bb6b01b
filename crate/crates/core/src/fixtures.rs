//! Small named structures used throughout the documentation and tests.
//!
//! The four-element chains use the element names `0`, `a`, `b`, `1`.

use std::sync::Arc;

use crate::closure::ClosureOperator;
use crate::lattice::FiniteLattice;
use crate::residuated::{Hedge, LSetSpace, ResiduatedLattice};

fn four_chain() -> Arc<FiniteLattice> {
    Arc::new(FiniteLattice::chain(&["0", "a", "b", "1"]).expect("chain"))
}

/// The four-element chain whose product is `0` except when a factor is `1`.
pub fn drastic_chain() -> ResiduatedLattice {
    ResiduatedLattice::new(
        four_chain(),
        vec![
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 0, 2],
            vec![0, 1, 2, 3],
        ],
        vec![
            vec![3, 3, 3, 3],
            vec![2, 3, 3, 3],
            vec![2, 2, 3, 3],
            vec![0, 1, 2, 3],
        ],
    )
    .expect("tables are 4×4")
}

/// The four-element chain in which `b` is idempotent and `a⊗a = 0`.
pub fn idempotent_b_chain() -> ResiduatedLattice {
    ResiduatedLattice::new(
        four_chain(),
        vec![
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
        ],
        vec![
            vec![3, 3, 3, 3],
            vec![2, 3, 3, 3],
            vec![1, 1, 3, 3],
            vec![0, 1, 2, 3],
        ],
    )
    .expect("tables are 4×4")
}

/// `0* = a* = 0`, `b* = a`, `1* = 1`: a hedge on [`idempotent_b_chain`] that is not idempotent.
pub fn non_idempotent_hedge() -> Hedge {
    Hedge {
        star: vec![0, 0, 1, 3],
    }
}

/// `c* = c` except `b* = 0`: idempotent but not isotone.
pub fn non_isotone_star() -> Hedge {
    Hedge {
        star: vec![0, 1, 0, 3],
    }
}

/// `0* = 1* = 1` on the Boolean algebra: not subdiagonal.
pub fn non_subdiagonal_star() -> Hedge {
    Hedge { star: vec![1, 1] }
}

/// `L^{y}` over `r`.
pub fn single_attribute_space(r: ResiduatedLattice) -> LSetSpace {
    LSetSpace::new(Arc::new(r), &["y"], 16).expect("small space")
}

/// `C({y^0}) = {y^0}` and `C(A) = {y^1}` otherwise.
pub fn zero_or_top_operator(space: &LSetSpace) -> ClosureOperator {
    let l = space.lattice();
    let zero = space.constant(space.algebra().lattice().bottom());
    ClosureOperator::from_fn(l, |e| if e == zero { zero } else { l.top() })
}

/// `C(A) = A` for `A ∈ {{y^0}, {y^a}}` and `C(A) = {y^1}` otherwise.
pub fn low_fixed_operator(space: &LSetSpace) -> ClosureOperator {
    let l = space.lattice();
    let keep = [space.constant(0), space.constant(1)];
    ClosureOperator::from_fn(l, |e| if keep.contains(&e) { e } else { l.top() })
}

/// On the chain `0 < a < 1`: `C(0) = a`, `C(a) = C(1) = 1`.
pub fn extensive_non_idempotent() -> (FiniteLattice, ClosureOperator) {
    let l = FiniteLattice::chain(&["0", "a", "1"]).expect("chain");
    let c = ClosureOperator::new(vec![1, 2, 2]);
    (l, c)
}
