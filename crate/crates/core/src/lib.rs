//! Closure operators and closure systems on complete lattices, parameterized by
//! systems of isotone Galois connections.
//!
//! The crate covers finite lattices given by tables, lattices of fuzzy sets over
//! a finite residuated lattice, and sets of time-stamped attributes. On each of
//! them it computes the closure induced by a set of implications (with proofs),
//! the closure induced by data, and checks the axioms of parameterized closure
//! operators and closure systems.
//!
//! ```
//! use galois_closure::connection::Parameterization;
//! use galois_closure::inference::{syntactic_closure, FiniteSystem, Implication, Theory, DEFAULT_BUDGET};
//! use galois_closure::lattice::FiniteLattice;
//!
//! let l = FiniteLattice::powerset(&["x", "y", "z"]).unwrap();
//! let e = |s: &str| l.index_of(s).unwrap();
//! let theory = Theory::new(vec![
//!     Implication::new(e("{x}"), e("{y}")),
//!     Implication::new(e("{y}"), e("{z}")),
//! ]);
//! let sys = FiniteSystem::new(&l, &Parameterization::identity(&l)).unwrap();
//! let closed = syntactic_closure(&sys, &theory, &e("{x}"), DEFAULT_BUDGET).unwrap();
//! assert_eq!(l.name(closed.value), "{x,y,z}");
//! ```

pub mod closure;
pub mod connection;
pub mod fixtures;
pub mod inference;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod residuated;
pub mod semantics;
pub mod temporal;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../book/src/closure-operators.md")]
    mod closure_operators {}
    #[doc = include_str!("../../../book/src/theories.md")]
    mod theories {}
    #[doc = include_str!("../../../book/src/models.md")]
    mod models {}
    #[doc = include_str!("../../../book/src/graded.md")]
    mod graded {}
    #[doc = include_str!("../../../book/src/temporal.md")]
    mod temporal {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
