//! Closure operators and closure systems given by tables, and checkers for
//! their axioms.
//!
//! Checkers never fail on an axiom violation. They return reports that
//! list every witness, so that counterexamples can be inspected.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::connection::Parameterization;
use crate::inference::{Implication, Theory};
use crate::lattice::FiniteLattice;
use crate::residuated::{Hedge, LSetSpace, LeqFilter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("operand has {found} entries but the lattice has {expected} elements")]
    LatticeMismatch { expected: usize, found: usize },
    #[error("{0} is not an element of the lattice")]
    OutOfRange(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// An operator on a finite lattice, stored as its table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClosureOperator {
    table: Vec<usize>,
}

impl ClosureOperator {
    pub fn new(table: Vec<usize>) -> Self {
        ClosureOperator { table }
    }

    pub fn from_fn(l: &FiniteLattice, f: impl Fn(usize) -> usize) -> Self {
        ClosureOperator {
            table: l.elements().map(f).collect(),
        }
    }

    pub fn identity(l: &FiniteLattice) -> Self {
        Self::from_fn(l, |a| a)
    }

    pub fn constant_top(l: &FiniteLattice) -> Self {
        Self::from_fn(l, |_| l.top())
    }

    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Elements with `C(a) = a`.
    pub fn fixpoints(&self) -> BTreeSet<usize> {
        (0..self.table.len()).filter(|&a| self.table[a] == a).collect()
    }

    fn check(&self, l: &FiniteLattice) -> Result<(), ClosureError> {
        if self.table.len() != l.len() {
            return Err(ClosureError::LatticeMismatch {
                expected: l.len(),
                found: self.table.len(),
            });
        }
        match self.table.iter().find(|&&x| x >= l.len()) {
            Some(&bad) => Err(ClosureError::OutOfRange(bad)),
            None => Ok(()),
        }
    }
}

/// A set of lattice elements, meant as the fixpoints of a closure operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSystem {
    pub fixpoints: BTreeSet<usize>,
}

impl ClosureSystem {
    pub fn new<I: IntoIterator<Item = usize>>(fixpoints: I) -> Self {
        ClosureSystem {
            fixpoints: fixpoints.into_iter().collect(),
        }
    }

    pub fn contains(&self, a: usize) -> bool {
        self.fixpoints.contains(&a)
    }
}

fn check_parameterization(l: &FiniteLattice, s: &Parameterization) -> Result<(), ClosureError> {
    if s.lattice_len() != l.len() {
        return Err(ClosureError::LatticeMismatch {
            expected: l.len(),
            found: s.lattice_len(),
        });
    }
    Ok(())
}

/// Violations of extensivity, isotony and the parameterized idempotency
/// `C(ν(C(a))) ≤ ν(C(a))`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SClosureReport {
    /// `a` with `a ≰ C(a)`.
    pub ext: Vec<usize>,
    /// `(a, b)` with `a ≤ b` and `C(a) ≰ C(b)`.
    pub mon: Vec<(usize, usize)>,
    /// `(i, a)`: member `i` of the parameterization fails at `a`.
    pub idm: Vec<(usize, usize)>,
}

impl SClosureReport {
    pub fn is_s_closure(&self) -> bool {
        self.ext.is_empty() && self.mon.is_empty() && self.idm.is_empty()
    }
}

pub fn check_s_closure(
    l: &FiniteLattice,
    c: &ClosureOperator,
    s: &Parameterization,
) -> Result<SClosureReport, ClosureError> {
    c.check(l)?;
    check_parameterization(l, s)?;
    let mut report = SClosureReport::default();
    for a in l.elements() {
        if !l.leq(a, c.apply(a)) {
            report.ext.push(a);
        }
        for b in l.elements() {
            if l.leq(a, b) && !l.leq(c.apply(a), c.apply(b)) {
                report.mon.push((a, b));
            }
        }
    }
    for (i, conn) in s.members().iter().enumerate() {
        for a in l.elements() {
            let v = conn.upper(c.apply(a));
            if !l.leq(c.apply(v), v) {
                report.idm.push((i, a));
            }
        }
    }
    Ok(report)
}

fn is_extensive(l: &FiniteLattice, c: &ClosureOperator) -> bool {
    l.elements().all(|a| l.leq(a, c.apply(a)))
}

fn is_isotone(l: &FiniteLattice, c: &ClosureOperator) -> bool {
    l.elements().all(|a| {
        l.elements()
            .all(|b| !l.leq(a, b) || l.leq(c.apply(a), c.apply(b)))
    })
}

fn is_ord_idempotent(l: &FiniteLattice, c: &ClosureOperator) -> bool {
    l.elements().all(|a| l.leq(c.apply(c.apply(a)), c.apply(a)))
}

/// Extensive, isotone and idempotent.
pub fn is_closure_operator(l: &FiniteLattice, c: &ClosureOperator) -> bool {
    is_extensive(l, c) && is_isotone(l, c) && is_ord_idempotent(l, c)
}

/// Verdicts of the equivalent characterizations of S-closure operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// Extensive, isotone, and `C(ν(C(a))) ≤ ν(C(a))`.
    pub s_closure: bool,
    /// Extensive, and `a ≤ ν(C(b))` implies `C(a) ≤ ν(C(b))`.
    pub ext_mon_idm: bool,
    /// Extensive, `C(C(a)) ≤ C(a)`, and `a ≤ ν(b)` implies `C(a) ≤ ν(C(b))`.
    pub ext_ord_idm_mon_alt: bool,
    /// A closure operator with `μ(C(a)) ≤ C(μ(a))`.
    pub closure_mul_c: bool,
    /// A closure operator with `C(ν(a)) ≤ ν(C(a))`.
    pub closure_c_shf: bool,
    /// `μ(C(ν(a))) ≤ ν(C(μ(a)))`; implied by, not equivalent to, the others.
    pub mul_c_shf: bool,
    /// `C(C(a)) ≤ C(a)` on its own.
    pub ord_idm: bool,
    /// `a ≤ ν(b)` implies `C(a) ≤ ν(C(b))`, on its own.
    pub mon_alt: bool,
}

impl EquivalenceReport {
    /// Whether the five characterizations agree.
    pub fn agree(&self) -> bool {
        let v = self.s_closure;
        self.ext_mon_idm == v
            && self.ext_ord_idm_mon_alt == v
            && self.closure_mul_c == v
            && self.closure_c_shf == v
    }

    pub fn rows(&self) -> [(&'static str, bool); 6] {
        [
            ("S:ext + S:mon + S:idm", self.s_closure),
            ("S:ext + S:mon_idm", self.ext_mon_idm),
            ("S:ext + S:ord_idm + S:mon_alt", self.ext_ord_idm_mon_alt),
            ("closure + mulC_leq_Cmul", self.closure_mul_c),
            ("closure + Cshf_leq_shfC", self.closure_c_shf),
            ("mulCshf_leq_shfCmul", self.mul_c_shf),
        ]
    }
}

pub fn check_equiv_characterizations(
    l: &FiniteLattice,
    c: &ClosureOperator,
    s: &Parameterization,
) -> Result<EquivalenceReport, ClosureError> {
    let s_closure = check_s_closure(l, c, s)?.is_s_closure();
    let ext = is_extensive(l, c);
    let closure = ext && is_isotone(l, c) && is_ord_idempotent(l, c);
    let members = s.members();
    let f = |a: usize| c.apply(a);

    let mon_idm = members.iter().all(|m| {
        l.elements().all(|b| {
            let v = m.upper(f(b));
            l.elements().all(|a| !l.leq(a, v) || l.leq(f(a), v))
        })
    });
    let mon_alt = members.iter().all(|m| {
        l.elements().all(|b| {
            let (nb, ncb) = (m.upper(b), m.upper(f(b)));
            l.elements().all(|a| !l.leq(a, nb) || l.leq(f(a), ncb))
        })
    });
    let mul_c = members
        .iter()
        .all(|m| l.elements().all(|a| l.leq(m.lower(f(a)), f(m.lower(a)))));
    let c_shf = members
        .iter()
        .all(|m| l.elements().all(|a| l.leq(f(m.upper(a)), m.upper(f(a)))));
    let mul_c_shf = members.iter().all(|m| {
        l.elements()
            .all(|a| l.leq(m.lower(f(m.upper(a))), m.upper(f(m.lower(a)))))
    });

    let ord_idm = is_ord_idempotent(l, c);
    let report = EquivalenceReport {
        s_closure,
        ext_mon_idm: ext && mon_idm,
        ext_ord_idm_mon_alt: ext && ord_idm && mon_alt,
        closure_mul_c: closure && mul_c,
        closure_c_shf: closure && c_shf,
        mul_c_shf,
        ord_idm,
        mon_alt,
    };
    debug_assert!(report.agree(), "characterizations disagree: {report:?}");
    Ok(report)
}

/// Axiom check for operators on `L^Y` with a hedge.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LStarReport {
    /// `A` with `A ⊈ C(A)`.
    pub ext: Vec<usize>,
    /// `(A, B)` with `S(A,B)* ≰ S(C(A), C(B))`.
    pub star_mon: Vec<(usize, usize)>,
    /// `A` with `C(C(A)) ⊈ C(A)`.
    pub idm: Vec<usize>,
    /// `(a, A)` with `C(a* → C(A)) ⊈ a* → C(A)`; `a` is a truth degree.
    pub star_shf: Vec<(usize, usize)>,
}

impl LStarReport {
    /// Extensive, `*`-isotone and idempotent.
    pub fn is_lstar_closure(&self) -> bool {
        self.ext.is_empty() && self.star_mon.is_empty() && self.idm.is_empty()
    }

    pub fn star_shf_holds(&self) -> bool {
        self.star_shf.is_empty()
    }
}

/// Axiom check for operators on `L^Y` with a set `K` of degrees.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LKReport {
    pub ext: Vec<usize>,
    /// `(A, B)` with `S(A,B) ∈ K` and `S(A,B) ≰ S(C(A), C(B))`.
    pub k_mon: Vec<(usize, usize)>,
    pub idm: Vec<usize>,
    /// `(a, A)` with `a ∈ K` and `C(a → C(A)) ⊈ a → C(A)`.
    pub k_shf: Vec<(usize, usize)>,
}

impl LKReport {
    pub fn is_lk_closure(&self) -> bool {
        self.ext.is_empty() && self.k_mon.is_empty() && self.idm.is_empty()
    }

    pub fn k_shf_holds(&self) -> bool {
        self.k_shf.is_empty()
    }
}

fn ext_and_idm(l: &FiniteLattice, c: &ClosureOperator) -> (Vec<usize>, Vec<usize>) {
    let ext = l.elements().filter(|&a| !l.leq(a, c.apply(a))).collect();
    let idm = l
        .elements()
        .filter(|&a| !l.leq(c.apply(c.apply(a)), c.apply(a)))
        .collect();
    (ext, idm)
}

fn shift_violations(
    space: &LSetSpace,
    c: &ClosureOperator,
    degrees: impl Iterator<Item = (usize, usize)>,
) -> Vec<(usize, usize)> {
    let l = space.lattice();
    let degrees: Vec<(usize, usize)> = degrees.collect();
    let mut out = Vec::new();
    for &(a, shifted_by) in &degrees {
        for e in l.elements() {
            let v = space.shift(shifted_by, c.apply(e));
            if !l.leq(c.apply(v), v) {
                out.push((a, e));
            }
        }
    }
    out
}

pub fn check_lstar_closure(
    space: &LSetSpace,
    c: &ClosureOperator,
    hedge: &Hedge,
) -> Result<LStarReport, ClosureError> {
    let l = space.lattice();
    c.check(l)?;
    let degrees = space.algebra().lattice();
    if hedge.star.len() != degrees.len() {
        return Err(ClosureError::LatticeMismatch {
            expected: degrees.len(),
            found: hedge.star.len(),
        });
    }
    let (ext, idm) = ext_and_idm(l, c);
    let mut star_mon = Vec::new();
    for a in l.elements() {
        for b in l.elements() {
            let lhs = hedge.apply(space.subsethood(a, b));
            if !degrees.leq(lhs, space.subsethood(c.apply(a), c.apply(b))) {
                star_mon.push((a, b));
            }
        }
    }
    let star_shf = shift_violations(space, c, degrees.elements().map(|a| (a, hedge.apply(a))));
    Ok(LStarReport {
        ext,
        star_mon,
        idm,
        star_shf,
    })
}

pub fn check_lk_closure(
    space: &LSetSpace,
    c: &ClosureOperator,
    filter: &LeqFilter,
) -> Result<LKReport, ClosureError> {
    let l = space.lattice();
    c.check(l)?;
    let degrees = space.algebra().lattice();
    if let Some(&bad) = filter.members.iter().find(|&&a| a >= degrees.len()) {
        return Err(ClosureError::OutOfRange(bad));
    }
    let (ext, idm) = ext_and_idm(l, c);
    let mut k_mon = Vec::new();
    for a in l.elements() {
        for b in l.elements() {
            let s = space.subsethood(a, b);
            if filter.contains(s) && !degrees.leq(s, space.subsethood(c.apply(a), c.apply(b))) {
                k_mon.push((a, b));
            }
        }
    }
    let k_shf = shift_violations(space, c, filter.members.iter().map(|&a| (a, a)));
    Ok(LKReport {
        ext,
        k_mon,
        idm,
        k_shf,
    })
}

/// Why a set fails to be closed under meets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeetWitness {
    /// The empty meet, the top element, is missing.
    MissingTop,
    /// Both elements are in the set but their meet is not.
    Pair(usize, usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SystemReport {
    /// Witness against closure under arbitrary meets, if any.
    pub meet_closed: Option<MeetWitness>,
    /// `(i, b)`: `b` is in the set but `ν_i(b)` is not.
    pub nu_stable: Vec<(usize, usize)>,
    /// `a` for which `⋀{ν(b) : a ≤ ν(b), b ∈ 𝒮, ⟨μ,ν⟩ ∈ S}` is not in the set.
    pub single_condition: Vec<usize>,
}

impl SystemReport {
    pub fn is_s_closure_system(&self) -> bool {
        self.meet_closed.is_none() && self.nu_stable.is_empty()
    }

    /// Whether the two-part definition and the single condition agree.
    pub fn agree(&self) -> bool {
        self.is_s_closure_system() == self.single_condition.is_empty()
    }
}

pub fn check_closure_system(
    l: &FiniteLattice,
    sys: &ClosureSystem,
    s: &Parameterization,
) -> Result<SystemReport, ClosureError> {
    check_parameterization(l, s)?;
    if let Some(&bad) = sys.fixpoints.iter().find(|&&a| a >= l.len()) {
        return Err(ClosureError::OutOfRange(bad));
    }
    let mut report = SystemReport::default();
    if !sys.contains(l.top()) {
        report.meet_closed = Some(MeetWitness::MissingTop);
    } else {
        'outer: for &a in &sys.fixpoints {
            for &b in sys.fixpoints.range(a + 1..) {
                if !sys.contains(l.meet(a, b)) {
                    report.meet_closed = Some(MeetWitness::Pair(a, b));
                    break 'outer;
                }
            }
        }
    }
    for (i, m) in s.members().iter().enumerate() {
        for &b in &sys.fixpoints {
            if !sys.contains(m.upper(b)) {
                report.nu_stable.push((i, b));
            }
        }
    }
    for a in l.elements() {
        let v = l.meet_all(s.members().iter().flat_map(|m| {
            sys.fixpoints
                .iter()
                .map(|&b| m.upper(b))
                .filter(|&nb| l.leq(a, nb))
                .collect::<Vec<_>>()
        }));
        if !sys.contains(v) {
            report.single_condition.push(a);
        }
    }
    debug_assert!(report.agree(), "closure system characterizations disagree");
    Ok(report)
}

/// `C(a) = ⋀{b ∈ 𝒮 : a ≤ b}`, after checking that `sys` is an S-closure system.
pub fn operator_from_system(
    l: &FiniteLattice,
    sys: &ClosureSystem,
    s: &Parameterization,
) -> Result<ClosureOperator, ClosureError> {
    let report = check_closure_system(l, sys, s)?;
    if !report.is_s_closure_system() {
        return Err(ClosureError::InvalidInput(format!(
            "not an S-closure system: {report:?}"
        )));
    }
    Ok(ClosureOperator::from_fn(l, |a| {
        l.meet_all(sys.fixpoints.iter().copied().filter(|&b| l.leq(a, b)))
    }))
}

/// The fixpoints of `c`, after checking that `c` is an S-closure operator.
pub fn system_from_operator(
    l: &FiniteLattice,
    c: &ClosureOperator,
    s: &Parameterization,
) -> Result<ClosureSystem, ClosureError> {
    let report = check_s_closure(l, c, s)?;
    if !report.is_s_closure() {
        return Err(ClosureError::InvalidInput(format!(
            "not an S-closure operator: {report:?}"
        )));
    }
    Ok(ClosureSystem {
        fixpoints: c.fixpoints(),
    })
}

/// `{a ⇒ b : b ≤ C(a)}` over all pairs of elements.
pub fn theory_from_operator(l: &FiniteLattice, c: &ClosureOperator) -> Theory<usize> {
    let mut implications = Vec::new();
    for a in l.elements() {
        for b in l.elements() {
            if l.leq(b, c.apply(a)) {
                implications.push(Implication::new(a, b));
            }
        }
    }
    Theory::new(implications)
}
