//! Finite residuated lattices, hedges, ≤-filters and lattices of L-sets.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::connection::{Connection, Parameterization};
use crate::lattice::{FiniteLattice, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResiduatedError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("{table} table must be {n}×{n}")]
    BadShape { table: &'static str, n: usize },
    #[error("table entry {0} is not an element")]
    OutOfRange(usize),
    #[error("L-sets are over different universes")]
    UniverseMismatch,
    #[error("parameterization is not closed under composition: {0} ∘ {1} is missing")]
    NotClosed(String, String),
}

/// A complete residuated lattice on a finite lattice, given by its tables.
#[derive(Debug, Clone, PartialEq)]
pub struct ResiduatedLattice {
    lattice: Arc<FiniteLattice>,
    otimes: Vec<usize>,
    residuum: Vec<usize>,
}

/// Violations of the residuated-lattice laws; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ResiduatedReport {
    /// `(a, b, c)` with `(a⊗b)⊗c ≠ a⊗(b⊗c)`.
    pub associativity: Vec<(usize, usize, usize)>,
    /// `(a, b)` with `a⊗b ≠ b⊗a`.
    pub commutativity: Vec<(usize, usize)>,
    /// `a` with `a⊗1 ≠ a`.
    pub neutrality: Vec<usize>,
    /// `(a, b, c)` where `a⊗b ≤ c` and `b ≤ a→c` disagree.
    pub adjointness: Vec<(usize, usize, usize)>,
}

impl ResiduatedReport {
    pub fn is_valid(&self) -> bool {
        self.associativity.is_empty()
            && self.commutativity.is_empty()
            && self.neutrality.is_empty()
            && self.adjointness.is_empty()
    }
}

fn flatten(table: Vec<Vec<usize>>, name: &'static str, n: usize) -> Result<Vec<usize>, ResiduatedError> {
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(ResiduatedError::BadShape { table: name, n });
    }
    let flat: Vec<usize> = table.into_iter().flatten().collect();
    match flat.iter().find(|&&x| x >= n) {
        Some(&bad) => Err(ResiduatedError::OutOfRange(bad)),
        None => Ok(flat),
    }
}

impl ResiduatedLattice {
    /// Row-major tables indexed by element order. Laws are not checked here.
    pub fn new(
        lattice: Arc<FiniteLattice>,
        otimes: Vec<Vec<usize>>,
        residuum: Vec<Vec<usize>>,
    ) -> Result<Self, ResiduatedError> {
        let n = lattice.len();
        Ok(ResiduatedLattice {
            otimes: flatten(otimes, "otimes", n)?,
            residuum: flatten(residuum, "residuum", n)?,
            lattice,
        })
    }

    fn from_fns(
        lattice: FiniteLattice,
        otimes: impl Fn(usize, usize) -> usize,
        residuum: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let n = lattice.len();
        let mut ot = Vec::with_capacity(n * n);
        let mut to = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                ot.push(otimes(a, b));
                to.push(residuum(a, b));
            }
        }
        ResiduatedLattice {
            lattice: Arc::new(lattice),
            otimes: ot,
            residuum: to,
        }
    }

    /// The equidistant Łukasiewicz chain with `n ≥ 2` elements.
    pub fn lukasiewicz_chain(n: usize) -> Self {
        assert!(n >= 2, "a chain needs at least two elements");
        let top = n - 1;
        Self::from_fns(
            FiniteLattice::chain(&chain_names(n)).expect("chain"),
            |a, b| (a + b).saturating_sub(top),
            |a, b| (top + b).saturating_sub(a).min(top),
        )
    }

    /// The equidistant Gödel chain (minimum and its residuum).
    pub fn goedel_chain(n: usize) -> Self {
        assert!(n >= 2, "a chain needs at least two elements");
        let top = n - 1;
        Self::from_fns(
            FiniteLattice::chain(&chain_names(n)).expect("chain"),
            |a, b| a.min(b),
            |a, b| if a <= b { top } else { b },
        )
    }

    /// The two-element Boolean algebra.
    pub fn boolean() -> Self {
        Self::from_fns(
            FiniteLattice::chain(&["0", "1"]).expect("chain"),
            |a, b| a & b,
            |a, b| (1 - a) | b,
        )
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn lattice_arc(&self) -> Arc<FiniteLattice> {
        Arc::clone(&self.lattice)
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn otimes(&self, a: usize, b: usize) -> usize {
        self.otimes[a * self.len() + b]
    }

    pub fn residuum(&self, a: usize, b: usize) -> usize {
        self.residuum[a * self.len() + b]
    }

    pub fn otimes_table(&self) -> Vec<Vec<usize>> {
        self.otimes.chunks(self.len()).map(<[usize]>::to_vec).collect()
    }

    pub fn residuum_table(&self) -> Vec<Vec<usize>> {
        self.residuum.chunks(self.len()).map(<[usize]>::to_vec).collect()
    }

    /// Overwrites one `⊗` entry (only the given orientation).
    pub fn set_otimes(&mut self, a: usize, b: usize, v: usize) {
        let n = self.len();
        self.otimes[a * n + b] = v;
    }

    /// Overwrites one `→` entry.
    pub fn set_residuum(&mut self, a: usize, b: usize, v: usize) {
        let n = self.len();
        self.residuum[a * n + b] = v;
    }

    pub fn validate(&self) -> ResiduatedReport {
        let l = &*self.lattice;
        let one = l.top();
        let mut report = ResiduatedReport::default();
        for a in l.elements() {
            if self.otimes(a, one) != a {
                report.neutrality.push(a);
            }
            for b in l.elements() {
                if b > a && self.otimes(a, b) != self.otimes(b, a) {
                    report.commutativity.push((a, b));
                }
                let ab = self.otimes(a, b);
                for c in l.elements() {
                    if self.otimes(ab, c) != self.otimes(a, self.otimes(b, c)) {
                        report.associativity.push((a, b, c));
                    }
                    if l.leq(ab, c) != l.leq(b, self.residuum(a, c)) {
                        report.adjointness.push((a, b, c));
                    }
                }
            }
        }
        report
    }

    /// `⟨a⊗·, a→·⟩` on the lattice of truth degrees itself.
    pub fn multiplication(&self, a: usize) -> Connection {
        Connection::new(
            self.lattice.elements().map(|x| self.otimes(a, x)).collect(),
            self.lattice.elements().map(|x| self.residuum(a, x)).collect(),
        )
    }
}

/// Names `0, …, 1` for an equidistant chain: decimals when exact to two
/// places, reduced fractions otherwise.
pub fn chain_names(n: usize) -> Vec<String> {
    let d = n - 1;
    (0..n)
        .map(|i| {
            if i == 0 {
                "0".to_owned()
            } else if i == d {
                "1".to_owned()
            } else if (i * 100) % d == 0 {
                let hundredths = i * 100 / d;
                let s = format!("0.{hundredths:02}");
                s.trim_end_matches('0').to_owned()
            } else {
                let g = gcd(i, d);
                format!("{}/{}", i / g, d / g)
            }
        })
        .collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A unary map on truth degrees; validated separately by [`validate_hedge`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hedge {
    pub star: Vec<usize>,
}

impl Hedge {
    pub fn identity(r: &ResiduatedLattice) -> Self {
        Hedge {
            star: r.lattice().elements().collect(),
        }
    }

    /// `1* = 1` and `a* = 0` otherwise.
    pub fn globalization(r: &ResiduatedLattice) -> Self {
        let l = r.lattice();
        Hedge {
            star: l
                .elements()
                .map(|a| if a == l.top() { a } else { l.bottom() })
                .collect(),
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.star[a]
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HedgeReport {
    pub top_fixed: bool,
    /// `a` with `a* ≰ a`.
    pub subdiagonal: Vec<usize>,
    /// `(a, b)` with `(a→b)* ≰ a*→b*`.
    pub mon_star: Vec<(usize, usize)>,
    /// `a` with `a** ≠ a*`; only filled when idempotency was requested.
    pub idempotent: Vec<usize>,
}

impl HedgeReport {
    pub fn is_valid(&self) -> bool {
        self.top_fixed
            && self.subdiagonal.is_empty()
            && self.mon_star.is_empty()
            && self.idempotent.is_empty()
    }
}

pub fn validate_hedge(r: &ResiduatedLattice, h: &Hedge, require_idempotent: bool) -> HedgeReport {
    let l = r.lattice();
    let s = |a: usize| h.star[a];
    let mut report = HedgeReport {
        top_fixed: s(l.top()) == l.top(),
        ..Default::default()
    };
    for a in l.elements() {
        if !l.leq(s(a), a) {
            report.subdiagonal.push(a);
        }
        if require_idempotent && s(s(a)) != s(a) {
            report.idempotent.push(a);
        }
        for b in l.elements() {
            if !l.leq(s(r.residuum(a, b)), r.residuum(s(a), s(b))) {
                report.mon_star.push((a, b));
            }
        }
    }
    report
}

/// Pairs `a ≤ b` with `a* ≰ b*`.
pub fn hedge_isotony_violations(r: &ResiduatedLattice, h: &Hedge) -> Vec<(usize, usize)> {
    let l = r.lattice();
    let mut out = Vec::new();
    for a in l.elements() {
        for b in l.elements() {
            if l.leq(a, b) && !l.leq(h.star[a], h.star[b]) {
                out.push((a, b));
            }
        }
    }
    out
}

/// A subset `K` of truth degrees, meant to be upward closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeqFilter {
    pub members: BTreeSet<usize>,
}

impl LeqFilter {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        LeqFilter {
            members: members.into_iter().collect(),
        }
    }

    /// `{1}`.
    pub fn top_only(l: &FiniteLattice) -> Self {
        Self::new([l.top()])
    }

    pub fn whole(l: &FiniteLattice) -> Self {
        Self::new(l.elements())
    }

    /// The principal filter `↑a`.
    pub fn principal(l: &FiniteLattice, a: usize) -> Self {
        Self::new(l.elements().filter(|&b| l.leq(a, b)))
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(&a)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FilterReport {
    pub empty: bool,
    /// `(a, b)` with `a ∈ K`, `a ≤ b` and `b ∉ K`.
    pub not_upward: Vec<(usize, usize)>,
}

impl FilterReport {
    pub fn is_valid(&self) -> bool {
        !self.empty && self.not_upward.is_empty()
    }

    /// Elements that would have to be added to make `K` upward closed.
    pub fn missing(&self) -> BTreeSet<usize> {
        self.not_upward.iter().map(|&(_, b)| b).collect()
    }
}

pub fn validate_filter(l: &FiniteLattice, f: &LeqFilter) -> FilterReport {
    let mut report = FilterReport {
        empty: f.members.is_empty(),
        ..Default::default()
    };
    for &a in &f.members {
        for b in l.elements() {
            if l.leq(a, b) && !f.contains(b) {
                report.not_upward.push((a, b));
            }
        }
    }
    report
}

/// An L-set: one truth degree per attribute of the universe.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LSet {
    pub universe: Arc<[String]>,
    pub grades: Vec<usize>,
}

impl LSet {
    pub fn grade(&self, y: usize) -> usize {
        self.grades[y]
    }
}

/// `S(A, B) = ⋀ A(y)→B(y)`.
pub fn subsethood(r: &ResiduatedLattice, a: &LSet, b: &LSet) -> Result<usize, ResiduatedError> {
    if a.universe != b.universe {
        return Err(ResiduatedError::UniverseMismatch);
    }
    Ok(r.lattice()
        .meet_all(a.grades.iter().zip(&b.grades).map(|(&x, &y)| r.residuum(x, y))))
}

/// `a ⊗ A`, pointwise.
pub fn a_multiple(r: &ResiduatedLattice, a: usize, set: &LSet) -> LSet {
    LSet {
        universe: Arc::clone(&set.universe),
        grades: set.grades.iter().map(|&x| r.otimes(a, x)).collect(),
    }
}

/// `a → A`, pointwise.
pub fn a_shift(r: &ResiduatedLattice, a: usize, set: &LSet) -> LSet {
    LSet {
        universe: Arc::clone(&set.universe),
        grades: set.grades.iter().map(|&x| r.residuum(a, x)).collect(),
    }
}

/// The lattice `L^Y` of all L-sets in a finite universe, with its algebra.
#[derive(Debug, Clone)]
pub struct LSetSpace {
    algebra: Arc<ResiduatedLattice>,
    universe: Arc<[String]>,
    lattice: FiniteLattice,
}

impl LSetSpace {
    pub fn new<S: AsRef<str>>(
        algebra: Arc<ResiduatedLattice>,
        universe: &[S],
        cap: usize,
    ) -> Result<Self, ResiduatedError> {
        let lattice = FiniteLattice::direct_power(algebra.lattice_arc(), universe, cap)?;
        let universe: Arc<[String]> = universe.iter().map(|s| s.as_ref().to_owned()).collect();
        Ok(LSetSpace {
            algebra,
            universe,
            lattice,
        })
    }

    pub fn algebra(&self) -> &ResiduatedLattice {
        &self.algebra
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn lset(&self, e: usize) -> LSet {
        LSet {
            universe: Arc::clone(&self.universe),
            grades: self.lattice.components(e),
        }
    }

    pub fn element(&self, set: &LSet) -> Result<usize, ResiduatedError> {
        if set.universe != self.universe {
            return Err(ResiduatedError::UniverseMismatch);
        }
        Ok(self.lattice.from_components(&set.grades))
    }

    /// The constant L-set with the given degree everywhere.
    pub fn constant(&self, a: usize) -> usize {
        self.lattice.from_components(&vec![a; self.universe.len()])
    }

    /// Subsethood degree between two elements of `L^Y`.
    pub fn subsethood(&self, a: usize, b: usize) -> usize {
        let r = &*self.algebra;
        r.lattice().meet_all(
            self.lattice
                .components(a)
                .into_iter()
                .zip(self.lattice.components(b))
                .map(|(x, y)| r.residuum(x, y)),
        )
    }

    fn pointwise(&self, e: usize, f: impl Fn(usize) -> usize) -> usize {
        let comps: Vec<usize> = self.lattice.components(e).into_iter().map(f).collect();
        self.lattice.from_components(&comps)
    }

    pub fn multiple(&self, a: usize, e: usize) -> usize {
        self.pointwise(e, |x| self.algebra.otimes(a, x))
    }

    pub fn shift(&self, a: usize, e: usize) -> usize {
        self.pointwise(e, |x| self.algebra.residuum(a, x))
    }

    /// `⟨a⊗·, a→·⟩` on `L^Y`.
    pub fn multiplication_connection(&self, a: usize) -> Connection {
        Connection::new(
            self.lattice.elements().map(|e| self.multiple(a, e)).collect(),
            self.lattice.elements().map(|e| self.shift(a, e)).collect(),
        )
    }

    fn connections_for<I: IntoIterator<Item = usize>>(&self, degrees: I) -> Parameterization {
        let base = self.algebra.lattice();
        let mut p = Parameterization::identity(&self.lattice);
        for d in degrees {
            p.insert(format!("{}⊗", base.name(d)), self.multiplication_connection(d));
        }
        p.verify_closed();
        p
    }

    /// `{⟨a*⊗, a*→⟩ : a ∈ L}`.
    pub fn hedge_parameterization(&self, h: &Hedge) -> Parameterization {
        let degrees: BTreeSet<usize> = self.algebra.lattice().elements().map(|a| h.star[a]).collect();
        self.connections_for(degrees)
    }

    /// `{⟨a⊗, a→⟩ : a ∈ K}`.
    pub fn filter_parameterization(&self, f: &LeqFilter) -> Parameterization {
        self.connections_for(f.members.iter().copied())
    }

    /// The residuated structure carried by a hedge parameterization.
    ///
    /// Elements are the members of `s` ordered by the connection order,
    /// multiplication is composition, and `c ⇝ d` is the join of all `e`
    /// with `c ∘ e ⩽ d`.
    pub fn parameterization_residuum(
        &self,
        s: &Parameterization,
    ) -> Result<ConnectionAlgebra, ResiduatedError> {
        if let Some((i, j)) = s.composition_gap() {
            return Err(ResiduatedError::NotClosed(
                s.label(i).to_owned(),
                s.label(j).to_owned(),
            ));
        }
        let l = &self.lattice;
        let n = s.len();
        let leq = |i: usize, j: usize| {
            let (ci, cj) = (s.get(i), s.get(j));
            l.elements().all(|a| l.leq(ci.lower(a), cj.lower(a)))
        };
        let order = FiniteLattice::from_order_fn(s.labels(), leq)?;
        let compose_index = |i: usize, j: usize| {
            let (ci, cj) = (s.get(i), s.get(j));
            let lower: Vec<usize> = l.elements().map(|a| ci.lower(cj.lower(a))).collect();
            s.position_of_lower(&lower).expect("closed")
        };
        let otimes: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| compose_index(i, j)).collect())
            .collect();
        let residuum: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| order.join_all((0..n).filter(|&k| order.leq(otimes[i][k], j))))
                    .collect()
            })
            .collect();
        let algebra = ResiduatedLattice::new(Arc::new(order), otimes, residuum)?;
        let report = algebra.validate();
        Ok(ConnectionAlgebra { algebra, report })
    }
}

/// Result of [`LSetSpace::parameterization_residuum`].
#[derive(Debug, Clone)]
pub struct ConnectionAlgebra {
    /// Element `i` is member `i` of the parameterization.
    pub algebra: ResiduatedLattice,
    pub report: ResiduatedReport,
}
