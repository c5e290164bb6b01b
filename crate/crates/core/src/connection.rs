//! Isotone Galois connections on a finite lattice and sets of them.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::lattice::FiniteLattice;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectionError {
    #[error("connection tables have {found} entries but the lattice has {expected} elements")]
    LatticeMismatch { expected: usize, found: usize },
    #[error("map entry {0} is not an element of the lattice")]
    OutOfRange(usize),
    #[error("lower map does not preserve the join of {0:?}")]
    NotJoinPreserving(Vec<usize>),
    #[error("upper map does not preserve the meet of {0:?}")]
    NotMeetPreserving(Vec<usize>),
    #[error("generated monoid exceeds {0} connections")]
    LimitExceeded(usize),
}

/// A pair `⟨μ, ν⟩` of self-maps, lower adjoint first.
///
/// Construction does not check the adjunction; use [`validate_connection`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Connection {
    lower: Vec<usize>,
    upper: Vec<usize>,
}

impl fmt::Debug for Connection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Connection")
            .field("lower", &self.lower)
            .field("upper", &self.upper)
            .finish()
    }
}

impl Connection {
    pub fn new(lower: Vec<usize>, upper: Vec<usize>) -> Self {
        Connection { lower, upper }
    }

    pub fn identity(l: &FiniteLattice) -> Self {
        let id: Vec<usize> = l.elements().collect();
        Connection {
            lower: id.clone(),
            upper: id,
        }
    }

    pub fn lower(&self, a: usize) -> usize {
        self.lower[a]
    }

    pub fn upper(&self, a: usize) -> usize {
        self.upper[a]
    }

    pub fn lower_table(&self) -> &[usize] {
        &self.lower
    }

    pub fn upper_table(&self) -> &[usize] {
        &self.upper
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.lower.iter().enumerate().all(|(i, &x)| i == x)
    }

    fn check_shape(&self, l: &FiniteLattice) -> Result<(), ConnectionError> {
        for found in [self.lower.len(), self.upper.len()] {
            if found != l.len() {
                return Err(ConnectionError::LatticeMismatch {
                    expected: l.len(),
                    found,
                });
            }
        }
        if let Some(&bad) = self.lower.iter().chain(&self.upper).find(|&&x| x >= l.len()) {
            return Err(ConnectionError::OutOfRange(bad));
        }
        Ok(())
    }
}

/// Every pair `(a, b)` where `μa ≤ b` and `a ≤ νb` disagree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConnectionReport {
    pub violations: Vec<(usize, usize)>,
}

impl ConnectionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_connection(l: &FiniteLattice, c: &Connection) -> Result<ConnectionReport, ConnectionError> {
    c.check_shape(l)?;
    let mut violations = Vec::new();
    for a in l.elements() {
        let ma = c.lower(a);
        for b in l.elements() {
            if l.leq(ma, b) != l.leq(a, c.upper(b)) {
                violations.push((a, b));
            }
        }
    }
    Ok(ConnectionReport { violations })
}

/// A witness that `map` fails to preserve binary joins or the empty join.
pub fn join_preservation_witness(l: &FiniteLattice, map: &[usize]) -> Option<Vec<usize>> {
    if map[l.bottom()] != l.bottom() {
        return Some(Vec::new());
    }
    for a in l.elements() {
        for b in (a + 1)..l.len() {
            if map[l.join(a, b)] != l.join(map[a], map[b]) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// A witness that `map` fails to preserve binary meets or the empty meet.
pub fn meet_preservation_witness(l: &FiniteLattice, map: &[usize]) -> Option<Vec<usize>> {
    if map[l.top()] != l.top() {
        return Some(Vec::new());
    }
    for a in l.elements() {
        for b in (a + 1)..l.len() {
            if map[l.meet(a, b)] != l.meet(map[a], map[b]) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn check_map(l: &FiniteLattice, map: &[usize]) -> Result<(), ConnectionError> {
    if map.len() != l.len() {
        return Err(ConnectionError::LatticeMismatch {
            expected: l.len(),
            found: map.len(),
        });
    }
    match map.iter().find(|&&x| x >= l.len()) {
        Some(&bad) => Err(ConnectionError::OutOfRange(bad)),
        None => Ok(()),
    }
}

/// Completes a join-preserving map to a connection: `ν(b) = ⋁{a : μ(a) ≤ b}`.
pub fn adjoint_from_lower(l: &FiniteLattice, lower: Vec<usize>) -> Result<Connection, ConnectionError> {
    check_map(l, &lower)?;
    if let Some(w) = join_preservation_witness(l, &lower) {
        return Err(ConnectionError::NotJoinPreserving(w));
    }
    let upper = l
        .elements()
        .map(|b| l.join_all(l.elements().filter(|&a| l.leq(lower[a], b))))
        .collect();
    Ok(Connection { lower, upper })
}

/// Completes a meet-preserving map to a connection: `μ(a) = ⋀{b : a ≤ ν(b)}`.
pub fn adjoint_from_upper(l: &FiniteLattice, upper: Vec<usize>) -> Result<Connection, ConnectionError> {
    check_map(l, &upper)?;
    if let Some(w) = meet_preservation_witness(l, &upper) {
        return Err(ConnectionError::NotMeetPreserving(w));
    }
    let lower = l
        .elements()
        .map(|a| l.meet_all(l.elements().filter(|&b| l.leq(a, upper[b]))))
        .collect();
    Ok(Connection { lower, upper })
}

/// `⟨μ1∘μ2, ν2∘ν1⟩`: apply `c2` first on the lower side.
pub fn compose(c1: &Connection, c2: &Connection) -> Result<Connection, ConnectionError> {
    if c1.len() != c2.len() {
        return Err(ConnectionError::LatticeMismatch {
            expected: c1.len(),
            found: c2.len(),
        });
    }
    Ok(compose_unchecked(c1, c2))
}

fn compose_unchecked(c1: &Connection, c2: &Connection) -> Connection {
    Connection {
        lower: c2.lower.iter().map(|&x| c1.lower[x]).collect(),
        upper: c1.upper.iter().map(|&x| c2.upper[x]).collect(),
    }
}

/// The connection order: `c1 ⩽ c2` iff `μ1(a) ≤ μ2(a)` for every `a`.
pub fn connection_leq(l: &FiniteLattice, c1: &Connection, c2: &Connection) -> Result<bool, ConnectionError> {
    c1.check_shape(l)?;
    c2.check_shape(l)?;
    let by_lower = l.elements().all(|a| l.leq(c1.lower(a), c2.lower(a)));
    debug_assert_eq!(
        by_lower,
        l.elements().all(|a| l.leq(c2.upper(a), c1.upper(a))),
        "lower and upper forms of the connection order disagree"
    );
    Ok(by_lower)
}

/// The least and the greatest connection on `l`.
pub fn extremal_connections(l: &FiniteLattice) -> (Connection, Connection) {
    let n = l.len();
    let bottom = Connection {
        lower: vec![l.bottom(); n],
        upper: vec![l.top(); n],
    };
    let top = Connection {
        lower: l
            .elements()
            .map(|a| if a == l.bottom() { l.bottom() } else { l.top() })
            .collect(),
        upper: l
            .elements()
            .map(|a| if a == l.top() { l.top() } else { l.bottom() })
            .collect(),
    };
    (bottom, top)
}

/// A set of connections that always contains the identity (at index 0).
///
/// Members are deduplicated by their lower tables.
#[derive(Debug, Clone)]
pub struct Parameterization {
    members: Vec<Connection>,
    labels: Vec<String>,
    index: HashMap<Vec<usize>, usize>,
    closed: bool,
}

impl Parameterization {
    /// The parameterization `{⟨1, 1⟩}`.
    pub fn identity(l: &FiniteLattice) -> Self {
        let id = Connection::identity(l);
        let mut index = HashMap::new();
        index.insert(id.lower.clone(), 0);
        Parameterization {
            members: vec![id],
            labels: vec!["id".to_owned()],
            index,
            closed: true,
        }
    }

    /// `{⟨1, 1⟩}` together with `connections`, each checked against `l`.
    pub fn from_connections<I>(l: &FiniteLattice, connections: I) -> Result<Self, ConnectionError>
    where
        I: IntoIterator<Item = (String, Connection)>,
    {
        let mut p = Self::identity(l);
        for (label, c) in connections {
            c.check_shape(l)?;
            p.insert(label, c);
        }
        p.closed = p.check_closed();
        Ok(p)
    }

    /// Adds a connection unless one with the same lower map is present.
    /// Returns the index of the member.
    pub fn insert(&mut self, label: String, c: Connection) -> usize {
        if let Some(&i) = self.index.get(&c.lower) {
            return i;
        }
        assert_eq!(
            c.len(),
            self.members[0].len(),
            "connection on a different lattice"
        );
        let i = self.members.len();
        self.index.insert(c.lower.clone(), i);
        self.members.push(c);
        self.labels.push(label);
        self.closed = false;
        i
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn lattice_len(&self) -> usize {
        self.members[0].len()
    }

    pub fn members(&self) -> &[Connection] {
        &self.members
    }

    pub fn get(&self, i: usize) -> &Connection {
        &self.members[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the member with the same lower map as `c`.
    pub fn position(&self, c: &Connection) -> Option<usize> {
        self.index.get(&c.lower).copied()
    }

    pub fn position_of_lower(&self, lower: &[usize]) -> Option<usize> {
        self.index.get(lower).copied()
    }

    /// Whether the set was verified to be closed under composition.
    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// A pair of members whose composite is missing, if any.
    pub fn composition_gap(&self) -> Option<(usize, usize)> {
        for (i, ci) in self.members.iter().enumerate() {
            for (j, cj) in self.members.iter().enumerate() {
                let lower: Vec<usize> = cj.lower.iter().map(|&x| ci.lower[x]).collect();
                if !self.index.contains_key(&lower) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn check_closed(&self) -> bool {
        self.composition_gap().is_none()
    }

    /// Re-checks closure under composition and records the result.
    pub fn verify_closed(&mut self) -> bool {
        self.closed = self.check_closed();
        self.closed
    }

    /// The monoid generated by the members under composition.
    pub fn generate_monoid(&self, limit: usize) -> Result<Parameterization, ConnectionError> {
        let mut out = self.clone();
        if out.len() > limit {
            return Err(ConnectionError::LimitExceeded(limit));
        }
        let generators: Vec<usize> = (0..self.len()).collect();
        let mut queue: VecDeque<usize> = (0..self.len()).collect();
        while let Some(w) = queue.pop_front() {
            for &g in &generators {
                let c = compose_unchecked(&out.members[w], &self.members[g]);
                if out.index.contains_key(&c.lower) {
                    continue;
                }
                if out.len() == limit {
                    return Err(ConnectionError::LimitExceeded(limit));
                }
                let label = format!("{}∘{}", out.labels[w], self.labels[g]);
                queue.push_back(out.insert(label, c));
            }
        }
        out.closed = true;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FiniteLattice {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        FiniteLattice::chain(&names).unwrap()
    }

    #[test]
    fn identity_is_valid() {
        let l = chain(4);
        let id = Connection::identity(&l);
        assert!(validate_connection(&l, &id).unwrap().is_valid());
    }

    #[test]
    fn constant_one_pair_is_invalid_at_zero_zero() {
        let l = chain(2);
        let c = Connection::new(vec![1, 1], vec![1, 1]);
        let report = validate_connection(&l, &c).unwrap();
        assert!(report.violations.contains(&(0, 0)));
        assert!(!report.is_valid());
    }

    #[test]
    fn adjoints_of_constant_bottom() {
        let l = chain(4);
        let c = adjoint_from_lower(&l, vec![0; 4]).unwrap();
        assert_eq!(c.upper_table(), &[3, 3, 3, 3]);
        let back = adjoint_from_upper(&l, c.upper_table().to_vec()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn non_join_preserving_lower() {
        let l = chain(3);
        let err = adjoint_from_lower(&l, vec![1, 1, 2]).unwrap_err();
        assert_eq!(err, ConnectionError::NotJoinPreserving(vec![]));
        let diamond = FiniteLattice::new(
            &["0", "x", "y", "1"],
            &[("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
        )
        .unwrap();
        // isotone, keeps bottom, but joins x and y to 1 while mapping both to x
        let err = adjoint_from_lower(&diamond, vec![0, 1, 1, 3]).unwrap_err();
        assert_eq!(err, ConnectionError::NotJoinPreserving(vec![1, 2]));
    }

    #[test]
    fn extremal_connections_are_extremal() {
        let l = chain(4);
        let (bot, top) = extremal_connections(&l);
        assert!(validate_connection(&l, &bot).unwrap().is_valid());
        assert!(validate_connection(&l, &top).unwrap().is_valid());
        assert_eq!(top.lower(1), 3);
        assert_eq!(top.upper(2), 0);
        assert_eq!(compose(&top, &top).unwrap(), top);
        let two = chain(2);
        assert!(extremal_connections(&two).1.is_identity());
    }

    #[test]
    fn monoid_of_identity() {
        let l = chain(3);
        let p = Parameterization::identity(&l);
        let m = p.generate_monoid(10).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m.is_closed());
    }

    #[test]
    fn monoid_limit() {
        let l = chain(4);
        // x ↦ max(x-1, 0) has powers of every depth
        let c = adjoint_from_lower(&l, vec![0, 0, 1, 2]).unwrap();
        let p = Parameterization::from_connections(&l, [("s".to_owned(), c)]).unwrap();
        assert!(!p.is_closed());
        assert!(matches!(
            p.generate_monoid(3),
            Err(ConnectionError::LimitExceeded(3))
        ));
        assert_eq!(p.generate_monoid(4).unwrap().len(), 4);
    }
}
