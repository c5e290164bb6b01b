//! Finite lattices with precomputed order, join and meet.
//!
//! Elements are addressed by dense indices (`usize`). An explicitly listed
//! lattice keeps full `n × n` tables; direct powers (powersets and lattices of
//! L-sets) are stored as a base lattice plus an attribute list and computed
//! componentwise, so that `L^Y` can grow well past the point where quadratic
//! tables would fit in memory.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Default cap on the number of elements of a materialized direct power.
pub const DEFAULT_ENUMERATION_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order is not antisymmetric: `{0}` <= `{1}` and `{1}` <= `{0}`")]
    NotAntisymmetric(String, String),
    #[error("`{a}` and `{b}` have no unique {bound}")]
    NotALattice {
        a: String,
        b: String,
        bound: &'static str,
    },
    #[error("direct power has {base}^{arity} elements, more than the cap of {cap}")]
    TooLarge { base: usize, arity: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ProductStyle {
    /// Elements printed as attribute sets, `{x,y}`.
    Sets,
    /// Elements printed as graded sets, `{y^a,z^1}`.
    Grades,
}

#[derive(Clone)]
enum Repr {
    Tables {
        names: Vec<String>,
        index: HashMap<String, usize>,
        leq: Vec<bool>,
        join: Vec<u32>,
        meet: Vec<u32>,
    },
    Product {
        base: Arc<FiniteLattice>,
        attributes: Vec<String>,
        style: ProductStyle,
    },
}

/// A finite (hence complete) lattice.
#[derive(Clone)]
pub struct FiniteLattice {
    repr: Repr,
    len: usize,
    top: usize,
    bottom: usize,
}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.elements().map(|e| self.name(e)).collect();
        f.debug_struct("FiniteLattice")
            .field("elements", &names)
            .field("top", &self.name(self.top))
            .field("bottom", &self.name(self.bottom))
            .finish()
    }
}

impl PartialEq for FiniteLattice {
    fn eq(&self, other: &Self) -> bool {
        if self.len != other.len {
            return false;
        }
        match (&self.repr, &other.repr) {
            (
                Repr::Tables {
                    names: n1, leq: l1, ..
                },
                Repr::Tables {
                    names: n2, leq: l2, ..
                },
            ) => n1 == n2 && l1 == l2,
            (
                Repr::Product {
                    base: b1,
                    attributes: a1,
                    ..
                },
                Repr::Product {
                    base: b2,
                    attributes: a2,
                    ..
                },
            ) if a1 == a2 && b1 == b2 => self.is_powerset() == other.is_powerset(),
            _ => self.elements().all(|a| {
                self.name(a) == other.name(a) && self.elements().all(|b| self.leq(a, b) == other.leq(a, b))
            }),
        }
    }
}

impl FiniteLattice {
    /// Builds a lattice from element names and any generating set of `<=` pairs.
    ///
    /// The order is the reflexive-transitive closure of `order`; the result is
    /// rejected if that closure is not antisymmetric or some pair lacks a
    /// unique join or meet.
    pub fn new<S: AsRef<str>>(elements: &[S], order: &[(S, S)]) -> Result<Self, LatticeError> {
        if elements.is_empty() {
            return Err(LatticeError::Empty);
        }
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(LatticeError::DuplicateElement(name.clone()));
            }
        }
        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in order {
            let lookup = |s: &str| {
                index
                    .get(s)
                    .copied()
                    .ok_or_else(|| LatticeError::UnknownElement(s.to_owned()))
            };
            let (a, b) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            leq[a * n + b] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(LatticeError::NotAntisymmetric(names[i].clone(), names[j].clone()));
                }
            }
        }
        Self::from_order_matrix(names, index, leq)
    }

    /// Builds a lattice from a complete `<=` relation given as a predicate.
    ///
    /// The predicate must already be a partial order; only the lattice
    /// property is checked.
    pub fn from_order_fn<S, F>(elements: &[S], leq: F) -> Result<Self, LatticeError>
    where
        S: AsRef<str>,
        F: Fn(usize, usize) -> bool,
    {
        if elements.is_empty() {
            return Err(LatticeError::Empty);
        }
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(LatticeError::DuplicateElement(name.clone()));
            }
        }
        let n = names.len();
        let mut table = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = leq(i, j);
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if table[i * n + j] && table[j * n + i] {
                    return Err(LatticeError::NotAntisymmetric(names[i].clone(), names[j].clone()));
                }
            }
        }
        Self::from_order_matrix(names, index, table)
    }

    fn from_order_matrix(
        names: Vec<String>,
        index: HashMap<String, usize>,
        leq: Vec<bool>,
    ) -> Result<Self, LatticeError> {
        let n = names.len();
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let lub = least_bound(n, |x, y| leq[x * n + y], a, b);
                let glb = least_bound(n, |x, y| leq[y * n + x], a, b);
                let lub = lub.ok_or_else(|| LatticeError::NotALattice {
                    a: names[a].clone(),
                    b: names[b].clone(),
                    bound: "join",
                })?;
                let glb = glb.ok_or_else(|| LatticeError::NotALattice {
                    a: names[a].clone(),
                    b: names[b].clone(),
                    bound: "meet",
                })?;
                join[a * n + b] = lub as u32;
                join[b * n + a] = lub as u32;
                meet[a * n + b] = glb as u32;
                meet[b * n + a] = glb as u32;
            }
        }
        let top = (0..n).fold(0, |acc, e| join[acc * n + e] as usize);
        let bottom = (0..n).fold(0, |acc, e| meet[acc * n + e] as usize);
        Ok(FiniteLattice {
            repr: Repr::Tables {
                names,
                index,
                leq,
                join,
                meet,
            },
            len: n,
            top,
            bottom,
        })
    }

    /// The chain `names[0] < names[1] < ...`.
    pub fn chain<S: AsRef<str>>(names: &[S]) -> Result<Self, LatticeError> {
        Self::from_order_fn(names, |a, b| a <= b)
    }

    /// The powerset of `attributes` ordered by inclusion.
    ///
    /// Element `e` is the set of attributes whose bit is set in `e`.
    pub fn powerset<S: AsRef<str>>(attributes: &[S]) -> Result<Self, LatticeError> {
        let base = Arc::new(Self::chain(&["0", "1"])?);
        Self::power(base, attributes, 1 << 20, ProductStyle::Sets)
    }

    /// The direct power `base^attributes` ordered componentwise.
    pub fn direct_power<S: AsRef<str>>(
        base: Arc<FiniteLattice>,
        attributes: &[S],
        cap: usize,
    ) -> Result<Self, LatticeError> {
        Self::power(base, attributes, cap, ProductStyle::Grades)
    }

    fn power<S: AsRef<str>>(
        base: Arc<FiniteLattice>,
        attributes: &[S],
        cap: usize,
        style: ProductStyle,
    ) -> Result<Self, LatticeError> {
        let attributes: Vec<String> = attributes.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut seen = std::collections::HashSet::new();
        for a in &attributes {
            if !seen.insert(a.as_str()) {
                return Err(LatticeError::DuplicateElement(a.clone()));
            }
        }
        let k = attributes.len();
        let too_large = LatticeError::TooLarge {
            base: base.len(),
            arity: k,
            cap,
        };
        let mut len: usize = 1;
        for _ in 0..k {
            len = len.checked_mul(base.len()).ok_or(too_large.clone())?;
            if len > cap {
                return Err(too_large);
            }
        }
        let lattice = FiniteLattice {
            len,
            top: 0,
            bottom: 0,
            repr: Repr::Product {
                base,
                attributes,
                style,
            },
        };
        let top = lattice.from_components(&vec![lattice.base().unwrap().top(); k]);
        let bottom = lattice.from_components(&vec![lattice.base().unwrap().bottom(); k]);
        Ok(FiniteLattice {
            top,
            bottom,
            ..lattice
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; kept for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.len
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        match &self.repr {
            Repr::Tables { leq, .. } => leq[a * self.len + b],
            Repr::Product { base, attributes, .. } => {
                let n = base.len();
                let (mut a, mut b) = (a, b);
                for _ in 0..attributes.len() {
                    if !base.leq(a % n, b % n) {
                        return false;
                    }
                    a /= n;
                    b /= n;
                }
                true
            }
        }
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Tables { join, .. } => join[a * self.len + b] as usize,
            Repr::Product { base, .. } => self.zip_components(a, b, |x, y| base.join(x, y)),
        }
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Tables { meet, .. } => meet[a * self.len + b] as usize,
            Repr::Product { base, .. } => self.zip_components(a, b, |x, y| base.meet(x, y)),
        }
    }

    /// Join of a family; the empty join is bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.bottom, |acc, e| self.join(acc, e))
    }

    /// Meet of a family; the empty meet is top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, e| self.meet(acc, e))
    }

    fn zip_components(&self, a: usize, b: usize, f: impl Fn(usize, usize) -> usize) -> usize {
        let Repr::Product { base, attributes, .. } = &self.repr else {
            unreachable!()
        };
        let n = base.len();
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..attributes.len() {
            out += f(a % n, b % n) * place;
            a /= n;
            b /= n;
            place *= n;
        }
        out
    }

    /// For a direct power, the lattice of component values.
    pub fn base(&self) -> Option<&FiniteLattice> {
        match &self.repr {
            Repr::Product { base, .. } => Some(base),
            Repr::Tables { .. } => None,
        }
    }

    /// For a direct power, the attribute (universe) names.
    pub fn attributes(&self) -> Option<&[String]> {
        match &self.repr {
            Repr::Product { attributes, .. } => Some(attributes),
            Repr::Tables { .. } => None,
        }
    }

    /// True for lattices built by [`FiniteLattice::powerset`].
    pub fn is_powerset(&self) -> bool {
        matches!(
            &self.repr,
            Repr::Product {
                style: ProductStyle::Sets,
                ..
            }
        )
    }

    /// Component values of a direct-power element, one per attribute.
    ///
    /// Panics on lattices that are not direct powers.
    pub fn components(&self, e: usize) -> Vec<usize> {
        let Repr::Product { base, attributes, .. } = &self.repr else {
            panic!("components() called on an explicitly listed lattice")
        };
        let n = base.len();
        let mut e = e;
        (0..attributes.len())
            .map(|_| {
                let d = e % n;
                e /= n;
                d
            })
            .collect()
    }

    /// Inverse of [`FiniteLattice::components`].
    pub fn from_components(&self, components: &[usize]) -> usize {
        let Repr::Product { base, .. } = &self.repr else {
            panic!("from_components() called on an explicitly listed lattice")
        };
        let n = base.len();
        components.iter().rev().fold(0, |acc, &d| acc * n + d)
    }

    /// Display name of an element.
    pub fn name(&self, e: usize) -> String {
        match &self.repr {
            Repr::Tables { names, .. } => names[e].clone(),
            Repr::Product {
                base,
                attributes,
                style,
            } => {
                let parts: Vec<String> = self
                    .components(e)
                    .into_iter()
                    .zip(attributes)
                    .filter_map(|(d, attr)| match style {
                        ProductStyle::Sets => (d == base.top()).then(|| attr.clone()),
                        ProductStyle::Grades => Some(format!("{attr}^{}", base.name(d))),
                    })
                    .collect();
                format!("{{{}}}", parts.join(","))
            }
        }
    }

    /// Looks an element up by its display name.
    pub fn index_of(&self, name: &str) -> Result<usize, LatticeError> {
        let unknown = || LatticeError::UnknownElement(name.to_owned());
        match &self.repr {
            Repr::Tables { index, .. } => index.get(name).copied().ok_or_else(unknown),
            Repr::Product {
                base,
                attributes,
                style,
            } => {
                let inner = name
                    .trim()
                    .strip_prefix('{')
                    .and_then(|s| s.strip_suffix('}'))
                    .ok_or_else(unknown)?;
                let mut comps = vec![base.bottom(); attributes.len()];
                for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                    let (attr, grade) = match style {
                        ProductStyle::Sets => (part, base.top()),
                        ProductStyle::Grades => {
                            let (attr, grade) = part.split_once('^').ok_or_else(unknown)?;
                            (attr.trim(), base.index_of(grade.trim())?)
                        }
                    };
                    let pos = attributes.iter().position(|a| a == attr).ok_or_else(unknown)?;
                    comps[pos] = grade;
                }
                Ok(self.from_components(&comps))
            }
        }
    }

    /// Errors with `UnknownElement` if `e` is not an index of this lattice.
    pub fn check(&self, e: usize) -> Result<usize, LatticeError> {
        if self.contains(e) {
            Ok(e)
        } else {
            Err(LatticeError::UnknownElement(format!("#{e}")))
        }
    }

    /// Every element below `e`, `e` included.
    pub fn down_set(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        self.elements().filter(move |&x| self.leq(x, e))
    }

    /// Elements in a linear extension of the order (bottom first).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().collect();
        let height: Vec<usize> = v.iter().map(|&e| self.down_set(e).count()).collect();
        v.sort_by_key(|&e| (height[e], e));
        v
    }
}

/// Least element of the set of common upper bounds of `a` and `b` under `leq`.
fn least_bound(n: usize, leq: impl Fn(usize, usize) -> bool, a: usize, b: usize) -> Option<usize> {
    let bounds: Vec<usize> = (0..n).filter(|&u| leq(a, u) && leq(b, u)).collect();
    bounds
        .iter()
        .copied()
        .find(|&u| bounds.iter().all(|&v| leq(u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond_pairs() -> Vec<(&'static str, &'static str)> {
        vec![("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")]
    }

    #[test]
    fn four_chain_from_hasse_edges() {
        let l = FiniteLattice::new(&["0", "a", "b", "1"], &[("0", "a"), ("a", "b"), ("b", "1")]).unwrap();
        assert_eq!(l.name(l.top()), "1");
        assert_eq!(l.name(l.bottom()), "0");
        let (a, b) = (l.index_of("a").unwrap(), l.index_of("b").unwrap());
        assert_eq!(l.join(a, b), b);
        assert_eq!(l.meet(a, b), a);
        assert_eq!(l.join(a, a), a);
        assert!(l.leq(0, 3));
    }

    #[test]
    fn one_point_lattice() {
        let l = FiniteLattice::new::<&str>(&["0"], &[]).unwrap();
        assert_eq!(l.top(), l.bottom());
        assert_eq!(l.len(), 1);
    }

    #[test]
    fn diamond_and_cycle() {
        let l = FiniteLattice::new(&["0", "x", "y", "1"], &diamond_pairs()).unwrap();
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.meet(1, 2), 0);

        let mut pairs = diamond_pairs();
        pairs.push(("x", "y"));
        pairs.push(("y", "x"));
        let err = FiniteLattice::new(&["0", "x", "y", "1"], &pairs).unwrap_err();
        assert_eq!(err, LatticeError::NotAntisymmetric("x".into(), "y".into()));
    }

    #[test]
    fn missing_join_is_rejected() {
        // two maximal elements, no top
        let err = FiniteLattice::new(&["0", "x", "y"], &[("0", "x"), ("0", "y")]).unwrap_err();
        assert!(matches!(err, LatticeError::NotALattice { bound: "join", .. }));
    }

    #[test]
    fn unknown_element_in_pairs() {
        let err = FiniteLattice::new(&["0", "1"], &[("0", "2")]).unwrap_err();
        assert_eq!(err, LatticeError::UnknownElement("2".into()));
    }

    #[test]
    fn powerset_union() {
        let l = FiniteLattice::powerset(&["1", "2"]).unwrap();
        let one = l.index_of("{1}").unwrap();
        let two = l.index_of("{2}").unwrap();
        assert_eq!(l.name(l.join(one, two)), "{1,2}");
        assert_eq!(l.name(l.bottom()), "{}");
        assert_eq!(l.len(), 4);
    }

    #[test]
    fn direct_power_names_round_trip() {
        let base = Arc::new(FiniteLattice::chain(&["0", "0.5", "1"]).unwrap());
        let l = FiniteLattice::direct_power(base, &["y", "z"], 100).unwrap();
        assert_eq!(l.len(), 9);
        for e in l.elements() {
            assert_eq!(l.index_of(&l.name(e)).unwrap(), e);
        }
        let a = l.index_of("{y^0.5,z^0}").unwrap();
        let b = l.index_of("{y^0,z^1}").unwrap();
        assert_eq!(l.name(l.join(a, b)), "{y^0.5,z^1}");
        assert!(!l.leq(a, b));
    }

    #[test]
    fn direct_power_cap() {
        let base = Arc::new(FiniteLattice::chain(&["0", "a", "b", "1"]).unwrap());
        let err = FiniteLattice::direct_power(base, &["p", "q", "r"], 63).unwrap_err();
        assert_eq!(
            err,
            LatticeError::TooLarge {
                base: 4,
                arity: 3,
                cap: 63
            }
        );
    }

    #[test]
    fn empty_meet_is_top() {
        let l = FiniteLattice::chain(&["0", "a", "1"]).unwrap();
        assert_eq!(l.meet_all(std::iter::empty()), l.top());
        assert_eq!(l.join_all(std::iter::empty()), l.bottom());
    }
}
