//! Attribute sets annotated with integer time points, and shifts in time.
//!
//! Elements of the lattice are subsets of `Y × ℤ`. Only the finite ones are
//! represented explicitly; the whole set `Y × ℤ` is the symbolic [`TemporalElem::Top`].
//! The connections are the shifts `s^k`, `k ∈ ℤ`, moving every time point by `k`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::inference::{
    saturate, Applicable, EffectiveLattice, Implication, InferenceError, Saturation, Theory,
};
use crate::semantics::{holds, Model, SemanticsError};

/// Largest absolute time accepted in inputs.
pub const MAX_TIME: i64 = 1 << 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemporalError {
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("time {0} is outside ±{MAX_TIME}")]
    TimeOutOfRange(i64),
    #[error("shifting by {0} overflows")]
    Overflow(i64),
    #[error("no fixpoint within {firings} firings")]
    BudgetExceeded { firings: usize },
    #[error(transparent)]
    Inference(#[from] InferenceError<TemporalElem>),
}

/// A finite set of `(attribute index, time)` pairs.
pub type TemporalSet = BTreeSet<(usize, i64)>;

/// An element of `2^{Y×ℤ}` that the library can represent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TemporalElem {
    Set(TemporalSet),
    /// All of `Y × ℤ`.
    Top,
}

impl TemporalElem {
    pub fn empty() -> Self {
        TemporalElem::Set(TemporalSet::new())
    }

    pub fn as_set(&self) -> Option<&TemporalSet> {
        match self {
            TemporalElem::Set(s) => Some(s),
            TemporalElem::Top => None,
        }
    }

    /// Smallest and largest time point, for non-empty finite sets.
    pub fn time_range(&self) -> Option<(i64, i64)> {
        let s = self.as_set()?;
        let min = s.iter().map(|p| p.1).min()?;
        let max = s.iter().map(|p| p.1).max()?;
        Some((min, max))
    }

    fn span(&self) -> i64 {
        self.time_range().map_or(0, |(lo, hi)| hi - lo)
    }
}

/// Every time point moved by `k`.
pub fn shift(set: &TemporalSet, k: i64) -> Result<TemporalSet, TemporalError> {
    set.iter()
        .map(|&(y, t)| t.checked_add(k).map(|t| (y, t)).ok_or(TemporalError::Overflow(k)))
        .collect()
}

fn shift_elem(e: &TemporalElem, k: i64) -> TemporalElem {
    match e {
        TemporalElem::Set(s) => {
            TemporalElem::Set(shift(s, k).expect("times stay far from the integer limits"))
        }
        TemporalElem::Top => TemporalElem::Top,
    }
}

/// The lattice `2^{Y×ℤ}` with the shift monoid `{s^k : k ∈ ℤ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalLattice {
    attributes: Vec<String>,
}

impl TemporalLattice {
    pub fn new<S: AsRef<str>>(attributes: &[S]) -> Self {
        TemporalLattice {
            attributes: attributes.iter().map(|s| s.as_ref().to_owned()).collect(),
        }
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn attribute(&self, name: &str) -> Result<usize, TemporalError> {
        self.attributes
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| TemporalError::UnknownAttribute(name.to_owned()))
    }

    /// Builds a set from named pairs, e.g. `[("y", -1), ("z", 2)]`.
    pub fn set<S: AsRef<str>>(&self, pairs: &[(S, i64)]) -> Result<TemporalElem, TemporalError> {
        let mut out = TemporalSet::new();
        for (name, t) in pairs {
            if t.unsigned_abs() > MAX_TIME as u64 {
                return Err(TemporalError::TimeOutOfRange(*t));
            }
            out.insert((self.attribute(name.as_ref())?, *t));
        }
        Ok(TemporalElem::Set(out))
    }

    /// `[["y",-1],["z",2]]`-style rendering.
    pub fn render(&self, e: &TemporalElem) -> String {
        match e {
            TemporalElem::Top => "top".to_owned(),
            TemporalElem::Set(s) => {
                let parts: Vec<String> = s
                    .iter()
                    .map(|&(y, t)| format!("[\"{}\",{}]", self.attributes[y], t))
                    .collect();
                format!("[{}]", parts.join(","))
            }
        }
    }

    fn align(a: &TemporalSet, c: &TemporalSet, anchors: &TemporalSet) -> Vec<i64> {
        let mut out = BTreeSet::new();
        for &(ya, ta) in a {
            for &(y, t) in anchors {
                if y != ya {
                    continue;
                }
                let k = t - ta;
                if a.iter().all(|&(yb, tb)| c.contains(&(yb, tb + k))) {
                    out.insert(k);
                }
            }
            // anchoring one pair of a is enough when scanning all of c
            if std::ptr::eq(anchors, c) {
                break;
            }
        }
        out.into_iter().collect()
    }
}

impl EffectiveLattice for TemporalLattice {
    type Elem = TemporalElem;
    type Mu = i64;

    fn leq(&self, a: &TemporalElem, b: &TemporalElem) -> bool {
        match (a, b) {
            (_, TemporalElem::Top) => true,
            (TemporalElem::Top, TemporalElem::Set(_)) => false,
            (TemporalElem::Set(a), TemporalElem::Set(b)) => a.is_subset(b),
        }
    }

    fn join(&self, a: &TemporalElem, b: &TemporalElem) -> TemporalElem {
        let mut c = a.clone();
        self.join_into(&mut c, b);
        c
    }

    fn join_into(&self, c: &mut TemporalElem, x: &TemporalElem) {
        match (c, x) {
            (TemporalElem::Top, _) => {}
            (c, TemporalElem::Top) => *c = TemporalElem::Top,
            (TemporalElem::Set(c), TemporalElem::Set(x)) => c.extend(x.iter().copied()),
        }
    }

    fn meet(&self, a: &TemporalElem, b: &TemporalElem) -> TemporalElem {
        match (a, b) {
            (TemporalElem::Top, x) | (x, TemporalElem::Top) => x.clone(),
            (TemporalElem::Set(a), TemporalElem::Set(b)) => {
                TemporalElem::Set(a.intersection(b).copied().collect())
            }
        }
    }

    fn bottom(&self) -> TemporalElem {
        TemporalElem::empty()
    }

    fn top(&self) -> TemporalElem {
        TemporalElem::Top
    }

    fn is_compact(&self, a: &TemporalElem) -> bool {
        match a {
            TemporalElem::Top => false,
            TemporalElem::Set(s) => s
                .iter()
                .all(|&(y, t)| y < self.attributes.len() && t.unsigned_abs() <= 4 * MAX_TIME as u64),
        }
    }

    fn identity(&self) -> i64 {
        0
    }

    fn contains(&self, _mu: &i64) -> bool {
        true
    }

    fn lower(&self, k: &i64, x: &TemporalElem) -> TemporalElem {
        shift_elem(x, *k)
    }

    fn upper(&self, k: &i64, x: &TemporalElem) -> TemporalElem {
        shift_elem(x, -*k)
    }

    fn applicable(&self, a: &TemporalElem, c: &TemporalElem) -> Applicable<i64> {
        match (a, c) {
            (TemporalElem::Top, TemporalElem::Top) => Applicable::Some(vec![0]),
            (TemporalElem::Top, TemporalElem::Set(_)) => Applicable::Some(vec![]),
            (TemporalElem::Set(a), _) if a.is_empty() => Applicable::All,
            (TemporalElem::Set(_), TemporalElem::Top) => Applicable::All,
            (TemporalElem::Set(a), TemporalElem::Set(c)) => Applicable::Some(Self::align(a, c, c)),
        }
    }

    fn applicable_since(&self, a: &TemporalElem, c: &TemporalElem, added: &TemporalElem) -> Applicable<i64> {
        match (a, c, added) {
            (TemporalElem::Set(a), TemporalElem::Set(c), TemporalElem::Set(added)) if !a.is_empty() => {
                Applicable::Some(Self::align(a, c, added))
            }
            _ => self.applicable(a, c),
        }
    }

    fn all_lowers_below(&self, b: &TemporalElem, m: &TemporalElem) -> Option<bool> {
        Some(match (b, m) {
            (_, TemporalElem::Top) => true,
            (TemporalElem::Set(b), _) => b.is_empty(),
            (TemporalElem::Top, _) => false,
        })
    }

    fn meet_of_all_uppers(&self, m: &TemporalElem) -> Option<TemporalElem> {
        Some(match m {
            TemporalElem::Top => TemporalElem::Top,
            TemporalElem::Set(_) => TemporalElem::empty(),
        })
    }

    fn terminates(&self) -> bool {
        false
    }

    fn describe(&self, a: &TemporalElem) -> String {
        self.render(a)
    }

    fn describe_mu(&self, mu: &i64) -> String {
        format!("s^{mu}")
    }
}

/// Result of [`temporal_closure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TemporalClosure {
    Bounded(Saturation<TemporalElem, i64>),
    /// The closure is an infinite set; `reason` says how this was detected.
    Unbounded {
        reason: String,
    },
}

/// The syntactic closure of `a`, or a report that it grows without bound.
///
/// A rule with an empty antecedent and a non-empty consequent fires under
/// every shift, so the closure is infinite. Otherwise the engine runs with the
/// budget; when it runs out, the closure is reported unbounded if the time
/// span of the working value was still growing between half the budget and
/// the full budget, and `BudgetExceeded` is returned otherwise.
pub fn temporal_closure(
    l: &TemporalLattice,
    theory: &Theory<TemporalElem>,
    a: &TemporalElem,
    budget: usize,
) -> Result<TemporalClosure, TemporalError> {
    for (i, imp) in theory.iter().enumerate() {
        if imp.lhs == TemporalElem::empty() && imp.rhs != TemporalElem::empty() {
            return Ok(TemporalClosure::Unbounded {
                reason: format!("implication {i} has an empty antecedent and applies under every shift"),
            });
        }
    }
    match saturate(l, theory, a, budget, None, None) {
        Ok(sat) => Ok(TemporalClosure::Bounded(sat)),
        Err(InferenceError::BudgetExceeded { partial, firings }) => {
            let half = match saturate(l, theory, a, budget / 2, None, None) {
                Err(InferenceError::BudgetExceeded { partial, .. }) => partial,
                _ => unreachable!("a smaller budget cannot reach the fixpoint"),
            };
            let (span_half, span_full) = (half.span(), partial.span());
            if span_full > span_half {
                Ok(TemporalClosure::Unbounded {
                    reason: format!(
                        "time span grew from {span_half} to {span_full} between {} and {firings} firings",
                        budget / 2
                    ),
                })
            } else {
                Err(TemporalError::BudgetExceeded { firings })
            }
        }
        Err(e) => Err(e.into()),
    }
}

/// Objects with attributes at time points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriadicContext {
    objects: Vec<String>,
    lattice: TemporalLattice,
    incidence: Vec<TemporalSet>,
}

impl TriadicContext {
    pub fn new<S: AsRef<str>>(
        objects: &[S],
        attributes: &[S],
        triples: &[(S, S, i64)],
    ) -> Result<Self, TemporalError> {
        let objects: Vec<String> = objects.iter().map(|s| s.as_ref().to_owned()).collect();
        let lattice = TemporalLattice::new(attributes);
        let mut incidence = vec![TemporalSet::new(); objects.len()];
        for (x, y, t) in triples {
            let xi = objects
                .iter()
                .position(|o| o == x.as_ref())
                .ok_or_else(|| TemporalError::UnknownObject(x.as_ref().to_owned()))?;
            if t.unsigned_abs() > MAX_TIME as u64 {
                return Err(TemporalError::TimeOutOfRange(*t));
            }
            incidence[xi].insert((lattice.attribute(y.as_ref())?, *t));
        }
        Ok(TriadicContext {
            objects,
            lattice,
            incidence,
        })
    }

    pub fn lattice(&self) -> &TemporalLattice {
        &self.lattice
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    /// `I_x` for every object `x`, as rows of a model.
    pub fn model(&self) -> Model<TemporalElem> {
        Model::new(self.incidence.iter().cloned().map(TemporalElem::Set))
    }

    fn check(&self, e: &TemporalElem) -> Result<(), TemporalError> {
        match e {
            TemporalElem::Top => Err(TemporalError::UnknownAttribute("top".into())),
            TemporalElem::Set(s) => match s.iter().find(|&&(y, _)| y >= self.lattice.attributes.len()) {
                Some(&(y, _)) => Err(TemporalError::UnknownAttribute(format!("#{y}"))),
                None => Ok(()),
            },
        }
    }
}

/// For every object `x` and offset `i`: if every `(y, t)` of the antecedent
/// has `(x, y, t+i)` in the incidence, so does every pair of the consequent.
pub fn triadic_holds(ctx: &TriadicContext, imp: &Implication<TemporalElem>) -> Result<bool, TemporalError> {
    ctx.check(&imp.lhs)?;
    ctx.check(&imp.rhs)?;
    let (lhs, rhs) = (imp.lhs.as_set().unwrap(), imp.rhs.as_set().unwrap());
    let mut verdict = true;
    for row in &ctx.incidence {
        let ok = if lhs.is_empty() {
            // every offset triggers; a finite row cannot contain all shifts of rhs
            rhs.is_empty()
        } else {
            TemporalLattice::align(lhs, row, row)
                .into_iter()
                .all(|i| rhs.iter().all(|&(y, t)| row.contains(&(y, t + i))))
        };
        if !ok {
            verdict = false;
            break;
        }
    }
    debug_assert_eq!(
        Ok(verdict),
        holds(&ctx.lattice, &ctx.model(), imp).map_err(|e: SemanticsError| e.to_string())
    );
    Ok(verdict)
}
