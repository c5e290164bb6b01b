//! Truth of implications in data, the closure it induces, and formal contexts.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::closure::{check_s_closure, ClosureOperator, SClosureReport};
use crate::connection::Parameterization;
use crate::inference::{Applicable, CheckError, EffectiveLattice, FiniteSystem, Implication};
use crate::lattice::FiniteLattice;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("the applicable connections cannot be enumerated for this query")]
    NotEnumerable,
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
}

/// A finite set of rows, each an element of the lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model<E> {
    rows: Vec<E>,
}

impl<E: PartialEq> Model<E> {
    /// Duplicate rows are dropped; order of first occurrence is kept.
    pub fn new<I: IntoIterator<Item = E>>(rows: I) -> Self {
        let mut out: Vec<E> = Vec::new();
        for r in rows {
            if !out.contains(&r) {
                out.push(r);
            }
        }
        Model { rows: out }
    }

    pub fn rows(&self) -> &[E] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// `a ⇒ b` is true in `M`: for every row `m` and every `μ ∈ S′`,
/// `μ(a) ≤ m` implies `μ(b) ≤ m`.
pub fn holds<L: EffectiveLattice>(
    l: &L,
    model: &Model<L::Elem>,
    imp: &Implication<L::Elem>,
) -> Result<bool, SemanticsError> {
    for m in model.rows() {
        match l.applicable(&imp.lhs, m) {
            Applicable::Some(mus) => {
                if mus.iter().any(|mu| !l.leq(&l.lower(mu, &imp.rhs), m)) {
                    return Ok(false);
                }
            }
            Applicable::All => {
                if !l
                    .all_lowers_below(&imp.rhs, m)
                    .ok_or(SemanticsError::NotEnumerable)?
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `⋀{ν(m) : m ∈ M, ⟨μ,ν⟩ ∈ S′, a ≤ ν(m)}`; top when the family is empty.
pub fn semantic_closure<L: EffectiveLattice>(
    l: &L,
    model: &Model<L::Elem>,
    a: &L::Elem,
) -> Result<L::Elem, SemanticsError> {
    let mut acc = l.top();
    for m in model.rows() {
        match l.applicable(a, m) {
            Applicable::Some(mus) => {
                for mu in mus {
                    acc = l.meet(&acc, &l.upper(&mu, m));
                }
            }
            Applicable::All => {
                let v = l.meet_of_all_uppers(m).ok_or(SemanticsError::NotEnumerable)?;
                acc = l.meet(&acc, &v);
            }
        }
    }
    Ok(acc)
}

/// `b ≤ C_M(a)`.
pub fn entails<L: EffectiveLattice>(
    l: &L,
    model: &Model<L::Elem>,
    imp: &Implication<L::Elem>,
) -> Result<bool, SemanticsError> {
    let c = semantic_closure(l, model, &imp.lhs)?;
    let verdict = l.leq(&imp.rhs, &c);
    debug_assert_eq!(Ok(verdict), holds(l, model, imp));
    Ok(verdict)
}

/// Tabulates `C_M` and checks it against the monoid generated by `s`.
pub fn check_cm_is_closure(
    l: &FiniteLattice,
    model: &Model<usize>,
    s: &Parameterization,
) -> Result<(ClosureOperator, SClosureReport), CheckError> {
    let sys = FiniteSystem::new(l, s)?;
    let table = l
        .elements()
        .map(|a| semantic_closure(&sys, model, &a).expect("finite monoid"))
        .collect();
    let c = ClosureOperator::new(table);
    let report = check_s_closure(l, &c, sys.monoid())?;
    Ok((c, report))
}

/// Objects, attributes and an incidence relation between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    /// `incidence[x]` holds the attribute indices of object `x`.
    incidence: Vec<BTreeSet<usize>>,
}

impl FormalContext {
    pub fn new<S: AsRef<str>>(
        objects: &[S],
        attributes: &[S],
        incidence: &[(S, S)],
    ) -> Result<Self, SemanticsError> {
        let objects: Vec<String> = objects.iter().map(|s| s.as_ref().to_owned()).collect();
        let attributes: Vec<String> = attributes.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut rows = vec![BTreeSet::new(); objects.len()];
        for (x, y) in incidence {
            let (x, y) = (x.as_ref(), y.as_ref());
            let xi = objects
                .iter()
                .position(|o| o == x)
                .ok_or_else(|| SemanticsError::UnknownObject(x.to_owned()))?;
            let yi = attributes
                .iter()
                .position(|a| a == y)
                .ok_or_else(|| SemanticsError::UnknownAttribute(y.to_owned()))?;
            rows[xi].insert(yi);
        }
        Ok(FormalContext {
            objects,
            attributes,
            incidence: rows,
        })
    }

    /// Builds a context from attribute-index rows, one per object.
    pub fn from_rows(objects: Vec<String>, attributes: Vec<String>, rows: Vec<BTreeSet<usize>>) -> Self {
        assert_eq!(objects.len(), rows.len());
        assert!(rows.iter().flatten().all(|&y| y < attributes.len()));
        FormalContext {
            objects,
            attributes,
            incidence: rows,
        }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    /// The attributes of object `x`.
    pub fn intent_of(&self, x: usize) -> &BTreeSet<usize> {
        &self.incidence[x]
    }

    /// The powerset of the attributes, as a lattice.
    pub fn attribute_lattice(&self) -> FiniteLattice {
        FiniteLattice::powerset(&self.attributes).expect("distinct attribute names")
    }

    /// Attribute indices named in `names`.
    pub fn attribute_set<S: AsRef<str>>(&self, names: &[S]) -> Result<BTreeSet<usize>, SemanticsError> {
        names
            .iter()
            .map(|n| {
                let n = n.as_ref();
                self.attributes
                    .iter()
                    .position(|a| a == n)
                    .ok_or_else(|| SemanticsError::UnknownAttribute(n.to_owned()))
            })
            .collect()
    }

    /// `A↓↑`: the attributes shared by every object that has all of `A`.
    pub fn intent_closure(&self, a: &BTreeSet<usize>) -> Result<BTreeSet<usize>, SemanticsError> {
        if let Some(&bad) = a.iter().find(|&&y| y >= self.attributes.len()) {
            return Err(SemanticsError::UnknownAttribute(format!("#{bad}")));
        }
        let mut out: BTreeSet<usize> = (0..self.attributes.len()).collect();
        for row in &self.incidence {
            if a.is_subset(row) {
                out = out.intersection(row).copied().collect();
            }
        }
        Ok(out)
    }
}

/// Bitmask of an attribute set, matching [`FiniteLattice::powerset`] indices.
pub fn attribute_mask(set: &BTreeSet<usize>) -> usize {
    set.iter().fold(0, |m, &y| m | (1 << y))
}

/// Attribute set of a powerset bitmask.
pub fn mask_attributes(mask: usize) -> BTreeSet<usize> {
    (0..usize::BITS as usize)
        .filter(|&y| mask & (1 << y) != 0)
        .collect()
}

/// The object intents as rows over the powerset of the attributes.
pub fn context_to_model(ctx: &FormalContext) -> Model<usize> {
    Model::new(ctx.incidence.iter().map(attribute_mask))
}
