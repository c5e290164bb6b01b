//! JSON documents for every structure in the library.
//!
//! Element literals depend on the lattice they live in:
//!
//! | lattice              | literal                     |
//! |----------------------|-----------------------------|
//! | listed elements      | `"a"`                       |
//! | powerset             | `["x","y"]`                 |
//! | L-sets `L^Y`         | `{"y":"a","z":"1"}`         |
//! | time-stamped sets    | `[["y",-1],["z",2]]`        |
//!
//! Every finite lattice also accepts the display name of an element as a string,
//! for instance `"{x,y}"` or `"{y^a}"`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::closure::{ClosureOperator, ClosureSystem};
use crate::connection::{adjoint_from_lower, Connection, ConnectionError, Parameterization};
use crate::inference::{Implication, Justification, Proof, ProofStep, Theory};
use crate::lattice::{FiniteLattice, LatticeError, DEFAULT_ENUMERATION_CAP};
use crate::residuated::{Hedge, LSetSpace, LeqFilter, ResiduatedError, ResiduatedLattice};
use crate::semantics::{FormalContext, Model, SemanticsError};
use crate::temporal::{TemporalElem, TemporalError, TemporalLattice, TriadicContext};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Residuated(#[from] ResiduatedError),
    #[error(transparent)]
    Connection(#[from] ConnectionError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Temporal(#[from] TemporalError),
}

fn format_err<T>(msg: impl Into<String>) -> Result<T, IoError> {
    Err(IoError::Format(msg.into()))
}

/// Reads a file and parses it as JSON.
pub fn read_json(path: impl AsRef<Path>) -> Result<Value, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

/// `{"elements": [...], "order": [["0","a"], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub elements: Vec<String>,
    #[serde(default)]
    pub order: Vec<(String, String)>,
}

impl LatticeDoc {
    pub fn build(&self) -> Result<FiniteLattice, IoError> {
        Ok(FiniteLattice::new(&self.elements, &self.order)?)
    }

    /// Lists every element and the covering pairs of `l`.
    pub fn from_lattice(l: &FiniteLattice) -> Self {
        let mut order = Vec::new();
        for a in l.elements() {
            for b in l.elements() {
                let covers = l.lt(a, b) && !l.elements().any(|c| l.lt(a, c) && l.lt(c, b));
                if covers {
                    order.push((l.name(a), l.name(b)));
                }
            }
        }
        LatticeDoc {
            elements: l.elements().map(|e| l.name(e)).collect(),
            order,
        }
    }
}

/// A lattice document with `otimes` and `to` tables, rows in element order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResiduatedDoc {
    pub elements: Vec<String>,
    #[serde(default)]
    pub order: Vec<(String, String)>,
    pub otimes: Vec<Vec<String>>,
    pub to: Vec<Vec<String>>,
}

impl ResiduatedDoc {
    pub fn build(&self) -> Result<ResiduatedLattice, IoError> {
        let l = FiniteLattice::new(&self.elements, &self.order)?;
        let table = |rows: &[Vec<String>]| -> Result<Vec<Vec<usize>>, IoError> {
            rows.iter()
                .map(|row| row.iter().map(|x| Ok(l.index_of(x)?)).collect())
                .collect()
        };
        let otimes = table(&self.otimes)?;
        let to = table(&self.to)?;
        Ok(ResiduatedLattice::new(Arc::new(l), otimes, to)?)
    }

    pub fn from_algebra(r: &ResiduatedLattice) -> Self {
        let l = r.lattice();
        let LatticeDoc { elements, order } = LatticeDoc::from_lattice(l);
        let names = |t: Vec<Vec<usize>>| -> Vec<Vec<String>> {
            t.into_iter()
                .map(|row| row.into_iter().map(|x| l.name(x)).collect())
                .collect()
        };
        ResiduatedDoc {
            elements,
            order,
            otimes: names(r.otimes_table()),
            to: names(r.residuum_table()),
        }
    }
}

/// `{"star": {"b": "0", ...}}`; elements not listed are fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HedgeDoc {
    pub star: BTreeMap<String, String>,
}

impl HedgeDoc {
    pub fn build(&self, r: &ResiduatedLattice) -> Result<Hedge, IoError> {
        let l = r.lattice();
        let mut star: Vec<usize> = l.elements().collect();
        for (a, b) in &self.star {
            star[l.index_of(a)?] = l.index_of(b)?;
        }
        Ok(Hedge { star })
    }
}

/// `{"members": [...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FilterDoc {
    pub members: Vec<String>,
}

impl FilterDoc {
    pub fn build(&self, l: &FiniteLattice) -> Result<LeqFilter, IoError> {
        let members = self
            .members
            .iter()
            .map(|m| l.index_of(m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LeqFilter::new(members))
    }
}

/// `{"lower": {"0": "0", ...}, "upper": {...}}`; the upper map is derived when absent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub lower: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<BTreeMap<String, Value>>,
}

impl ConnectionDoc {
    /// Tables of the maps; no validation beyond element lookup.
    pub fn tables(&self, l: &FiniteLattice) -> Result<(Vec<usize>, Option<Vec<usize>>), IoError> {
        let lower = map_table(l, &self.lower, "lower")?;
        let upper = self
            .upper
            .as_ref()
            .map(|u| map_table(l, u, "upper"))
            .transpose()?;
        Ok((lower, upper))
    }

    /// The connection, derived from the lower map when `upper` is absent.
    pub fn build(&self, l: &FiniteLattice) -> Result<Connection, IoError> {
        match self.tables(l)? {
            (lower, Some(upper)) => Ok(Connection::new(lower, upper)),
            (lower, None) => Ok(adjoint_from_lower(l, lower)?),
        }
    }
}

fn map_table(l: &FiniteLattice, map: &BTreeMap<String, Value>, what: &str) -> Result<Vec<usize>, IoError> {
    let mut table = vec![None; l.len()];
    for (k, v) in map {
        table[l.index_of(k)?] = Some(finite_element(l, v)?);
    }
    table
        .into_iter()
        .enumerate()
        .map(|(e, x)| x.ok_or_else(|| IoError::Format(format!("{what} map has no entry for {}", l.name(e)))))
        .collect()
}

/// `{"table": {"0": "a", ...}}` or a list in element order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorDoc {
    pub table: Value,
}

impl OperatorDoc {
    pub fn build(&self, l: &FiniteLattice) -> Result<ClosureOperator, IoError> {
        match &self.table {
            Value::Object(map) => {
                let map: BTreeMap<String, Value> = map.clone().into_iter().collect();
                Ok(ClosureOperator::new(map_table(l, &map, "operator")?))
            }
            Value::Array(items) if items.len() == l.len() => Ok(ClosureOperator::new(
                items
                    .iter()
                    .map(|v| finite_element(l, v))
                    .collect::<Result<_, _>>()?,
            )),
            _ => format_err(format!(
                "operator table needs one entry per element ({})",
                l.len()
            )),
        }
    }

    pub fn from_operator(l: &FiniteLattice, c: &ClosureOperator) -> Self {
        let map: serde_json::Map<String, Value> = l
            .elements()
            .map(|a| (l.name(a), render_finite(l, c.apply(a))))
            .collect();
        OperatorDoc {
            table: Value::Object(map),
        }
    }
}

/// `{"fixpoints": [...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDoc {
    pub fixpoints: Vec<Value>,
}

impl SystemDoc {
    pub fn build(&self, l: &FiniteLattice) -> Result<ClosureSystem, IoError> {
        Ok(ClosureSystem::new(
            self.fixpoints
                .iter()
                .map(|v| finite_element(l, v))
                .collect::<Result<Vec<_>, _>>()?,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImplicationDoc {
    pub lhs: Value,
    pub rhs: Value,
}

/// `{"implications": [{"lhs": ..., "rhs": ...}, ...]}`
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoryDoc {
    #[serde(default)]
    pub implications: Vec<ImplicationDoc>,
}

/// `{"rows": [...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDoc {
    pub rows: Vec<Value>,
}

/// `{"objects": [...], "attributes": [...], "incidence": [["x1","p"], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextDoc {
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub incidence: Vec<(String, String)>,
}

impl ContextDoc {
    pub fn build(&self) -> Result<FormalContext, IoError> {
        Ok(FormalContext::new(
            &self.objects,
            &self.attributes,
            &self.incidence,
        )?)
    }
}

/// `{"objects": [...], "attributes": [...], "incidence": [["x","y",0], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriadicDoc {
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub incidence: Vec<(String, String, i64)>,
}

impl TriadicDoc {
    pub fn build(&self) -> Result<TriadicContext, IoError> {
        let triples: Vec<(&str, &str, i64)> = self
            .incidence
            .iter()
            .map(|(x, y, t)| (x.as_str(), y.as_str(), *t))
            .collect();
        let objects: Vec<&str> = self.objects.iter().map(String::as_str).collect();
        let attributes: Vec<&str> = self.attributes.iter().map(String::as_str).collect();
        Ok(TriadicContext::new(&objects, &attributes, &triples)?)
    }
}

/// Parses an element literal of a finite lattice.
pub fn finite_element(l: &FiniteLattice, v: &Value) -> Result<usize, IoError> {
    match v {
        Value::String(s) => Ok(l.index_of(s)?),
        Value::Array(items) if l.is_powerset() => {
            let attrs = l.attributes().expect("powerset");
            let mut comps = vec![0; attrs.len()];
            for item in items {
                let Some(name) = item.as_str() else {
                    return format_err(format!("attribute names are strings, found {item}"));
                };
                let pos = attrs
                    .iter()
                    .position(|a| a == name)
                    .ok_or_else(|| LatticeError::UnknownElement(name.to_owned()))?;
                comps[pos] = 1;
            }
            Ok(l.from_components(&comps))
        }
        Value::Object(map) if l.attributes().is_some() && !l.is_powerset() => {
            let attrs = l.attributes().expect("direct power");
            let base = l.base().expect("direct power");
            let mut comps = vec![base.bottom(); attrs.len()];
            for (name, grade) in map {
                let pos = attrs
                    .iter()
                    .position(|a| a == name)
                    .ok_or_else(|| LatticeError::UnknownElement(name.to_owned()))?;
                let Some(grade) = grade.as_str() else {
                    return format_err(format!("grades are element names, found {grade}"));
                };
                comps[pos] = base.index_of(grade)?;
            }
            Ok(l.from_components(&comps))
        }
        _ => format_err(format!("`{v}` is not an element literal for this lattice")),
    }
}

/// The literal form of `e`: a name, an attribute list or a grade map.
pub fn render_finite(l: &FiniteLattice, e: usize) -> Value {
    match (l.attributes(), l.base()) {
        (Some(attrs), Some(base)) if l.is_powerset() => Value::Array(
            l.components(e)
                .into_iter()
                .zip(attrs)
                .filter(|&(d, _)| d == base.top())
                .map(|(_, a)| Value::String(a.clone()))
                .collect(),
        ),
        (Some(attrs), Some(base)) => Value::Object(
            l.components(e)
                .into_iter()
                .zip(attrs)
                .filter(|&(d, _)| d != base.bottom())
                .map(|(d, a)| (a.clone(), Value::String(base.name(d))))
                .collect(),
        ),
        _ => Value::String(l.name(e)),
    }
}

/// Parses `[["y",-1],["z",2]]`.
pub fn temporal_element(l: &TemporalLattice, v: &Value) -> Result<TemporalElem, IoError> {
    let pairs: Vec<(String, i64)> = serde_json::from_value(v.clone())
        .map_err(|_| IoError::Format(format!("`{v}` is not a list of [attribute, time] pairs")))?;
    Ok(l.set(&pairs)?)
}

pub fn render_temporal(l: &TemporalLattice, e: &TemporalElem) -> Value {
    match e {
        TemporalElem::Top => Value::String("top".into()),
        TemporalElem::Set(s) => Value::Array(s.iter().map(|&(y, t)| json!([l.attributes()[y], t])).collect()),
    }
}

/// Either inline JSON or the path of a file holding it.
pub fn json_arg(arg: &str) -> Result<Value, IoError> {
    match serde_json::from_str(arg) {
        Ok(v) => Ok(v),
        Err(e) => {
            if Path::new(arg).exists() {
                read_json(arg)
            } else {
                Err(e.into())
            }
        }
    }
}

/// A named connection in a parameters document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedConnectionDoc {
    pub label: String,
    pub lower: BTreeMap<String, Value>,
    #[serde(default)]
    pub upper: Option<BTreeMap<String, Value>>,
}

/// Describes a lattice together with the connections acting on it.
///
/// Exactly one of `lattice`, `powerset`, `residuated` or `temporal` is given.
/// With `residuated`, `universe` switches to the lattice of L-sets, and
/// `hedge`, `filter` and `multipliers` add the connections `⟨a⊗, a→⟩`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub powerset: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residuated: Option<ResiduatedDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub universe: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hedge: Option<HedgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filter: Option<FilterDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub multipliers: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub temporal: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub connections: Vec<NamedConnectionDoc>,
}

/// A finite lattice, a parameterization on it, and where they came from.
#[derive(Debug, Clone)]
pub struct FiniteSetting {
    pub lattice: FiniteLattice,
    pub params: Parameterization,
    pub algebra: Option<Arc<ResiduatedLattice>>,
    pub space: Option<LSetSpace>,
    pub hedge: Option<Hedge>,
    pub filter: Option<LeqFilter>,
}

impl FiniteSetting {
    pub fn element(&self, v: &Value) -> Result<usize, IoError> {
        finite_element(&self.lattice, v)
    }

    pub fn render(&self, e: usize) -> Value {
        render_finite(&self.lattice, e)
    }

    pub fn theory(&self, doc: &TheoryDoc) -> Result<Theory<usize>, IoError> {
        doc.implications.iter().map(|i| self.implication(i)).collect()
    }

    pub fn implication(&self, doc: &ImplicationDoc) -> Result<Implication<usize>, IoError> {
        Ok(Implication::new(self.element(&doc.lhs)?, self.element(&doc.rhs)?))
    }

    pub fn model(&self, doc: &ModelDoc) -> Result<Model<usize>, IoError> {
        Ok(Model::new(
            doc.rows
                .iter()
                .map(|r| self.element(r))
                .collect::<Result<Vec<_>, _>>()?,
        ))
    }
}

#[derive(Debug, Clone)]
pub enum Setting {
    Finite(Box<FiniteSetting>),
    Temporal(TemporalLattice),
}

impl ParamsDoc {
    pub fn build(&self) -> Result<Setting, IoError> {
        let kinds = [
            self.lattice.is_some(),
            self.powerset.is_some(),
            self.residuated.is_some(),
            self.temporal.is_some(),
        ];
        if kinds.iter().filter(|&&k| k).count() != 1 {
            return format_err("give exactly one of `lattice`, `powerset`, `residuated`, `temporal`");
        }
        if self.residuated.is_none()
            && (self.universe.is_some()
                || self.hedge.is_some()
                || self.filter.is_some()
                || !self.multipliers.is_empty())
        {
            return format_err("`universe`, `hedge`, `filter` and `multipliers` need `residuated`");
        }
        if let Some(attrs) = &self.temporal {
            if !self.connections.is_empty() {
                return format_err("time-stamped sets only carry the shift connections");
            }
            return Ok(Setting::Temporal(TemporalLattice::new(attrs)));
        }

        let mut setting = if let Some(doc) = &self.lattice {
            plain(doc.build()?)
        } else if let Some(attrs) = &self.powerset {
            plain(FiniteLattice::powerset(attrs)?)
        } else {
            let algebra = Arc::new(self.residuated.as_ref().expect("checked above").build()?);
            self.residuated_setting(algebra)?
        };
        for c in &self.connections {
            let doc = ConnectionDoc {
                label: Some(c.label.clone()),
                lower: c.lower.clone(),
                upper: c.upper.clone(),
            };
            let conn = doc.build(&setting.lattice)?;
            setting.params.insert(c.label.clone(), conn);
        }
        setting.params.verify_closed();
        Ok(Setting::Finite(Box::new(setting)))
    }

    fn residuated_setting(&self, algebra: Arc<ResiduatedLattice>) -> Result<FiniteSetting, IoError> {
        let base = algebra.lattice();
        let hedge = self.hedge.as_ref().map(|h| h.build(&algebra)).transpose()?;
        let filter = self.filter.as_ref().map(|f| f.build(base)).transpose()?;
        let multipliers = self
            .multipliers
            .iter()
            .map(|m| base.index_of(m))
            .collect::<Result<Vec<_>, _>>()?;
        match &self.universe {
            Some(universe) => {
                let space = LSetSpace::new(Arc::clone(&algebra), universe, DEFAULT_ENUMERATION_CAP)?;
                let mut params = match (&hedge, &filter) {
                    (Some(h), _) => space.hedge_parameterization(h),
                    (None, Some(f)) => space.filter_parameterization(f),
                    (None, None) => Parameterization::identity(space.lattice()),
                };
                if let (Some(_), Some(f)) = (&hedge, &filter) {
                    for &k in &f.members {
                        params.insert(format!("{}⊗", base.name(k)), space.multiplication_connection(k));
                    }
                }
                for &m in &multipliers {
                    params.insert(format!("{}⊗", base.name(m)), space.multiplication_connection(m));
                }
                Ok(FiniteSetting {
                    lattice: space.lattice().clone(),
                    params,
                    algebra: Some(algebra),
                    space: Some(space),
                    hedge,
                    filter,
                })
            }
            None => {
                if hedge.is_some() || filter.is_some() {
                    return format_err("`hedge` and `filter` act on L-sets; add a `universe`");
                }
                let mut params = Parameterization::identity(base);
                for &m in &multipliers {
                    params.insert(format!("{}⊗", base.name(m)), algebra.multiplication(m));
                }
                Ok(FiniteSetting {
                    lattice: base.clone(),
                    params,
                    algebra: Some(algebra),
                    space: None,
                    hedge,
                    filter,
                })
            }
        }
    }
}

fn plain(lattice: FiniteLattice) -> FiniteSetting {
    FiniteSetting {
        params: Parameterization::identity(&lattice),
        lattice,
        algebra: None,
        space: None,
        hedge: None,
        filter: None,
    }
}

/// How a step is justified, tagged by `"by"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "by", rename_all = "kebab-case")]
pub enum RuleDoc {
    Hypothesis { index: usize },
    Axiom,
    PseudoTransitivity { minor: usize, major: usize, side: Value },
    Adjoint { step: usize, connection: Value },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepDoc {
    pub lhs: Value,
    pub rhs: Value,
    #[serde(flatten)]
    pub rule: RuleDoc,
}

/// `{"steps": [{"lhs": ..., "rhs": ..., "by": "pseudo-transitivity", ...}, ...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProofDoc {
    pub steps: Vec<StepDoc>,
}

impl ProofDoc {
    pub fn from_proof<E, M>(
        proof: &Proof<E, M>,
        elem: impl Fn(&E) -> Value,
        mu: impl Fn(&M) -> Value,
    ) -> Self {
        let steps = proof
            .steps
            .iter()
            .map(|s| StepDoc {
                lhs: elem(&s.formula.lhs),
                rhs: elem(&s.formula.rhs),
                rule: match &s.justification {
                    Justification::Hypothesis(i) => RuleDoc::Hypothesis { index: *i },
                    Justification::Axiom => RuleDoc::Axiom,
                    Justification::PseudoTransitivity { minor, major, side } => RuleDoc::PseudoTransitivity {
                        minor: *minor,
                        major: *major,
                        side: elem(side),
                    },
                    Justification::Adjoint { step, connection } => RuleDoc::Adjoint {
                        step: *step,
                        connection: mu(connection),
                    },
                },
            })
            .collect();
        ProofDoc { steps }
    }

    pub fn to_proof<E, M>(
        &self,
        elem: impl Fn(&Value) -> Result<E, IoError>,
        mu: impl Fn(&Value) -> Result<M, IoError>,
    ) -> Result<Proof<E, M>, IoError> {
        let steps = self
            .steps
            .iter()
            .map(|s| {
                let justification = match &s.rule {
                    RuleDoc::Hypothesis { index } => Justification::Hypothesis(*index),
                    RuleDoc::Axiom => Justification::Axiom,
                    RuleDoc::PseudoTransitivity { minor, major, side } => Justification::PseudoTransitivity {
                        minor: *minor,
                        major: *major,
                        side: elem(side)?,
                    },
                    RuleDoc::Adjoint { step, connection } => Justification::Adjoint {
                        step: *step,
                        connection: mu(connection)?,
                    },
                };
                Ok(ProofStep {
                    formula: Implication::new(elem(&s.lhs)?, elem(&s.rhs)?),
                    justification,
                })
            })
            .collect::<Result<_, IoError>>()?;
        Ok(Proof { steps })
    }
}

/// Looks up a monoid member by label.
pub fn connection_by_label(params: &Parameterization, v: &Value) -> Result<usize, IoError> {
    let Some(label) = v.as_str() else {
        return format_err(format!("connections are named by label, found {v}"));
    };
    params
        .labels()
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| IoError::Format(format!("no connection labelled `{label}`")))
}

/// Shifts are written as integers.
pub fn shift_amount(v: &Value) -> Result<i64, IoError> {
    v.as_i64()
        .ok_or_else(|| IoError::Format(format!("a shift is an integer, found {v}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lattice_round_trip() {
        let doc: LatticeDoc = serde_json::from_value(json!({
            "elements": ["0", "x", "y", "1"],
            "order": [["0", "x"], ["0", "y"], ["x", "1"], ["y", "1"]]
        }))
        .unwrap();
        let l = doc.build().unwrap();
        assert_eq!(LatticeDoc::from_lattice(&l).build().unwrap(), l);
    }

    #[test]
    fn residuated_round_trip() {
        let r = fixtures::drastic_chain();
        let doc = ResiduatedDoc::from_algebra(&r);
        let back = doc.build().unwrap();
        assert_eq!(back.otimes_table(), r.otimes_table());
        assert_eq!(back.residuum_table(), r.residuum_table());
    }

    #[test]
    fn literals() {
        let l = FiniteLattice::powerset(&["x", "y", "z"]).unwrap();
        let e = finite_element(&l, &json!(["z", "x"])).unwrap();
        assert_eq!(l.name(e), "{x,z}");
        assert_eq!(finite_element(&l, &json!("{x,z}")).unwrap(), e);
        assert_eq!(render_finite(&l, e), json!(["x", "z"]));
        assert!(finite_element(&l, &json!(["w"])).is_err());

        let space = fixtures::single_attribute_space(fixtures::drastic_chain());
        let l = space.lattice();
        let e = finite_element(l, &json!({"y": "a"})).unwrap();
        assert_eq!(e, space.constant(1));
        assert_eq!(render_finite(l, e), json!({"y": "a"}));
        assert_eq!(finite_element(l, &json!({})).unwrap(), l.bottom());

        let t = TemporalLattice::new(&["y", "z"]);
        let e = temporal_element(&t, &json!([["y", -1], ["z", 2]])).unwrap();
        assert_eq!(render_temporal(&t, &e), json!([["y", -1], ["z", 2]]));
        assert!(temporal_element(&t, &json!([["w", 0]])).is_err());
    }

    #[test]
    fn params() {
        let doc: ParamsDoc = serde_json::from_value(json!({
            "residuated": ResiduatedDoc::from_algebra(&fixtures::drastic_chain()),
            "universe": ["y"],
            "hedge": {"star": {"b": "0"}}
        }))
        .unwrap();
        let Setting::Finite(s) = doc.build().unwrap() else {
            panic!()
        };
        assert_eq!(s.lattice.len(), 4);
        assert_eq!(s.params.len(), 3);
        assert!(s.params.is_closed());

        let bad: ParamsDoc = serde_json::from_value(json!({"powerset": ["x"], "temporal": ["y"]})).unwrap();
        assert!(bad.build().is_err());
    }

    #[test]
    fn proof_doc_shape() {
        let doc = ProofDoc {
            steps: vec![StepDoc {
                lhs: json!(["x"]),
                rhs: json!([]),
                rule: RuleDoc::PseudoTransitivity {
                    minor: 0,
                    major: 1,
                    side: json!([]),
                },
            }],
        };
        let v = serde_json::to_value(&doc).unwrap();
        assert_eq!(v["steps"][0]["by"], "pseudo-transitivity");
        assert_eq!(serde_json::from_value::<ProofDoc>(v).unwrap(), doc);
    }
}
