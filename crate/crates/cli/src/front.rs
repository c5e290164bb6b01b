use anyhow::{bail, Context, Result};
use galois_closure::inference::{EffectiveLattice, FiniteSystem, Implication, Theory};
use galois_closure::io::{
    connection_by_label, finite_element, read_json, render_finite, render_temporal, shift_amount,
    temporal_element, ContextDoc, FiniteSetting, ImplicationDoc, ModelDoc, ParamsDoc, Setting, TheoryDoc,
    TriadicDoc,
};
use galois_closure::semantics::{context_to_model, Model};
use galois_closure::temporal::TemporalLattice;
use serde::de::DeserializeOwned;
use serde_json::Value;

/// Reads `path` and deserializes it, naming the flag in errors.
pub fn load<T: DeserializeOwned>(path: &str, flag: &str) -> Result<T> {
    let v = read_json(path).with_context(|| format!("{flag} {path}"))?;
    serde_json::from_value(v).with_context(|| format!("{flag} {path}"))
}

pub fn load_setting(path: &str) -> Result<Setting> {
    let doc: ParamsDoc = load(path, "--params")?;
    doc.build().with_context(|| format!("--params {path}"))
}

pub fn finite(setting: Setting, command: &str) -> Result<Box<FiniteSetting>> {
    match setting {
        Setting::Finite(s) => Ok(s),
        Setting::Temporal(_) => bail!("`{command}` needs a finite lattice"),
    }
}

/// Element literals and connection names for a lattice with its monoid.
pub trait Front: EffectiveLattice {
    fn parse(&self, v: &Value) -> Result<Self::Elem>;
    fn literal(&self, e: &Self::Elem) -> Value;
    fn parse_mu(&self, v: &Value) -> Result<Self::Mu>;
    fn mu_literal(&self, mu: &Self::Mu) -> Value;

    /// A model file holds either `rows` or a context with an `incidence` relation.
    fn model_from(&self, v: Value) -> Result<Model<Self::Elem>>;

    fn implication(&self, doc: &ImplicationDoc) -> Result<Implication<Self::Elem>> {
        Ok(Implication::new(self.parse(&doc.lhs)?, self.parse(&doc.rhs)?))
    }

    fn theory(&self, doc: &TheoryDoc) -> Result<Theory<Self::Elem>> {
        doc.implications
            .iter()
            .enumerate()
            .map(|(i, imp)| self.implication(imp).with_context(|| format!("implication {i}")))
            .collect()
    }

    fn rows(&self, doc: &ModelDoc) -> Result<Model<Self::Elem>> {
        let rows = doc
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| self.parse(r).with_context(|| format!("row {i}")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Model::new(rows))
    }
}

impl Front for FiniteSystem<'_> {
    fn parse(&self, v: &Value) -> Result<usize> {
        Ok(finite_element(self.lattice(), v)?)
    }

    fn literal(&self, e: &usize) -> Value {
        render_finite(self.lattice(), *e)
    }

    fn parse_mu(&self, v: &Value) -> Result<usize> {
        Ok(connection_by_label(self.monoid(), v)?)
    }

    fn mu_literal(&self, mu: &usize) -> Value {
        Value::String(self.monoid().label(*mu).to_owned())
    }

    fn model_from(&self, v: Value) -> Result<Model<usize>> {
        if v.get("incidence").is_none() {
            return self.rows(&serde_json::from_value(v)?);
        }
        let ctx = serde_json::from_value::<ContextDoc>(v)?.build()?;
        if ctx.attribute_lattice() != *self.lattice() {
            bail!("the context's attributes do not match the powerset in --params");
        }
        Ok(context_to_model(&ctx))
    }
}

impl Front for TemporalLattice {
    fn parse(&self, v: &Value) -> Result<Self::Elem> {
        Ok(temporal_element(self, v)?)
    }

    fn literal(&self, e: &Self::Elem) -> Value {
        render_temporal(self, e)
    }

    fn parse_mu(&self, v: &Value) -> Result<i64> {
        Ok(shift_amount(v)?)
    }

    fn mu_literal(&self, mu: &i64) -> Value {
        Value::from(*mu)
    }

    fn model_from(&self, v: Value) -> Result<Model<Self::Elem>> {
        if v.get("incidence").is_none() {
            return self.rows(&serde_json::from_value(v)?);
        }
        let ctx = serde_json::from_value::<TriadicDoc>(v)?.build()?;
        if ctx.lattice().attributes() != self.attributes() {
            bail!("the context's attributes do not match the attributes in --params");
        }
        Ok(ctx.model())
    }
}
