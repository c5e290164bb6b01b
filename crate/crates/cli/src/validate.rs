use anyhow::{bail, Context, Result};
use galois_closure::connection::{join_preservation_witness, validate_connection, Connection};
use galois_closure::io::{
    read_json, ConnectionDoc, FilterDoc, FiniteSetting, HedgeDoc, IoError, LatticeDoc, ParamsDoc,
    ResiduatedDoc, Setting,
};
use galois_closure::lattice::{FiniteLattice, LatticeError};
use galois_closure::residuated::{validate_filter, validate_hedge, ResiduatedLattice};
use serde_json::{json, Value};

use crate::front::{finite, load_setting};
use crate::report::{Matrix, Report, CHECKED_FALSE, SUCCESS};

/// Validates whatever `path` holds, recognized by its keys.
pub fn run(path: &str, params: Option<&str>) -> Result<Report> {
    let doc = read_json(path).with_context(|| path.to_owned())?;
    let has = |k: &str| doc.get(k).is_some();
    let context = || -> Result<Box<FiniteSetting>> {
        let Some(p) = params else {
            bail!("validating {path} needs --params for the lattice it lives on");
        };
        finite(load_setting(p)?, "validate")
    };

    let (kind, matrix) = if has("otimes") {
        let r = parse::<ResiduatedDoc>(doc, path)?.build()?;
        ("residuated lattice", residuated(&r))
    } else if has("elements") {
        let doc = parse::<LatticeDoc>(doc, path)?;
        ("lattice", lattice(&doc)?)
    } else if has("star") {
        let setting = context()?;
        let Some(r) = &setting.algebra else {
            bail!("a hedge needs a residuated lattice in --params");
        };
        let h = parse::<HedgeDoc>(doc, path)?.build(r)?;
        let mut m = Matrix::default();
        hedge(&mut m, r, &h);
        ("hedge", m)
    } else if has("members") {
        let setting = context()?;
        let degrees = degrees(&setting);
        let f = parse::<FilterDoc>(doc, path)?.build(degrees)?;
        let mut m = Matrix::default();
        filter(&mut m, degrees, &f);
        ("filter", m)
    } else if has("lower") {
        let setting = context()?;
        let doc = parse::<ConnectionDoc>(doc, path)?;
        ("connection", connection(&setting.lattice, &doc)?)
    } else {
        let setting = parse::<ParamsDoc>(doc, path)?.build()?;
        ("parameters", parameters(setting))
    };

    let ok = matrix.all_pass();
    let mut report = Report::new(
        if ok { SUCCESS } else { CHECKED_FALSE },
        json!({"file": path, "kind": kind, "valid": ok, "checks": matrix.to_json()}),
    );
    report.line(format!(
        "{path}: {kind}, {}",
        if ok { "valid" } else { "invalid" }
    ));
    matrix.render(&mut report);
    Ok(report)
}

fn parse<T: serde::de::DeserializeOwned>(v: Value, path: &str) -> Result<T> {
    serde_json::from_value(v).with_context(|| path.to_owned())
}

fn degrees(s: &FiniteSetting) -> &FiniteLattice {
    match &s.algebra {
        Some(r) => r.lattice(),
        None => &s.lattice,
    }
}

fn lattice(doc: &LatticeDoc) -> Result<Matrix> {
    let mut m = Matrix::default();
    match doc.build() {
        Ok(l) => m.row(format!("lattice order on {} elements", l.len()), true, None),
        Err(IoError::Lattice(
            e @ (LatticeError::NotAntisymmetric(..) | LatticeError::NotALattice { .. }),
        )) => m.row("lattice order", false, Some(e.to_string())),
        Err(e) => return Err(e.into()),
    }
    Ok(m)
}

fn residuated(r: &ResiduatedLattice) -> Matrix {
    let l = r.lattice();
    let n = |e: usize| l.name(e);
    let report = r.validate();
    let mut m = Matrix::default();
    m.check("associativity", &report.associativity, |&(a, b, c)| {
        format!("({0}⊗{1})⊗{2} ≠ {0}⊗({1}⊗{2}) at {0},{1},{2}", n(a), n(b), n(c))
    });
    m.check("commutativity", &report.commutativity, |&(a, b)| {
        format!("{0}⊗{1} ≠ {1}⊗{0}", n(a), n(b))
    });
    m.check("neutrality", &report.neutrality, |&a| {
        format!("{}⊗1 ≠ {}", n(a), n(a))
    });
    m.check("adjointness", &report.adjointness, |&(a, b, c)| {
        let (ab, ac) = (r.otimes(a, b), r.residuum(a, c));
        format!(
            "{}⊗{} = {} {} {} but {} {} {}→{} = {}",
            n(a),
            n(b),
            n(ab),
            if l.leq(ab, c) { "≤" } else { "≰" },
            n(c),
            n(b),
            if l.leq(b, ac) { "≤" } else { "≰" },
            n(a),
            n(c),
            n(ac)
        )
    });
    m
}

fn hedge(m: &mut Matrix, r: &ResiduatedLattice, h: &galois_closure::residuated::Hedge) {
    let l = r.lattice();
    let n = |e: usize| l.name(e);
    let report = validate_hedge(r, h, false);
    m.row("1* = 1", report.top_fixed, None);
    m.check("a* ≤ a", &report.subdiagonal, |&a| {
        format!("{}* = {}", n(a), n(h.apply(a)))
    });
    m.check("(a→b)* ≤ a*→b*", &report.mon_star, |&(a, b)| {
        format!("a = {}, b = {}", n(a), n(b))
    });
}

fn filter(m: &mut Matrix, l: &FiniteLattice, f: &galois_closure::residuated::LeqFilter) {
    let report = validate_filter(l, f);
    m.row("non-empty", !report.empty, None);
    m.check("upward closed", &report.not_upward, |&(a, b)| {
        format!(
            "{} ∈ K, {} ≤ {}, {} ∉ K",
            l.name(a),
            l.name(a),
            l.name(b),
            l.name(b)
        )
    });
}

fn connection(l: &FiniteLattice, doc: &ConnectionDoc) -> Result<Matrix> {
    let mut m = Matrix::default();
    let name = doc.label.as_deref().unwrap_or("connection");
    match doc.tables(l)? {
        (lower, Some(upper)) => adjointness(&mut m, l, name, &Connection::new(lower, upper)),
        (lower, None) => {
            let witness = join_preservation_witness(l, &lower);
            let show = |w: &Vec<usize>| {
                let names: Vec<String> = w.iter().map(|&e| l.name(e)).collect();
                format!("fails to preserve the join of [{}]", names.join(", "))
            };
            m.row(
                format!("{name}: lower map preserves joins"),
                witness.is_none(),
                witness.as_ref().map(show),
            );
        }
    }
    Ok(m)
}

fn adjointness(m: &mut Matrix, l: &FiniteLattice, name: &str, c: &Connection) {
    match validate_connection(l, c) {
        Ok(report) => m.check(
            &format!("{name}: μa ≤ b iff a ≤ νb"),
            &report.violations,
            |&(a, b)| format!("a = {}, b = {}", l.name(a), l.name(b)),
        ),
        Err(e) => m.row(format!("{name}: tables"), false, Some(e.to_string())),
    }
}

fn parameters(setting: Setting) -> Matrix {
    let mut m = Matrix::default();
    let s = match setting {
        Setting::Temporal(t) => {
            m.row(
                format!("time-stamped sets over {} attributes", t.attributes().len()),
                true,
                None,
            );
            return m;
        }
        Setting::Finite(s) => s,
    };
    if let Some(r) = &s.algebra {
        m.extend("algebra", residuated(r));
        if let Some(h) = &s.hedge {
            hedge(&mut m, r, h);
        }
    }
    if let Some(f) = &s.filter {
        filter(&mut m, degrees(&s), f);
    }
    for i in 0..s.params.len() {
        adjointness(&mut m, &s.lattice, s.params.label(i), s.params.get(i));
    }
    m
}
