use std::path::Path;

use anyhow::{bail, Context, Result};
use galois_closure::inference::{
    proves, syntactic_closure, verify_proof, EffectiveLattice, FiniteSystem, InferenceError, Justification,
    Proof, ProofOutcome, Theory,
};
use galois_closure::io::{json_arg, read_json, ImplicationDoc, ProofDoc, Setting, TheoryDoc};
use galois_closure::oracle::{bfs_closure, direct_semantic_closure};
use galois_closure::semantics::{entails, semantic_closure, Model};
use galois_closure::temporal::{temporal_closure, TemporalClosure};
use serde_json::{json, Value};

use crate::front::{load, load_setting, Front};
use crate::report::{Report, CHECKED_FALSE, INCONCLUSIVE, SUCCESS};

pub struct ClosureArgs<'a> {
    pub params: &'a str,
    pub theory: Option<&'a str>,
    pub element: &'a str,
    pub model: Option<&'a str>,
    pub semantic: bool,
    pub budget: usize,
    pub oracle: bool,
}

fn theory_doc(path: Option<&str>) -> Result<TheoryDoc> {
    match path {
        Some(p) => load(p, "--theory"),
        None => Ok(TheoryDoc::default()),
    }
}

fn model<F: Front>(l: &F, path: Option<&str>) -> Result<Model<F::Elem>> {
    let Some(path) = path else {
        bail!("--model is required here");
    };
    let v = read_json(path).with_context(|| format!("--model {path}"))?;
    l.model_from(v).with_context(|| format!("--model {path}"))
}

fn implication_doc(arg: &str) -> Result<ImplicationDoc> {
    let v = json_arg(arg).context("--implication")?;
    serde_json::from_value(v).context("--implication")
}

fn print_element<F: Front>(l: &F, e: &F::Elem, extra: Value) -> Report {
    let mut report = Report::new(SUCCESS, json!({"closure": l.literal(e), "detail": extra}));
    report.line(l.describe(e));
    report
}

pub fn closure(args: &ClosureArgs<'_>) -> Result<Report> {
    let element = json_arg(args.element).context("--element")?;
    let doc = theory_doc(args.theory)?;
    if args.semantic && args.theory.is_some() {
        bail!("--semantic closes against --model; drop --theory");
    }
    match load_setting(args.params)? {
        Setting::Finite(s) => {
            let sys = FiniteSystem::new(&s.lattice, &s.params)?;
            let a = sys.parse(&element).context("--element")?;
            let (value, check) = if args.semantic {
                let m = model(&sys, args.model)?;
                let v = semantic_closure(&sys, &m, &a)?;
                (v, args.oracle.then(|| direct_semantic_closure(&sys, &m, a)))
            } else {
                let theory = sys.theory(&doc)?;
                let sat = match syntactic_closure(&sys, &theory, &a, args.budget) {
                    Ok(sat) => sat,
                    Err(InferenceError::BudgetExceeded { partial, firings }) => {
                        return Ok(budget_report(&sys, &partial, firings))
                    }
                    Err(e) => return Err(e.into()),
                };
                (
                    sat.value,
                    args.oracle.then(|| bfs_closure(&sys, &theory).apply(a)),
                )
            };
            match check {
                Some(o) if o != value => {
                    let mut report = Report::new(
                        CHECKED_FALSE,
                        json!({"closure": sys.literal(&value), "oracle": sys.literal(&o)}),
                    );
                    report.line(format!(
                        "disagreement: engine gives {}, oracle gives {}",
                        sys.describe(&value),
                        sys.describe(&o)
                    ));
                    Ok(report)
                }
                _ => Ok(print_element(
                    &sys,
                    &value,
                    json!({"oracle_checked": check.is_some()}),
                )),
            }
        }
        Setting::Temporal(t) => {
            if args.oracle {
                bail!("--oracle needs a finite lattice");
            }
            let a = t.parse(&element).context("--element")?;
            if args.semantic {
                let m = model(&t, args.model)?;
                let v = semantic_closure(&t, &m, &a)?;
                return Ok(print_element(&t, &v, Value::Null));
            }
            let theory = t.theory(&doc)?;
            match temporal_closure(&t, &theory, &a, args.budget) {
                Ok(TemporalClosure::Bounded(sat)) => {
                    Ok(print_element(&t, &sat.value, json!({"firings": sat.firings})))
                }
                Ok(TemporalClosure::Unbounded { reason }) => {
                    let mut report = Report::new(INCONCLUSIVE, json!({"unbounded": reason}));
                    report.line(format!("unbounded: {reason}"));
                    Ok(report)
                }
                Err(galois_closure::temporal::TemporalError::BudgetExceeded { firings }) => {
                    let mut report = Report::new(INCONCLUSIVE, json!({"budget_exceeded": firings}));
                    report.line(format!("budget exhausted after {firings} firings"));
                    Ok(report)
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn budget_report<F: Front>(l: &F, partial: &F::Elem, firings: usize) -> Report {
    let mut report = Report::new(
        INCONCLUSIVE,
        json!({"budget_exceeded": firings, "partial": l.literal(partial)}),
    );
    report.line(format!(
        "budget exhausted after {firings} firings; value so far {}",
        l.describe(partial)
    ));
    report
}

pub fn prove(
    params: &str,
    theory: &str,
    implication: &str,
    emit: Option<&Path>,
    budget: usize,
) -> Result<Report> {
    let doc = load::<TheoryDoc>(theory, "--theory")?;
    let imp = implication_doc(implication)?;
    match load_setting(params)? {
        Setting::Finite(s) => {
            let sys = FiniteSystem::new(&s.lattice, &s.params)?;
            prove_in(&sys, &doc, &imp, emit, budget)
        }
        Setting::Temporal(t) => prove_in(&t, &doc, &imp, emit, budget),
    }
}

fn prove_in<F: Front>(
    l: &F,
    doc: &TheoryDoc,
    imp: &ImplicationDoc,
    emit: Option<&Path>,
    budget: usize,
) -> Result<Report> {
    let theory = l.theory(doc).context("--theory")?;
    let imp = l.implication(imp).context("--implication")?;
    let goal = format!("{} ⇒ {}", l.describe(&imp.lhs), l.describe(&imp.rhs));
    match proves(l, &theory, &imp, budget).map_err(|e| anyhow::anyhow!("{e}"))? {
        ProofOutcome::Proved(proof) => {
            let doc = ProofDoc::from_proof(&proof, |e| l.literal(e), |m| l.mu_literal(m));
            if let Some(path) = emit {
                let text = serde_json::to_string_pretty(&doc)?;
                std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
            }
            let mut report = Report::new(
                SUCCESS,
                json!({"provable": true, "proof": serde_json::to_value(&doc)?}),
            );
            report.line(format!("provable: {goal} ({})", steps(proof.len())));
            show_proof(l, &proof, &mut report);
            Ok(report)
        }
        ProofOutcome::NotProvable => {
            let mut report = Report::new(CHECKED_FALSE, json!({"provable": false}));
            report.line(format!("not provable: {goal}"));
            Ok(report)
        }
        ProofOutcome::Inconclusive { partial, firings } => Ok(budget_report(l, &partial, firings)),
    }
}

fn show_proof<F: Front>(l: &F, proof: &Proof<F::Elem, F::Mu>, report: &mut Report) {
    for (i, step) in proof.steps.iter().enumerate() {
        let why = match &step.justification {
            Justification::Hypothesis(k) => format!("hypothesis {k}"),
            Justification::Axiom => "axiom".to_owned(),
            Justification::PseudoTransitivity { minor, major, side } => {
                format!(
                    "pseudo-transitivity from {minor}, {major} with {}",
                    l.describe(side)
                )
            }
            Justification::Adjoint { step, connection } => {
                format!("{} applied to {step}", l.describe_mu(connection))
            }
        };
        report.line(format!(
            "  {i}. {} ⇒ {}  [{why}]",
            l.describe(&step.formula.lhs),
            l.describe(&step.formula.rhs)
        ));
    }
}

pub fn entails_cmd(params: &str, model_path: &str, implication: &str) -> Result<Report> {
    let imp = implication_doc(implication)?;
    match load_setting(params)? {
        Setting::Finite(s) => {
            let sys = FiniteSystem::new(&s.lattice, &s.params)?;
            entails_in(&sys, model_path, &imp)
        }
        Setting::Temporal(t) => entails_in(&t, model_path, &imp),
    }
}

fn entails_in<F: Front>(l: &F, model_path: &str, imp: &ImplicationDoc) -> Result<Report> {
    let m = model(l, Some(model_path))?;
    let imp = l.implication(imp).context("--implication")?;
    let verdict = entails(l, &m, &imp)?;
    let goal = format!("{} ⇒ {}", l.describe(&imp.lhs), l.describe(&imp.rhs));
    let mut report = Report::new(
        if verdict { SUCCESS } else { CHECKED_FALSE },
        json!({"entailed": verdict}),
    );
    report.line(format!(
        "{}: {goal}",
        if verdict { "entailed" } else { "not entailed" }
    ));
    Ok(report)
}

pub fn verify(params: &str, theory: &str, proof: &str) -> Result<Report> {
    let doc = load::<TheoryDoc>(theory, "--theory")?;
    let proof = load::<ProofDoc>(proof, "--proof")?;
    match load_setting(params)? {
        Setting::Finite(s) => {
            let sys = FiniteSystem::new(&s.lattice, &s.params)?;
            verify_in(&sys, &doc, &proof)
        }
        Setting::Temporal(t) => verify_in(&t, &doc, &proof),
    }
}

fn verify_in<F: Front>(l: &F, doc: &TheoryDoc, proof: &ProofDoc) -> Result<Report> {
    let theory: Theory<F::Elem> = l.theory(doc).context("--theory")?;
    let proof = proof
        .to_proof(|v| l.parse(v).map_err(io_err), |v| l.parse_mu(v).map_err(io_err))
        .context("--proof")?;
    match verify_proof(l, &theory, &proof) {
        Ok(()) => {
            let concl = proof
                .conclusion()
                .map(|c| (l.describe(&c.lhs), l.describe(&c.rhs)));
            let mut report = Report::new(SUCCESS, json!({"valid": true, "steps": proof.len()}));
            match concl {
                Some((a, b)) => report.line(format!("valid proof of {a} ⇒ {b} ({})", steps(proof.len()))),
                None => report.line("valid empty proof"),
            }
            Ok(report)
        }
        Err(e) => {
            let mut report = Report::new(
                CHECKED_FALSE,
                json!({"valid": false, "step": e.index, "reason": e.reason}),
            );
            report.line(format!("invalid proof: {e}"));
            Ok(report)
        }
    }
}

fn io_err(e: anyhow::Error) -> galois_closure::io::IoError {
    galois_closure::io::IoError::Format(format!("{e:#}"))
}

fn steps(n: usize) -> String {
    if n == 1 {
        "1 step".to_owned()
    } else {
        format!("{n} steps")
    }
}
