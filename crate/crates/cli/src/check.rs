use anyhow::{bail, Result};
use galois_closure::closure::{
    check_closure_system, check_equiv_characterizations, check_lk_closure, check_lstar_closure,
    check_s_closure, MeetWitness,
};
use galois_closure::io::{render_finite, OperatorDoc, SystemDoc};
use serde_json::{json, Value};

use crate::front::{finite, load, load_setting};
use crate::report::{Matrix, Report, CHECKED_FALSE, INCONCLUSIVE, SUCCESS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extra {
    None,
    Hedge,
    Filter,
}

pub fn operator(params: &str, operator: &str, extra: Extra) -> Result<Report> {
    let s = finite(load_setting(params)?, "check-operator")?;
    let l = &s.lattice;
    let c = load::<OperatorDoc>(operator, "--operator")?.build(l)?;
    let n = |e: usize| l.name(e);
    let label = |i: usize| s.params.label(i).to_owned();

    let mut m = Matrix::default();
    let sc = check_s_closure(l, &c, &s.params)?;
    m.check("S:ext", &sc.ext, |&a| {
        format!("{} ⊈ C({}) = {}", n(a), n(a), n(c.apply(a)))
    });
    m.check("S:mon", &sc.mon, |&(a, b)| {
        format!("{} ≤ {} but C({}) ≰ C({})", n(a), n(b), n(a), n(b))
    });
    m.check("S:idm", &sc.idm, |&(i, a)| {
        let v = s.params.get(i).upper(c.apply(a));
        format!(
            "ν = {}, a = {}: C({}) = {} ≰ {}",
            label(i),
            n(a),
            n(v),
            n(c.apply(v)),
            n(v)
        )
    });

    let eq = check_equiv_characterizations(l, &c, &s.params)?;
    m.row("S:ord_idm", eq.ord_idm, None);
    m.row("S:mon_alt", eq.mon_alt, None);
    for (name, ok) in eq.rows() {
        m.row(name, ok, None);
    }
    m.row("characterizations agree", eq.agree(), None);

    match extra {
        Extra::None => {}
        Extra::Hedge => {
            let (Some(space), Some(h)) = (&s.space, &s.hedge) else {
                bail!("--hedge needs `universe` and `hedge` in --params");
            };
            let degrees = space.algebra().lattice();
            let shifted = |a: usize, e: usize| {
                let v = space.shift(h.apply(a), c.apply(e));
                format!(
                    "C({}) = {} ⊈ {} = {}*→C({})",
                    n(v),
                    n(c.apply(v)),
                    n(v),
                    degrees.name(a),
                    n(e)
                )
            };
            let r = check_lstar_closure(space, &c, h)?;
            m.check("cl:ext", &r.ext, |&a| n(a));
            m.check("cl:*mon", &r.star_mon, |&(a, b)| {
                format!("A = {}, B = {}", n(a), n(b))
            });
            m.check("cl:idm", &r.idm, |&a| n(a));
            m.check("cl:*shf", &r.star_shf, |&(a, e)| shifted(a, e));
        }
        Extra::Filter => {
            let (Some(space), Some(f)) = (&s.space, &s.filter) else {
                bail!("--filter needs `universe` and `filter` in --params");
            };
            let degrees = space.algebra().lattice();
            let r = check_lk_closure(space, &c, f)?;
            m.check("cl:ext", &r.ext, |&a| n(a));
            m.check("cl:K-mon", &r.k_mon, |&(a, b)| {
                format!("A = {}, B = {}", n(a), n(b))
            });
            m.check("cl:idm", &r.idm, |&a| n(a));
            m.check("cl:K-shf", &r.k_shf, |&(a, e)| {
                let v = space.shift(a, c.apply(e));
                format!(
                    "C({}) = {} ⊈ {}→C({})",
                    n(v),
                    n(c.apply(v)),
                    degrees.name(a),
                    n(e)
                )
            });
        }
    }

    let ok = m.all_pass();
    let table: Value = OperatorDoc::from_operator(l, &c).table;
    let mut report = Report::new(
        if ok { SUCCESS } else { CHECKED_FALSE },
        json!({"operator": table, "checks": m.to_json(), "pass": ok}),
    );
    m.render(&mut report);
    Ok(report)
}

pub fn system(params: &str, system: &str) -> Result<Report> {
    let s = finite(load_setting(params)?, "check-system")?;
    let l = &s.lattice;
    let sys = load::<SystemDoc>(system, "--system")?.build(l)?;
    let r = check_closure_system(l, &sys, &s.params)?;
    let n = |e: usize| l.name(e);

    let mut m = Matrix::default();
    let meet = r.meet_closed.as_ref().map(|w| match w {
        MeetWitness::MissingTop => format!("top {} is missing", n(l.top())),
        MeetWitness::Pair(a, b) => format!("{} ∧ {} = {} is missing", n(*a), n(*b), n(l.meet(*a, *b))),
    });
    m.row("closed under meets", meet.is_none(), meet);
    m.check("ν-stable", &r.nu_stable, |&(i, b)| {
        let v = s.params.get(i).upper(b);
        format!("ν = {}: {} is in, {} is not", s.params.label(i), n(b), n(v))
    });
    m.check("single condition", &r.single_condition, |&a| n(a));

    let ok = r.is_s_closure_system();
    let mut report = Report::new(
        if ok { SUCCESS } else { CHECKED_FALSE },
        json!({"checks": m.to_json(), "pass": ok, "agree": r.agree()}),
    );
    m.render(&mut report);
    Ok(report)
}

pub fn monoid(params: &str, limit: usize) -> Result<Report> {
    let s = finite(load_setting(params)?, "monoid")?;
    let l = &s.lattice;
    let given = s.params.len();
    let closed = s.params.is_closed();
    let generated = match s.params.generate_monoid(limit) {
        Ok(g) => g,
        Err(e) => {
            let mut report = Report::new(
                INCONCLUSIVE,
                json!({"given": given, "closed": closed, "error": e.to_string()}),
            );
            report.line(format!("{e}"));
            return Ok(report);
        }
    };

    let mut report = Report::new(SUCCESS, Value::Null);
    report.line(format!(
        "{given} given, {}closed under composition; generated monoid has {} members",
        if closed { "" } else { "not " },
        generated.len()
    ));
    let mut members = Vec::new();
    for i in 0..generated.len() {
        let c = generated.get(i);
        let label = generated.label(i);
        let cells = |f: &dyn Fn(usize) -> usize| -> Vec<String> {
            l.elements()
                .map(|a| format!("{}↦{}", l.name(a), l.name(f(a))))
                .collect()
        };
        let tag = if i < given { "" } else { "  (new)" };
        report.line(format!("{label}{tag}"));
        report.line(format!("  μ: {}", cells(&|a| c.lower(a)).join(" ")));
        report.line(format!("  ν: {}", cells(&|a| c.upper(a)).join(" ")));
        let table = |f: &dyn Fn(usize) -> usize| -> Value {
            Value::Object(
                l.elements()
                    .map(|a| (l.name(a), render_finite(l, f(a))))
                    .collect(),
            )
        };
        members.push(json!({
            "label": label,
            "given": i < given,
            "lower": table(&|a| c.lower(a)),
            "upper": table(&|a| c.upper(a)),
        }));
    }
    report.json = json!({"given": given, "closed": closed, "size": generated.len(), "members": members});
    Ok(report)
}
