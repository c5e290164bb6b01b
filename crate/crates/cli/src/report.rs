use serde_json::{json, Value};

pub const SUCCESS: u8 = 0;
pub const CHECKED_FALSE: u8 = 1;
pub const INPUT_ERROR: u8 = 2;
pub const INCONCLUSIVE: u8 = 3;

/// What a command prints, in both output styles, and how it exits.
#[derive(Debug)]
pub struct Report {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(code: u8, json: Value) -> Self {
        Report {
            code,
            text: String::new(),
            json,
        }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            println!(
                "{}",
                serde_json::to_string_pretty(&self.json).expect("values serialize")
            );
        } else {
            print!("{}", self.text);
        }
    }
}

/// A pass/fail table with at most one witness per row.
#[derive(Debug, Default)]
pub struct Matrix {
    rows: Vec<(String, bool, Option<String>)>,
}

impl Matrix {
    pub fn row(&mut self, name: impl Into<String>, ok: bool, witness: Option<String>) {
        self.rows.push((name.into(), ok, witness));
    }

    /// Adds a row that fails with the first of `violations`, if any.
    pub fn check<T>(&mut self, name: &str, violations: &[T], show: impl Fn(&T) -> String) {
        let witness = violations
            .first()
            .map(|v| format!("{} ({} in total)", show(v), violations.len()));
        self.row(name, violations.is_empty(), witness);
    }

    pub fn extend(&mut self, prefix: &str, other: Matrix) {
        for (name, ok, witness) in other.rows {
            self.row(format!("{prefix}: {name}"), ok, witness);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.1)
    }

    pub fn render(&self, report: &mut Report) {
        let width = self.rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
        for (name, ok, witness) in &self.rows {
            let pad = width - name.chars().count();
            let verdict = if *ok { "pass" } else { "FAIL" };
            let mut line = format!("{name}{}  {verdict}", " ".repeat(pad));
            if let Some(w) = witness {
                line.push_str("  ");
                line.push_str(w);
            }
            report.line(line);
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|(name, ok, witness)| json!({"check": name, "pass": ok, "witness": witness}))
                .collect(),
        )
    }
}
