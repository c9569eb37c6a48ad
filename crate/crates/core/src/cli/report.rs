//! Versioned machine-readable reports and their text and CSV renderings.

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::algebra::GaussRational;
use crate::error::Error;
use crate::indices::{format_complex, IndexNumber, IndexValue};

pub const SCHEMA: &str = "residua-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// The computation finished and the mathematical claim failed.
    Failed,
    UsageError,
    Unsupported,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Failed => "failed",
            Status::UsageError => "usage_error",
            Status::Unsupported => "unsupported",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed | Status::Error => 1,
            Status::UsageError => 2,
            Status::Unsupported => 3,
        }
    }

    pub fn of_error(e: &Error) -> Status {
        match e {
            Error::Syntax { .. } | Error::InvalidInput(_) | Error::NegativeExponent(_) | Error::ZeroDenominator(_) => {
                Status::UsageError
            }
            Error::NonIsolated(_) | Error::InfiniteMultiplicity { .. } | Error::CommonFactor { .. } => {
                Status::Unsupported
            }
            e if e.is_unsupported() => Status::Unsupported,
            _ => Status::Error,
        }
    }
}

/// Rows for CSV output.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Table {
        Table {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: vec![],
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub status: Status,
    pub results: Map<String, Value>,
    pub table: Option<Table>,
    pub error: Option<String>,
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            status: Status::Ok,
            results: Map::new(),
            table: None,
            error: None,
            timing_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), v.into());
        self
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), v.into());
        self
    }

    pub fn fail_with(&mut self, e: &Error) {
        self.status = Status::of_error(e);
        self.error = Some(e.to_string());
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("schema".into(), SCHEMA.into());
        out.insert("command".into(), self.command.clone().into());
        out.insert("inputs".into(), Value::Object(self.inputs.clone()));
        out.insert("status".into(), self.status.label().into());
        out.insert("results".into(), Value::Object(self.results.clone()));
        if let Some(t) = &self.table {
            out.insert("table".into(), json!({ "headers": t.headers, "rows": t.rows }));
        }
        if let Some(e) = &self.error {
            out.insert("error".into(), e.clone().into());
        }
        out.insert(
            "timing".into(),
            self.timing_ms.map_or(Value::Null, |ms| json!({ "wall_ms": ms })),
        );
        Value::Object(out)
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("{} [{}]\n", self.command, self.status.label());
        if let Some(e) = &self.error {
            s.push_str(&format!("error: {e}\n"));
        }
        for (k, v) in &self.results {
            s.push_str(&format!("{k}: {}\n", text_value(v)));
        }
        if let Some(t) = &self.table {
            s.push_str(&format!("{}\n", t.headers.join("\t")));
            for r in &t.rows {
                s.push_str(&format!("{}\n", r.join("\t")));
            }
        }
        s
    }

    /// The table if the command has one, otherwise `key,value` pairs.
    pub fn render_csv(&self) -> String {
        let (headers, rows) = match &self.table {
            Some(t) => (t.headers.clone(), t.rows.clone()),
            None => {
                let mut rows = vec![vec!["status".to_string(), self.status.label().to_string()]];
                if let Some(e) = &self.error {
                    rows.push(vec!["error".into(), e.clone()]);
                }
                rows.extend(self.results.iter().map(|(k, v)| vec![k.clone(), text_value(v)]));
                (vec!["key".to_string(), "value".to_string()], rows)
            }
        };
        let mut s = String::new();
        for r in std::iter::once(&headers).chain(rows.iter()) {
            let cells: Vec<String> = r.iter().map(|c| csv_cell(c)).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

pub fn exact(v: &GaussRational) -> Value {
    Value::String(v.to_string())
}

pub fn numeric(v: Complex64, residual: f64) -> Value {
    json!({ "value": format_complex(v), "numeric": true, "residual": round_residual(residual) })
}

/// Residuals rounded to three significant digits so reports stay stable.
fn round_residual(r: f64) -> Value {
    if r == 0.0 || !r.is_finite() {
        return json!(0.0);
    }
    let s = format!("{r:.2e}");
    json!(s.parse::<f64>().unwrap_or(r))
}

pub fn index(v: &IndexValue) -> Value {
    match &v.value {
        IndexNumber::Exact(q) => exact(q),
        IndexNumber::Numeric { value, residual } => numeric(*value, *residual),
    }
}

pub fn point(p: &[GaussRational]) -> Value {
    Value::Array(p.iter().map(exact).collect())
}

pub fn point_text(p: &[GaussRational]) -> String {
    let parts: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn complex_point_text(p: &[Complex64]) -> String {
    let parts: Vec<String> = p.iter().map(|c| format_complex(*c)).collect();
    format!("({})", parts.join(", "))
}
