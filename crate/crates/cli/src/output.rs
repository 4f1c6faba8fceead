use std::fmt::Display;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

pub const FORMAT_VERSION: u32 = 1;

/// What a command produced: a JSON result and, for tables and matrices, a CSV rendering.
#[derive(Debug, Clone)]
pub struct Report {
    pub result: Value,
    pub csv: Option<String>,
    /// Nondeterministic details such as cache hits, dropped under `--stable`.
    pub meta: Value,
}

impl Report {
    pub fn json(result: Value) -> Report {
        Report { result, csv: None, meta: json!({}) }
    }

    pub fn with_csv(mut self, csv: String) -> Report {
        self.csv = Some(csv);
        self
    }

    pub fn with_meta(mut self, key: &str, value: Value) -> Report {
        self.meta[key] = value;
        self
    }
}

pub fn envelope(command: &str, input: Value, report: &Report, elapsed_ms: Option<f64>) -> Value {
    let mut out = json!({
        "format_version": FORMAT_VERSION,
        "command": command,
        "input": input,
        "result": report.result,
    });
    if let Some(ms) = elapsed_ms {
        let mut meta = report.meta.clone();
        meta["elapsed_ms"] = json!(ms);
        out["meta"] = meta;
    }
    out
}

pub fn display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}
