//! Machine-readable command output shared by the CLI and the verifier.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// One command result: the command name, its parameters, the working
/// precision and the computed value(s).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputRecord {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub precision: u32,
    pub value: Value,
}

impl OutputRecord {
    pub fn new(command: impl Into<String>, precision: u32) -> Self {
        Self {
            command: command.into(),
            params: BTreeMap::new(),
            precision,
            value: Value::Null,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn with_value(mut self, value: impl Into<Value>) -> Self {
        self.value = value.into();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record values are plain JSON")
    }
}

/// `{"re": …, "im": …}`
pub fn complex_json(z: Complex64) -> Value {
    json!({ "re": finite_or_null(z.re), "im": finite_or_null(z.im) })
}

/// JSON number, or null for NaN and infinities.
pub fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

/// A rectangular table with a mandatory header row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    /// Panics on an empty header; every table names its columns.
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        let header: Vec<String> = header.into_iter().map(Into::into).collect();
        assert!(!header.is_empty(), "table header must not be empty");
        Self {
            header,
            rows: Vec::new(),
        }
    }

    /// Panics when the row width differs from the header.
    pub fn push<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(Into::into).collect();
        assert_eq!(row.len(), self.header.len(), "row width must match header");
        self.rows.push(row);
    }

    pub fn header(&self) -> &[String] {
        &self.header
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }

    /// Rows as JSON objects keyed by column name.
    pub fn to_json_rows(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let obj: serde_json::Map<String, Value> = self
                        .header
                        .iter()
                        .zip(r)
                        .map(|(h, v)| (h.clone(), parse_cell(v)))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

fn parse_cell(v: &str) -> Value {
    if let Ok(i) = v.parse::<i64>() {
        return json!(i);
    }
    match v.parse::<f64>() {
        Ok(f) if f.is_finite() && !v.contains('/') => json!(f),
        _ => Value::String(v.to_string()),
    }
}
