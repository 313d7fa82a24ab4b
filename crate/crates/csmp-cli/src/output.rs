//! Result serialization. Every file starts from the same parameter list,
//! rendered as `#` comment lines in CSV and as a `params` object in JSON,
//! so a reader can always reconstruct the run that produced it. Floats are
//! written with 9 significant digits in both formats.

use crate::io::CliError;
use serde_json::{json, Value};
use std::path::Path;

pub fn float9(v: f64) -> String {
    format!("{v:.8e}")
}

/// Rounds to the serialized precision so JSON and CSV agree digit for
/// digit.
pub fn sig9(v: f64) -> f64 {
    float9(v).parse().unwrap()
}

/// Ordered parameter list describing one run.
#[derive(Clone)]
pub struct Params {
    pairs: Vec<(&'static str, Value)>,
}

impl Params {
    pub fn new(command: &'static str) -> Self {
        Params { pairs: vec![("command", Value::from(command))] }
    }

    pub fn push(&mut self, key: &'static str, value: impl Into<Value>) -> &mut Self {
        self.pairs.push((key, value.into()));
        self
    }

    pub fn has(&self, key: &str) -> bool {
        self.pairs.iter().any(|(k, _)| *k == key)
    }

    fn comment_lines(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.pairs {
            out.push_str(&format!("# {key}: {}\n", comment_text(value)));
        }
        out
    }

    fn object(&self) -> Value {
        let mut map = serde_json::Map::new();
        for (key, value) in &self.pairs {
            map.insert((*key).into(), value.clone());
        }
        Value::Object(map)
    }
}

fn comment_text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            items.iter().map(comment_text).collect::<Vec<_>>().join(",")
        }
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

/// CSV document: parameter comments, one column-name line, data rows.
pub fn csv_doc<I: IntoIterator<Item = String>>(params: &Params, columns: &str, rows: I) -> String {
    let mut out = params.comment_lines();
    out.push_str(columns);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

/// JSON document: `command` and `params` fields plus the payload fields.
pub fn json_doc(params: &Params, payload: Vec<(&'static str, Value)>) -> String {
    let mut map = serde_json::Map::new();
    map.insert("params".into(), params.object());
    for (key, value) in payload {
        map.insert(key.into(), value);
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(map)).unwrap();
    text.push('\n');
    text
}

pub fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

/// Sparse (q, strength) rows sorted by q.
pub fn strength_rows<I: IntoIterator<Item = (usize, f64)>>(entries: I) -> Vec<String> {
    entries.into_iter().map(|(q, s)| format!("{q},{}", float9(s))).collect()
}

pub fn strength_values<I: IntoIterator<Item = (usize, f64)>>(entries: I) -> Value {
    Value::Array(
        entries
            .into_iter()
            .map(|(q, s)| json!({ "q": q, "strength": sig9(s) }))
            .collect(),
    )
}

/// One sample per line.
pub fn sample_rows(samples: &[f64]) -> Vec<String> {
    samples.iter().map(|&v| float9(v)).collect()
}

pub fn sample_values(samples: &[f64]) -> Value {
    Value::Array(samples.iter().map(|&v| Value::from(sig9(v))).collect())
}
