//! The report envelope shared by every command, and its two renderings.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "confal-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Violation,
    Inconclusive,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::Violation => 1,
            Outcome::Inconclusive => 3,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Violation => "violation",
            Outcome::Inconclusive => "inconclusive",
        }
    }

    pub fn from_passed(passed: bool) -> Self {
        if passed {
            Outcome::Pass
        } else {
            Outcome::Violation
        }
    }
}

pub struct Report {
    pub command: &'static str,
    pub config: Value,
    pub outcome: Outcome,
    pub result: Value,
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "schema": SCHEMA,
            "command": self.command,
            "config": self.config,
            "outcome": self.outcome.label(),
            "exit_code": self.outcome.exit_code(),
            "result": self.result,
        });
        if let Some(ms) = self.elapsed_ms {
            v["elapsed_ms"] = json!(ms);
        }
        v
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("reports are plain JSON");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = String::new();
                write_text(&mut s, 0, &self.to_json());
                s
            }
        }
    }

    pub fn emit(&self, format: Format, output: Option<&Path>) -> std::io::Result<()> {
        let text = self.render(format);
        match output {
            Some(path) => std::fs::write(path, text),
            None => {
                use std::io::Write;
                std::io::stdout().lock().write_all(text.as_bytes())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        Value::Object(o) if o.is_empty() => Some("{}".into()),
        // short rows such as [reached, total] stay on one line
        Value::Array(a) if a.len() <= 4 && a.iter().all(|x| x.is_number()) => {
            Some(format!("[{}]", a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

/// Indented `key: value` outline of a JSON value.
fn write_text(out: &mut String, depth: usize, v: &Value) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => write_object(out, depth, map),
        Value::Array(items) => {
            for item in items {
                match scalar_text(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        write_text(out, depth + 1, item);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_text(other).unwrap_or_default());
        }
    }
}

fn write_object(out: &mut String, depth: usize, map: &Map<String, Value>) {
    let pad = "  ".repeat(depth);
    for (k, v) in map {
        match scalar_text(v) {
            Some(s) => {
                let _ = writeln!(out, "{pad}{k}: {s}");
            }
            None => {
                let _ = writeln!(out, "{pad}{k}:");
                write_text(out, depth + 1, v);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(elapsed_ms: Option<u128>) -> Report {
        Report {
            command: "basis",
            config: json!({"family": "rkk:2"}),
            outcome: Outcome::Pass,
            result: json!({"dimension": 2, "dims": {"3": [1, 2]}, "elements": ["a", "b"]}),
            elapsed_ms,
        }
    }

    #[test]
    fn envelope_carries_schema_and_exit_code() {
        let v = sample(None).to_json();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["exit_code"], 0);
        assert!(v.get("elapsed_ms").is_none());
        assert_eq!(sample(Some(5)).to_json()["elapsed_ms"], 5);
    }

    #[test]
    fn text_outline() {
        let text = sample(None).render(Format::Text);
        assert!(text.contains("outcome: pass\n"));
        assert!(text.contains("  dims:\n    3: [1, 2]\n"));
        assert!(text.contains("  elements:\n    - a\n    - b\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Outcome::Pass.exit_code(), 0);
        assert_eq!(Outcome::Violation.exit_code(), 1);
        assert_eq!(Outcome::Inconclusive.exit_code(), 3);
    }
}
