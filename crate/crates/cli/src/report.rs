//! Run reports in text and JSON form. Rationals are always `"p/q"` strings.

use kcover::rational::to_pq;
use kcover::{EdgeSet, Rational};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// Hex SHA-256 of the normalized instance text.
pub fn digest(normalized: &str) -> String {
    Sha256::digest(normalized.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub instance: Option<String>,
    pub digest: Option<String>,
    outputs: Vec<(String, Value)>,
    pub checks: Vec<Check>,
    pub elapsed_ms: f64,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            instance: None,
            digest: None,
            outputs: Vec::new(),
            checks: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn int(&mut self, key: &str, v: usize) -> &mut Self {
        self.outputs.push((key.into(), json!(v)));
        self
    }

    pub fn rational(&mut self, key: &str, v: &Rational) -> &mut Self {
        self.outputs.push((key.into(), json!(to_pq(v))));
        self
    }

    pub fn set(&mut self, key: &str, s: &EdgeSet) -> &mut Self {
        self.outputs.push((key.into(), json!(s.ids())));
        self
    }

    pub fn nodes(&mut self, key: &str, nodes: &[usize]) -> &mut Self {
        self.outputs.push((key.into(), json!(nodes)));
        self
    }

    pub fn text(&mut self, key: &str, v: impl Into<String>) -> &mut Self {
        self.outputs.push((key.into(), Value::String(v.into())));
        self
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) -> &mut Self {
        self.checks.push(Check {
            name: name.into(),
            ok,
            detail: detail.into(),
        });
        self
    }

    pub fn output(&self, key: &str) -> Option<&Value> {
        self.outputs.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn to_json(&self) -> Value {
        let outputs: Map<String, Value> = self.outputs.iter().cloned().collect();
        json!({
            "command": self.command,
            "instance": self.instance,
            "digest": self.digest,
            "outputs": outputs,
            "checks": self.checks,
            "ok": self.ok(),
            "elapsed_ms": self.elapsed_ms,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = self.command.clone();
        if let Some(inst) = &self.instance {
            out.push_str(&format!(" {inst}"));
        }
        out.push('\n');
        let width = self.outputs.iter().map(|(k, _)| k.len()).max().unwrap_or(0).max(6);
        if let Some(d) = &self.digest {
            out.push_str(&format!("  {:<width$} {}\n", "digest", &d[..16]));
        }
        for (k, v) in &self.outputs {
            let shown = match v {
                Value::String(s) => s.clone(),
                Value::Array(items) => items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" "),
                other => other.to_string(),
            };
            out.push_str(&format!("  {k:<width$} {shown}\n"));
        }
        for c in &self.checks {
            let verdict = if c.ok { "ok" } else { "FAILED" };
            out.push_str(&format!("  check {} {verdict}: {}\n", c.name, c.detail));
        }
        out.push_str(&format!("  {:<width$} {:.1} ms\n", "time", self.elapsed_ms));
        out
    }
}
