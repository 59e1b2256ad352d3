//! Command reports, rendered as text or as JSON.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

use cocart::characterize::Verdict;

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Option<String>,
    pub verdicts: Vec<Verdict>,
    /// Set by `check --condition all`.
    pub agreement: Option<bool>,
    /// Whether every witness re-checked under the oracles.
    pub witnesses_replayed: Option<bool>,
    /// Human-readable narrative, one step per line.
    pub trace: Vec<String>,
    pub details: Map<String, Value>,
    pub timing_ms: f64,
    pub limit: u64,
    pub limits_hit: Vec<String>,
}

impl Report {
    pub fn new(command: &str, input: Option<&str>, limit: u64) -> Self {
        Report {
            command: command.into(),
            input: input.map(String::from),
            limit,
            ..Report::default()
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.trace.push(s.into());
    }

    pub fn detail(&mut self, key: &str, v: impl Into<Value>) {
        self.details.insert(key.into(), v.into());
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match &self.input {
            Some(input) => {
                let _ = writeln!(out, "{} {}", self.command, input);
            }
            None => {
                let _ = writeln!(out, "{}", self.command);
            }
        }
        for v in &self.verdicts {
            let _ = writeln!(out, "  {v}");
        }
        if let Some(a) = self.agreement {
            let _ = writeln!(out, "  agreement: {}", if a { "yes" } else { "NO (toolkit bug)" });
        }
        if let Some(r) = self.witnesses_replayed {
            let _ = writeln!(
                out,
                "  witnesses replayed: {}",
                if r { "yes" } else { "NO (toolkit bug)" }
            );
        }
        for l in &self.trace {
            let _ = writeln!(out, "  {l}");
        }
        for l in &self.limits_hit {
            let _ = writeln!(out, "  limit hit: {l}");
        }
        let _ = writeln!(out, "  time: {:.1} ms", self.timing_ms);
        out
    }

    pub fn render_machine(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
