//! Deterministic report rendering. Repeated runs on identical inputs are
//! byte-identical except for the single labeled timing line.

use serde::Serialize;

#[derive(Serialize, Debug, Clone)]
pub struct InputRecord {
    pub name: String,
    pub sha256: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub inputs: Vec<InputRecord>,
    pub params: Vec<(String, String)>,
    pub verdict: String,
    pub lines: Vec<String>,
    pub witnesses: Vec<String>,
    pub timing_ms: u128,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            schema: 1,
            command: command.to_string(),
            inputs: Vec::new(),
            params: Vec::new(),
            verdict: "ok".into(),
            lines: Vec::new(),
            witnesses: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn input(&mut self, name: &str, sha256: &str) {
        self.inputs.push(InputRecord {
            name: name.to_string(),
            sha256: sha256.to_string(),
        });
    }

    pub fn param(&mut self, key: &str, value: impl Into<String>) {
        self.params.push((key.to_string(), value.into()));
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn witness(&mut self, s: impl Into<String>) {
        self.witnesses.push(s.into());
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("toposkit report (schema {})\n", self.schema));
        out.push_str(&format!("command: {}\n", self.command));
        for i in &self.inputs {
            out.push_str(&format!("input: {} sha256={}\n", i.name, i.sha256));
        }
        for (k, v) in &self.params {
            out.push_str(&format!("param: {k} = {v}\n"));
        }
        for l in &self.lines {
            out.push_str(&format!("  {l}\n"));
        }
        for w in &self.witnesses {
            out.push_str(&format!("witness: {w}\n"));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out.push_str(&format!("timing: {} ms\n", self.timing_ms));
        out
    }

    pub fn render_json(&self) -> String {
        // `timing_ms` is the last field, so stripping its line leaves valid,
        // byte-stable output for determinism comparisons.
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}
