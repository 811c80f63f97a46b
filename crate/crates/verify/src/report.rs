//! Machine-readable results.

use serde::Serialize;
use serde_json::Value;

/// Result of one named check. Field order is the JSON key order.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    /// `exact`, `mod-p`, or `exact+mod-p`.
    pub mode: String,
    pub probabilistic: bool,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModeInfo {
    pub kind: String,
    pub primes: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub scenario: String,
    pub mode: ModeInfo,
    pub pass: bool,
    pub warnings: Vec<String>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn summary_lines(&self) -> Vec<String> {
        let mut out = vec![format!(
            "scenario {} [{}{}]: {}",
            self.scenario,
            self.mode.kind,
            if self.mode.primes.is_empty() {
                String::new()
            } else {
                format!(" {:?}", self.mode.primes)
            },
            if self.pass { "PASS" } else { "FAIL" }
        )];
        for c in &self.checks {
            out.push(format!(
                "  {:<4} {} ({} ms, {}) {}",
                c.id,
                if c.pass { "pass" } else { "FAIL" },
                c.wall_ms,
                c.mode,
                c.description
            ));
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiReport {
    pub pass: bool,
    pub reports: Vec<Report>,
}
