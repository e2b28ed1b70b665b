//! Report structures. JSON reports are deterministic modulo the
//! `timing_ms` field: two runs of the same request agree byte for byte
//! once that field is masked.

use serde::Serialize;

use crate::registry::{InstanceOutcome, InstanceResult};

pub fn engine_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

#[derive(Debug, Clone, Serialize)]
pub struct RequestEcho {
    pub kind: String,
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub property: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<String>,
    pub bound: i64,
    pub all_witnesses: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub engine_version: String,
    pub request: RequestEcho,
    pub input_digest: String,
    pub status: String,
    pub exit_code: i32,
    /// Full structured verdict (witnesses as generator-image arrays).
    pub result: serde_json::Value,
    /// Human-readable account of the same result.
    pub rendering: String,
    pub timing_ms: u128,
}

impl CheckReport {
    pub fn to_text(&self) -> String {
        format!(
            "{} {} on {}: {}\n{}",
            self.request.kind,
            self.request
                .property
                .as_deref()
                .or(self.request.report.as_deref())
                .unwrap_or("?"),
            self.request.source,
            self.status.to_uppercase(),
            self.rendering
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub summary: String,
    pub consistent: usize,
    pub violations: usize,
    pub not_applicable: usize,
    pub instances: Vec<InstanceResult>,
}

impl TheoremReport {
    pub fn new(id: &str, summary: &str, instances: Vec<InstanceResult>) -> Self {
        let count = |o: InstanceOutcome| instances.iter().filter(|i| i.outcome == o).count();
        TheoremReport {
            id: id.to_string(),
            summary: summary.to_string(),
            consistent: count(InstanceOutcome::Consistent),
            violations: count(InstanceOutcome::Violation),
            not_applicable: count(InstanceOutcome::NotApplicable),
            instances,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub engine_version: String,
    pub corpus: String,
    pub corpus_digest: String,
    pub ring_count: usize,
    pub module_count: usize,
    pub zmodule_count: usize,
    pub theorems: Vec<TheoremReport>,
    pub total_violations: usize,
    pub timing_ms: u128,
}

impl SuiteReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "theorem suite over corpus {} ({} rings, {} modules, {} z-modules)\n",
            self.corpus, self.ring_count, self.module_count, self.zmodule_count
        ));
        for t in &self.theorems {
            out.push_str(&format!(
                "  {:<14} consistent={:<3} violations={:<3} n/a={:<3} {}\n",
                t.id, t.consistent, t.violations, t.not_applicable, t.summary
            ));
            for i in &t.instances {
                if i.outcome == InstanceOutcome::Violation {
                    out.push_str(&format!("    VIOLATION {}: {}\n", i.subject, i.detail));
                }
            }
        }
        out.push_str(&format!("total violations: {}\n", self.total_violations));
        out
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}
