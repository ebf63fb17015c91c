//! Report records and their JSON, CSV and text renderings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use taft_core::check::CaseResult;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub case_id: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    pub detail: Option<String>,
}

impl From<CaseResult> for CaseRecord {
    fn from(c: CaseResult) -> Self {
        Self { case_id: c.case_id, params: c.params, pass: c.pass, detail: c.detail }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Time spent inside the checks of this report, summed over workers.
    pub elapsed_ms: u64,
}

/// One `(n, root, suite)` combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub n: usize,
    pub root_exponent: usize,
    pub suite: String,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(n: usize, root_exponent: usize, suite: &str, cases: Vec<CaseRecord>, elapsed_ms: u64) -> Self {
        let total = cases.len();
        let passed = cases.iter().filter(|c| c.pass).count();
        Self {
            tool_version: TOOL_VERSION.to_string(),
            n,
            root_exponent,
            suite: suite.to_string(),
            cases,
            summary: Summary { total, passed, failed: total - passed, elapsed_ms },
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }
}

pub fn to_json(reports: &[VerificationReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

/// One row per case: `n,root_exponent,suite,case_id,pass,detail`.
pub fn to_csv(reports: &[VerificationReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "root_exponent", "suite", "case_id", "pass", "detail"]).expect("in-memory write");
    for r in reports {
        for c in &r.cases {
            w.write_record([
                &r.n.to_string(),
                &r.root_exponent.to_string(),
                &r.suite,
                &c.case_id,
                &c.pass.to_string(),
                c.detail.as_deref().unwrap_or(""),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn to_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let s = &r.summary;
        out.push_str(&format!(
            "n={} t={} suite={}  {}/{} passed  ({} ms)\n",
            r.n, r.root_exponent, r.suite, s.passed, s.total, s.elapsed_ms
        ));
        for c in &r.cases {
            out.push_str(if c.pass { "  PASS " } else { "  FAIL " });
            out.push_str(&c.case_id);
            if let Some(d) = &c.detail {
                out.push_str("  ");
                out.push_str(d);
            }
            out.push('\n');
        }
    }
    out
}
