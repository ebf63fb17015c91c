//! Outcome records shared by every verification routine.

use std::collections::BTreeMap;

/// One checked case. `case_id` follows `<check>/n=<n>/<param>=<value>/...`
/// and does not depend on the chosen root exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub case_id: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    pub detail: Option<String>,
}

impl CaseResult {
    pub fn new(case_id: impl Into<String>, pass: bool) -> Self {
        Self { case_id: case_id.into(), params: BTreeMap::new(), pass, detail: None }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Attaches `detail` only when the case failed.
    pub fn detail_on_failure(self, detail: impl FnOnce() -> String) -> Self {
        if self.pass {
            self
        } else {
            let d = detail();
            self.detail(d)
        }
    }
}

pub fn all_pass(cases: &[CaseResult]) -> bool {
    cases.iter().all(|c| c.pass)
}

/// Case ids of the failing cases, for assertion messages.
pub fn failures(cases: &[CaseResult]) -> Vec<&str> {
    cases.iter().filter(|c| !c.pass).map(|c| c.case_id.as_str()).collect()
}
