use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of one verification run. `failures` is empty exactly when the
/// run passes; every payload carries enough data to replay the case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: BTreeMap<String, Value>,
    pub cases_checked: usize,
    pub passed: bool,
    pub failures: Vec<Value>,
    /// Violations of statements that are only conjectured in the given
    /// setting; they never make a run fail.
    pub findings: Vec<Value>,
    /// Hypothesis notes and other remarks about the run.
    pub notices: Vec<String>,
    /// Comparisons deliberately not performed.
    pub not_attempted: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(theorem: &str) -> Self {
        VerificationReport {
            theorem: theorem.to_string(),
            params: BTreeMap::new(),
            cases_checked: 0,
            passed: true,
            failures: Vec::new(),
            findings: Vec::new(),
            notices: Vec::new(),
            not_attempted: Vec::new(),
            runtime_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.to_string(), serde_json::to_value(value).expect("parameters serialize"));
        self
    }

    /// Folds per-case outcomes in the order given.
    pub fn absorb(&mut self, outcomes: impl IntoIterator<Item = CaseOutcome>) {
        for o in outcomes {
            self.cases_checked += 1;
            self.failures.extend(o.failures);
            self.findings.extend(o.findings);
        }
        self.passed = self.failures.is_empty();
    }

    pub fn fail(&mut self, payload: Value) {
        self.failures.push(payload);
        self.passed = false;
    }
}

/// What a single case contributed to a report.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CaseOutcome {
    pub failures: Vec<Value>,
    pub findings: Vec<Value>,
}

impl CaseOutcome {
    pub fn ok() -> Self {
        CaseOutcome::default()
    }

    pub fn failure(payload: Value) -> Self {
        CaseOutcome { failures: vec![payload], findings: Vec::new() }
    }
}
