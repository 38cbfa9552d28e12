use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One failing identity with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    /// Basis indices (1-based) and the elements they name.
    pub location: Value,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub warnings: Vec<String>,
    pub counterexamples: Vec<Counterexample>,
    pub metrics: BTreeMap<String, Value>,
}

/// Metric keys with this suffix hold wall-clock timings.
pub const TIMING_SUFFIX: &str = "_ms";

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    /// The report with timing metrics removed; identical inputs give
    /// identical output.
    pub fn without_timings(&self) -> VerificationReport {
        let mut out = self.clone();
        out.metrics.retain(|k, _| !k.ends_with(TIMING_SUFFIX));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub limits: Limits,
    /// Counterexamples kept per report; checking continues past this.
    pub max_counterexamples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            limits: Limits::default(),
            max_counterexamples: 5,
        }
    }
}

/// Accumulates check outcomes in a fixed order.
pub(crate) struct Collector {
    report: VerificationReport,
    cap: usize,
    checks: BTreeMap<String, u64>,
    failures: BTreeMap<String, u64>,
    start: Instant,
}

impl Collector {
    pub fn new(suite: &str, opts: &VerifyOptions) -> Self {
        Collector {
            report: VerificationReport {
                suite: suite.to_string(),
                params: BTreeMap::new(),
                status: Status::Pass,
                warnings: Vec::new(),
                counterexamples: Vec::new(),
                metrics: BTreeMap::new(),
            },
            cap: opts.max_counterexamples,
            checks: BTreeMap::new(),
            failures: BTreeMap::new(),
            start: Instant::now(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.report.params.insert(key.to_string(), value.into());
    }

    pub fn metric(&mut self, key: &str, value: impl Into<Value>) {
        self.report.metrics.insert(key.to_string(), value.into());
    }

    pub fn warn(&mut self, text: String) {
        self.report.warnings.push(text);
    }

    /// Records one check; `failure` is only built when `ok` is false.
    pub fn check(&mut self, family: &str, ok: bool, failure: impl FnOnce() -> Counterexample) {
        self.record(family, if ok { None } else { Some(failure()) });
    }

    pub fn record(&mut self, family: &str, failure: Option<Counterexample>) {
        *self.checks.entry(family.to_string()).or_default() += 1;
        if let Some(ce) = failure {
            *self.failures.entry(family.to_string()).or_default() += 1;
            self.report.status = Status::Fail;
            if self.report.counterexamples.len() < self.cap {
                self.report.counterexamples.push(ce);
            }
        }
    }

    pub fn finish(mut self) -> VerificationReport {
        let total: u64 = self.failures.values().sum();
        self.metric("checks", serde_json::to_value(&self.checks).unwrap());
        self.metric("failures", total);
        if total > 0 {
            self.metric("failures_by_check", serde_json::to_value(&self.failures).unwrap());
        }
        let ms = self.start.elapsed().as_millis() as u64;
        self.metric(&format!("elapsed{TIMING_SUFFIX}"), ms);
        self.report
    }
}
