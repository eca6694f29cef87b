//! Verification reports with structured counterexamples.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub law: String,
    pub inputs: Vec<Value>,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    #[serde(rename = "maxArity")]
    pub max_arity: usize,
    pub cases: usize,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Combines sub-reports into one; counterexamples keep their order.
    pub fn merge(suite: &str, max_arity: usize, parts: Vec<Report>) -> Report {
        let mut out = Report {
            suite: suite.to_string(),
            max_arity,
            cases: 0,
            status: Status::Pass,
            counterexamples: Vec::new(),
            notes: Vec::new(),
        };
        for p in parts {
            out.cases += p.cases;
            out.counterexamples.extend(p.counterexamples);
            out.notes.extend(p.notes);
        }
        if !out.counterexamples.is_empty() {
            out.status = Status::Fail;
        }
        out
    }

    /// Failing-case count for a law, read back from the notes.
    pub fn failures_of(&self, law: &str) -> usize {
        let prefix = format!("{law}: ");
        self.notes
            .iter()
            .filter_map(|n| n.strip_prefix(&prefix))
            .filter_map(|rest| rest.split_whitespace().next()?.parse::<usize>().ok())
            .sum()
    }

    pub fn counterexample(&self, law: &str) -> Option<&Counterexample> {
        self.counterexamples.iter().find(|c| c.law == law)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Accumulates case results. Keeps the first counterexample of every law and
/// counts the rest.
#[derive(Debug)]
pub struct ReportBuilder {
    suite: String,
    max_arity: usize,
    cases: usize,
    counterexamples: Vec<Counterexample>,
    failures: BTreeMap<String, usize>,
    notes: Vec<String>,
}

impl ReportBuilder {
    pub fn new(suite: &str, max_arity: usize) -> Self {
        ReportBuilder {
            suite: suite.to_string(),
            max_arity,
            cases: 0,
            counterexamples: Vec::new(),
            failures: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    /// Records one case. `inputs` is only evaluated on failure.
    pub fn case<T: PartialEq>(
        &mut self,
        law: &str,
        lhs: &T,
        rhs: &T,
        render: impl Fn(&T) -> Value,
        inputs: impl FnOnce() -> Vec<Value>,
    ) -> bool {
        self.cases += 1;
        if lhs == rhs {
            return true;
        }
        let n = self.failures.entry(law.to_string()).or_insert(0);
        *n += 1;
        if *n == 1 {
            self.counterexamples.push(Counterexample {
                law: law.to_string(),
                inputs: inputs(),
                lhs: render(lhs),
                rhs: render(rhs),
            });
        }
        false
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn failure_count(&self, law: &str) -> usize {
        self.failures.get(law).copied().unwrap_or(0)
    }

    pub fn finish(mut self) -> Report {
        let mut notes: Vec<String> = self
            .failures
            .iter()
            .map(|(law, n)| format!("{law}: {n} failing cases"))
            .collect();
        notes.append(&mut self.notes);
        let status = if self.counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            suite: self.suite,
            max_arity: self.max_arity,
            cases: self.cases,
            status,
            counterexamples: self.counterexamples,
            notes,
        }
    }
}
