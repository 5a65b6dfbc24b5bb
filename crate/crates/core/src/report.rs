//! Per-identity pass/fail reports produced by the check suites.

use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: String,
    pub passed: bool,
    pub instances: usize,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub identities: Vec<IdentityResult>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            identities: Vec::new(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.identities.iter().all(|r| r.passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityResult> {
        self.identities.iter().find(|r| r.name == name)
    }

    pub fn failures(&self) -> Vec<&IdentityResult> {
        self.identities.iter().filter(|r| !r.passed).collect()
    }

    /// Runs `f` on every instance until the first failure. `f` returns a
    /// description of the mismatch, or `None` when the identity holds.
    pub fn check<T>(
        &mut self,
        name: &str,
        instances: impl IntoIterator<Item = T>,
        mut f: impl FnMut(&T) -> Option<String>,
    ) {
        let mut n = 0;
        let mut counterexample = None;
        for x in instances {
            n += 1;
            if let Some(msg) = f(&x) {
                counterexample = Some(msg);
                break;
            }
        }
        self.identities.push(IdentityResult {
            name: name.to_string(),
            passed: counterexample.is_none(),
            instances: n,
            counterexample,
        });
    }

    pub fn record(&mut self, name: &str, instances: usize, failure: Option<String>) {
        self.identities.push(IdentityResult {
            name: name.to_string(),
            passed: failure.is_none(),
            instances,
            counterexample: failure,
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.identities.extend(other.identities);
    }

    pub fn to_json(&self) -> Value {
        let mut ids = Map::new();
        for r in &self.identities {
            let mut e = Map::new();
            e.insert("status".into(), json!(if r.passed { "pass" } else { "fail" }));
            e.insert("instances".into(), json!(r.instances));
            if let Some(c) = &r.counterexample {
                e.insert("counterexample".into(), json!(c));
            }
            ids.insert(r.name.clone(), Value::Object(e));
        }
        json!({
            "suite": self.suite,
            "all_pass": self.all_pass(),
            "identities": Value::Object(ids),
        })
    }

    pub fn to_plain(&self) -> String {
        let mut s = format!("suite {}\n", self.suite);
        for r in &self.identities {
            s.push_str(&format!(
                "{:<5} {} ({} instances)\n",
                if r.passed { "pass" } else { "FAIL" },
                r.name,
                r.instances
            ));
            if let Some(c) = &r.counterexample {
                s.push_str(&format!("      {c}\n"));
            }
        }
        s
    }
}

/// Compares two values and describes the mismatch.
pub fn differ<T: PartialEq + std::fmt::Display>(what: &str, lhs: &T, rhs: &T) -> Option<String> {
    (lhs != rhs).then(|| format!("{what}: {lhs} ≠ {rhs}"))
}
