//! Pass/fail reports produced by the verification routines.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub params: Map<String, Value>,
    pub checks: Vec<Check>,
    pub ms: u64,
}

impl CheckReport {
    pub fn new(suite: &str) -> Self {
        CheckReport { suite: suite.to_string(), params: Map::new(), checks: Vec::new(), ms: 0 }
    }

    pub fn param(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), v.into());
        self
    }

    /// Records a pass/fail check; the witness is kept only on failure.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> Value) {
        let (status, witness) = if ok { (Status::Pass, Value::Null) } else { (Status::Fail, witness()) };
        self.checks.push(Check { name: name.into(), status, witness });
    }

    pub fn info(&mut self, name: impl Into<String>, witness: Value) {
        self.checks.push(Check { name: name.into(), status: Status::Info, witness });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: Value) {
        self.checks.push(Check { name: name.into(), status: Status::Fail, witness });
    }

    /// Appends the checks of `other`, prefixing their names with its suite.
    pub fn absorb(&mut self, other: CheckReport) {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn info_does_not_fail() {
        let mut r = CheckReport::new("t").param("Q", 2);
        r.check("a", true, || Value::Null);
        r.info("note", Value::from("x"));
        assert!(r.passed());
        r.check("b", false, || Value::from(3));
        assert!(!r.passed());
        let j = r.to_json();
        assert_eq!(j["checks"][2]["status"], "fail");
        assert_eq!(j["checks"][2]["witness"], 3);
        assert_eq!(j["params"]["Q"], 2);
    }
}
