//! Pass/fail reports for identity checks. Every check operation records one
//! case per (identity, parameter) pair instead of failing hard, so a report
//! can show exactly which identity broke and where.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub identity_id: String,
    pub params: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            cases: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        identity_id: impl Into<String>,
        params: impl Into<String>,
        pass: bool,
        detail: impl Into<String>,
    ) {
        self.cases.push(Case {
            identity_id: identity_id.into(),
            params: params.into(),
            pass,
            detail: detail.into(),
        });
    }

    /// Record a comparison: passes when the two sides agree.
    pub fn check<T: PartialEq + fmt::Debug>(
        &mut self,
        identity_id: impl Into<String>,
        params: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) {
        let pass = lhs == rhs;
        let detail = if pass {
            String::new()
        } else {
            format!("{lhs:?} != {rhs:?}")
        };
        self.push(identity_id, params, pass, detail);
    }

    pub fn merge(&mut self, other: Report) {
        self.cases.extend(other.cases);
    }

    pub fn pass_count(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    pub fn fail_count(&self) -> usize {
        self.cases.len() - self.pass_count()
    }

    pub fn all_pass(&self) -> bool {
        self.fail_count() == 0
    }

    /// Order-independent presentation: cases sorted by identity then params.
    pub fn sort_cases(&mut self) {
        self.cases
            .sort_by(|a, b| (&a.identity_id, &a.params).cmp(&(&b.identity_id, &b.params)));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "cases": self.cases,
            "counts": { "pass": self.pass_count(), "fail": self.fail_count() },
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            let status = if c.pass { "PASS" } else { "FAIL" };
            write!(f, "{status} {} [{}]", c.identity_id, c.params)?;
            if !c.detail.is_empty() {
                write!(f, " {}", c.detail)?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "suite={} pass={} fail={}",
            self.suite,
            self.pass_count(),
            self.fail_count()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_sorting() {
        let mut r = Report::new("demo");
        r.push("b.id", "n=2", true, "");
        r.push("a.id", "n=1", false, "boom");
        r.sort_cases();
        assert_eq!(r.cases[0].identity_id, "a.id");
        assert_eq!(r.pass_count(), 1);
        assert_eq!(r.fail_count(), 1);
        assert!(!r.all_pass());
        let v = r.to_json();
        assert_eq!(v["counts"]["fail"], 1);
    }
}
