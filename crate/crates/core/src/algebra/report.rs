use std::fmt;

use serde::Serialize;

/// Outcome of running a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

/// What the caller claims the outcome should be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Holds,
    Fails,
    /// Reported for information only; never fails a suite.
    Informational,
}

/// Whether a report agrees with its expectation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

/// The first failing tuple in lexicographic order, with its residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    pub residual: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) -> {}", self.labels.join(", "), self.residual)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub verdict: Verdict,
    pub expected: Expectation,
    pub status: Status,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, checked: usize, witness: Option<Witness>) -> Self {
        let verdict = if witness.is_some() {
            Verdict::Fails
        } else {
            Verdict::Holds
        };
        let mut out = Self {
            name: name.into(),
            verdict,
            expected: Expectation::Holds,
            status: Status::Pass,
            checked,
            witness,
            detail: String::new(),
        };
        out.refresh_status();
        out
    }

    /// A report for a check that has no tuple witness, such as a scalar
    /// comparison or a determinant test.
    pub fn from_bool(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        let mut out = Self::new(name, 1, None);
        out.verdict = if holds { Verdict::Holds } else { Verdict::Fails };
        out.detail = detail.into();
        out.refresh_status();
        out
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn expect(mut self, expected: Expectation) -> Self {
        self.expected = expected;
        self.refresh_status();
        self
    }

    pub fn expect_fail(self) -> Self {
        self.expect(Expectation::Fails)
    }

    pub fn informational(self) -> Self {
        self.expect(Expectation::Informational)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// Combines several sub-reports into one that holds iff all of them do;
    /// the first failing part supplies the witness.
    pub fn all_of(name: impl Into<String>, parts: Vec<IdentityReport>) -> Self {
        Self::combine(name, parts, |p| !p.holds())
    }

    /// Combines sub-reports that carry their own expectations: holds iff no
    /// part has status FAIL.
    pub fn all_passed(name: impl Into<String>, parts: Vec<IdentityReport>) -> Self {
        Self::combine(name, parts, |p| p.status == Status::Fail)
    }

    fn combine(name: impl Into<String>, parts: Vec<IdentityReport>, bad: impl Fn(&IdentityReport) -> bool) -> Self {
        let checked = parts.iter().map(|p| p.checked).sum();
        let failing = parts.iter().find(|p| bad(p));
        let mut out = Self::new(name, checked, failing.and_then(|p| p.witness.clone()));
        if let Some(p) = failing {
            out.verdict = Verdict::Fails;
            out.detail = if p.holds() {
                format!("{} holds but was expected to fail", p.name)
            } else if p.detail.is_empty() {
                format!("{} fails", p.name)
            } else {
                format!("{} fails: {}", p.name, p.detail)
            };
        }
        out.refresh_status();
        out
    }

    fn refresh_status(&mut self) {
        self.status = match (self.expected, self.verdict) {
            (Expectation::Informational, _) => Status::Info,
            (Expectation::Holds, Verdict::Holds) | (Expectation::Fails, Verdict::Fails) => Status::Pass,
            _ => Status::Fail,
        };
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        };
        write!(f, "{} {} ({verdict}", self.status, self.name)?;
        if let Some(w) = &self.witness {
            write!(f, "; witness {w}")?;
        }
        if !self.detail.is_empty() {
            write!(f, "; {}", self.detail)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_expectation() {
        let w = Witness {
            indices: vec![0],
            labels: vec!["a".into()],
            residual: "1".into(),
        };
        assert_eq!(IdentityReport::new("x", 1, None).status, Status::Pass);
        assert_eq!(IdentityReport::new("x", 1, Some(w.clone())).status, Status::Fail);
        assert_eq!(
            IdentityReport::new("x", 1, Some(w.clone())).expect_fail().status,
            Status::Pass
        );
        assert_eq!(IdentityReport::new("x", 1, None).expect_fail().status, Status::Fail);
        assert_eq!(
            IdentityReport::new("x", 1, Some(w)).informational().status,
            Status::Info
        );
    }
}
