//! Predicate outcomes with witnesses.

use std::fmt;

use serde::Serialize;

/// Outcome of one predicate. `identity` names the identity that was tested
/// and `witness` holds the first violating basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub passed: bool,
    pub identity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Report {
    pub fn new(name: &str, identity: &str, witness: Option<Vec<usize>>) -> Self {
        Report {
            name: name.to_string(),
            passed: witness.is_none(),
            identity: identity.to_string(),
            witness,
            detail: None,
        }
    }

    pub fn pass(name: &str, identity: &str) -> Self {
        Self::new(name, identity, None)
    }

    /// A failure with no basis-index witness.
    pub fn fail(name: &str, identity: &str, detail: impl Into<String>) -> Self {
        Report {
            name: name.to_string(),
            passed: false,
            identity: identity.to_string(),
            witness: None,
            detail: Some(detail.into()),
        }
    }

    pub fn from_bool(name: &str, identity: &str, ok: bool) -> Self {
        if ok {
            Self::pass(name, identity)
        } else {
            Self::fail(name, identity, "does not hold")
        }
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS {}", self.name)?;
        } else {
            write!(f, "FAIL {}: violates {}", self.name, self.identity)?;
            if let Some(w) = &self.witness {
                write!(f, " at {w:?}")?;
            }
        }
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

/// A named bundle of reports; passes iff every report passes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<Report>,
}

impl Certificate {
    pub fn new(name: &str, checks: Vec<Report>) -> Self {
        Certificate { name: name.to_string(), passed: checks.iter().all(|r| r.passed), checks }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Report> {
        self.checks.iter().filter(|r| !r.passed)
    }

    pub fn merge(name: &str, parts: &[&Certificate]) -> Self {
        Self::new(name, parts.iter().flat_map(|c| c.checks.iter().cloned()).collect())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", if self.passed { "PASS" } else { "FAIL" }, self.name)?;
        for r in &self.checks {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}
