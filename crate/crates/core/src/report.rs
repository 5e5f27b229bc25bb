//! Pass/fail records shared by the verifiers.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub m: Option<usize>,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, m: Option<usize>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), m, passed, detail: detail.into() }
    }

    /// Compare two displayable values for equality.
    pub fn eq<T: PartialEq + std::fmt::Debug>(name: impl Into<String>, m: usize, got: T, want: T) -> Check {
        let passed = got == want;
        let detail = if passed { format!("{got:?}") } else { format!("got {got:?}, expected {want:?}") };
        Check::new(name, Some(m), passed, detail)
    }
}

/// A list of checks with a summary.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}
