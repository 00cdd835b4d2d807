//! Machine-readable check reports emitted by the verification suites.

use serde::Serialize;

/// One named check with its expected and observed values.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

/// A suite of checks; passes iff every check passes. Timing is kept out of
/// the serialized form so identical invocations print identical JSON; it is
/// reported on the human side instead.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub pass: bool,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            checks: Vec::new(),
            pass: true,
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, name: impl Into<String>, expected: impl ToString, got: impl ToString) {
        let expected = expected.to_string();
        let got = got.to_string();
        let pass = expected == got;
        self.pass &= pass;
        self.checks.push(Check {
            name: name.into(),
            expected,
            got,
            pass,
        });
    }

    /// Records a boolean property: expected `true`.
    pub fn check(&mut self, name: impl Into<String>, holds: bool) {
        self.push(name, true, holds);
    }

    /// Human summary line for standard error.
    pub fn summary(&self) -> String {
        let passed = self.checks.iter().filter(|c| c.pass).count();
        format!(
            "{}: {}/{} checks passed in {} ms{}",
            self.suite,
            passed,
            self.checks.len(),
            self.elapsed_ms,
            if self.pass { "" } else { "  FAIL" }
        )
    }

    /// Lines for each failing check, for the human side.
    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("  FAIL {}: expected {}, got {}", c.name, c.expected, c.got))
            .collect()
    }
}
