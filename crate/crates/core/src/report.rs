//! Pass/fail reports for code validation.

use std::fmt;

/// A single violated check, anchored at a list index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Index of the first entry of the offending (cyclic) pair, or of the
    /// offending entry itself.
    pub index: usize,
    pub message: String,
}

/// Outcome of a validation run; failures are collected, not thrown.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, index: usize, message: impl Into<String>) {
        self.violations.push(Violation {
            index,
            message: message.into(),
        });
    }

    /// First violation, if any; handy for CLI output.
    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass() {
            write!(f, "OK")
        } else {
            write!(
                f,
                "FAIL ({} violations; first at index {}: {})",
                self.violations.len(),
                self.violations[0].index,
                self.violations[0].message
            )
        }
    }
}
