use std::fmt;

use serde::Serialize;

/// One broken invariant, with the cell or index it was found at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub location: String,
    pub rule: String,
}

impl Violation {
    pub fn at_cell(i: usize, j: usize, rule: impl Into<String>) -> Self {
        Self {
            location: format!("({i},{j})"),
            rule: rule.into(),
        }
    }

    pub fn at_index(i: usize, rule: impl Into<String>) -> Self {
        Self {
            location: format!("[{i}]"),
            rule: rule.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.rule)
    }
}

/// Checks every invariant and reports all failures, not just the first.
pub trait Validate {
    fn violations(&self) -> Vec<Violation>;

    fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }
}
