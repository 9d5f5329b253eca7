//! Check reports: named pass/fail results with reproducible diagnostics.

use serde::{Deserialize, Serialize};

/// Outcome of one check.  `details` carries the dimensions, ranks, or
/// offending cells that witness the verdict, so a report can be audited
/// without rerunning the computation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub details: serde_json::Value,
}

impl CheckReport {
    pub fn new(name: &str, passed: bool, details: serde_json::Value) -> Self {
        CheckReport {
            name: name.to_string(),
            passed,
            details,
        }
    }

    /// One-line JSON rendering (the NDJSON row format).
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}
