//! Suites of checks read from TOML.
//!
//! ```toml
//! [[check]]
//! id = "box"
//! params = { r = 2, c = 2 }
//! max_q = 10
//! ```

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::verify_report;
use crate::params::Params;
use crate::report::VerificationReport;

pub const DEFAULT_SUITE: &str = include_str!("../suites/default.toml");

/// Environment variable holding the number of worker threads.
pub const WORKERS_VAR: &str = "POPCHECK_WORKERS";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub id: String,
    #[serde(default)]
    pub params: Params,
    pub max_q: i64,
    /// Free-form tag, e.g. which acceptance item the entry belongs to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub check: Vec<CheckSpec>,
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("malformed suite: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("cannot read suite: {0}")]
    Io(#[from] std::io::Error),
}

impl SuiteConfig {
    pub fn parse(text: &str) -> Result<Self, SuiteError> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &std::path::Path) -> Result<Self, SuiteError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn default_suite() -> Self {
        Self::parse(DEFAULT_SUITE).expect("bundled suite parses")
    }

    /// Entries carrying the given label.
    pub fn labelled(&self, label: &str) -> Self {
        Self {
            check: self
                .check
                .iter()
                .filter(|c| c.label.as_deref() == Some(label))
                .cloned()
                .collect(),
        }
    }
}

pub fn workers() -> usize {
    std::env::var(WORKERS_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Runs every entry, in parallel, returning reports in config order.
pub fn run_suite(config: &SuiteConfig) -> Vec<VerificationReport> {
    let run = || {
        config
            .check
            .par_iter()
            .map(|c| verify_report(&c.id, &c.params, c.max_q))
            .collect()
    };
    match rayon::ThreadPoolBuilder::new()
        .num_threads(workers())
        .build()
    {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn empty_suite() {
        assert!(run_suite(&SuiteConfig::parse("").unwrap()).is_empty());
    }

    #[test]
    fn unknown_id_is_an_error_report() {
        let cfg = SuiteConfig::parse("[[check]]\nid = \"nope\"\nmax_q = 3\n").unwrap();
        let r = run_suite(&cfg);
        assert_eq!(r[0].status, Status::Error);
    }

    #[test]
    fn order_is_preserved() {
        let cfg = SuiteConfig::parse(
            "[[check]]\nid = \"box\"\nparams = { r = 2, c = 1 }\nmax_q = 6\n\
             [[check]]\nid = \"odd-parts\"\nmax_q = 5\n",
        )
        .unwrap();
        let ids: Vec<String> = run_suite(&cfg).into_iter().map(|r| r.identity_id).collect();
        assert_eq!(ids, ["box", "odd-parts"]);
    }

    #[test]
    fn malformed() {
        assert!(SuiteConfig::parse("[[check]]\nid = 3\n").is_err());
    }

    #[test]
    fn bundled_suite_ids_exist() {
        for c in SuiteConfig::default_suite().check {
            assert!(crate::catalog::lookup(&c.id).is_some(), "{}", c.id);
        }
    }
}
