use std::fmt;

use overpartition::TruncSeries;
use serde::{Deserialize, Serialize};

use crate::params::Params;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not run: unknown id or bad parameters.
    Error,
}

/// Where oracle and formula first disagree. Series checks fill in the
/// exponent; bijection checks name the offending instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<i64>,
    pub oracle: String,
    pub formula: String,
}

impl Discrepancy {
    pub fn at(exponent: i64, oracle: &TruncSeries, formula: &TruncSeries) -> Self {
        Self {
            exponent: Some(exponent),
            oracle: oracle.coeff(exponent).to_string(),
            formula: formula.coeff(exponent).to_string(),
        }
    }

    pub fn instance(oracle: impl fmt::Display, formula: impl fmt::Display) -> Self {
        Self {
            exponent: None,
            oracle: oracle.to_string(),
            formula: formula.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub parameters: Params,
    pub truncation: i64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<Discrepancy>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Number of objects or coefficients compared.
    pub checked: u64,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "{tag} {} [{}] N={} checked={} {}ms",
            self.identity_id,
            params.join(" "),
            self.truncation,
            self.checked,
            self.runtime_ms
        )?;
        if let Some(d) = &self.first_discrepancy {
            match d.exponent {
                Some(e) => write!(
                    f,
                    "\n  at q^{e}: oracle {} vs formula {}",
                    d.oracle, d.formula
                )?,
                None => write!(f, "\n  expected {} got {}", d.oracle, d.formula)?,
            }
        }
        if let Some(e) = &self.error {
            write!(f, "\n  {e}")?;
        }
        Ok(())
    }
}
