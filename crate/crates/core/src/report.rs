//! Pass/fail records shared by the verification routines.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One checked relation `lhs = rhs`, with optional supporting data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub relation: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub witness: Option<String>,
}

impl Check {
    /// Compares two values by equality and records their text forms.
    pub fn equality<T: PartialEq + fmt::Display>(relation: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        Check {
            relation: relation.into(),
            status: Status::from_bool(lhs == rhs),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            witness: None,
        }
    }

    pub fn new(relation: impl Into<String>, ok: bool, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Check {
            relation: relation.into(),
            status: Status::from_bool(ok),
            lhs: lhs.into(),
            rhs: rhs.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {} = {}", self.status, self.relation, self.lhs, self.rhs)?;
        if let Some(w) = &self.witness {
            write!(f, " ({w})")?;
        }
        Ok(())
    }
}
