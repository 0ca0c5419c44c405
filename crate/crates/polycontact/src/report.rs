//! Outcome records for named verifications.

use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One named verification outcome. The serialized field set and order are a
/// stable public contract: check_id, statement, status, witness, elapsed_ms.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub statement: String,
    pub status: CheckStatus,
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Accumulates the claims of one verification; any failed claim fails the
/// check and contributes the witness.
pub struct ClaimSet {
    check_id: String,
    statement: String,
    started: Instant,
    failures: Vec<String>,
}

impl ClaimSet {
    pub fn new(check_id: &str, statement: &str) -> Self {
        ClaimSet {
            check_id: check_id.to_string(),
            statement: statement.to_string(),
            started: Instant::now(),
            failures: Vec::new(),
        }
    }

    pub fn claim(&mut self, name: &str, ok: bool) {
        if !ok {
            self.failures.push(format!("{name}: failed"));
        }
    }

    pub fn claim_with_witness(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(format!("{name}: {}", witness()));
        }
    }

    /// Claim that two renderable values are equal; the witness shows both.
    pub fn claim_eq<T: PartialEq + std::fmt::Display>(&mut self, name: &str, got: &T, expect: &T) {
        if got != expect {
            self.failures
                .push(format!("{name}: got {got}, expected {expect}"));
        }
    }

    pub fn claim_zero<T: std::fmt::Display>(&mut self, name: &str, value: &T, is_zero: bool) {
        if !is_zero {
            self.failures.push(format!("{name}: nonzero, got {value}"));
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn into_report(self) -> CheckReport {
        let elapsed_ms = self.started.elapsed().as_millis() as u64;
        if self.failures.is_empty() {
            CheckReport {
                check_id: self.check_id,
                statement: self.statement,
                status: CheckStatus::Pass,
                witness: None,
                elapsed_ms,
            }
        } else {
            CheckReport {
                check_id: self.check_id,
                statement: self.statement,
                status: CheckStatus::Fail,
                witness: Some(self.failures.join(" | ")),
                elapsed_ms,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_claim_produces_witness() {
        let mut c = ClaimSet::new("demo", "demonstration");
        c.claim("first", true);
        c.claim_eq("second", &1, &2);
        let r = c.into_report();
        assert_eq!(r.status, CheckStatus::Fail);
        assert!(r.witness.unwrap().contains("second"));
    }

    #[test]
    fn serialized_field_order_is_stable() {
        let r = CheckReport {
            check_id: "x".into(),
            statement: "s".into(),
            status: CheckStatus::Pass,
            witness: None,
            elapsed_ms: 3,
        };
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"check_id":"x","statement":"s","status":"pass","witness":null,"elapsed_ms":3}"#
        );
    }
}
