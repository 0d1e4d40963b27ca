//! Check results and run reports for the verification suites.

use serde::Serialize;
use serde_json::Value;

/// Status of one check. `Discrepancy` is reserved for documented claims
/// that the computation contradicts with an explicit witness; it does
/// not fail the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Discrepancy,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: CheckStatus,
    pub details: String,
    pub payload: Value,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub version: String,
    pub conventions: Vec<String>,
    pub checks: Vec<CheckResult>,
    pub total_elapsed_us: u64,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == CheckStatus::Fail) {
            1
        } else {
            0
        }
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialization")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# Verification report (v{}, conventions: {})\n\n",
            self.version,
            self.conventions.join(", ")
        ));
        for c in &self.checks {
            let mark = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Discrepancy => "DISCREPANCY",
                CheckStatus::Skipped => "skipped",
            };
            out.push_str(&format!("- `{}`: **{}** — {}\n", c.id, mark, c.details));
        }
        out.push_str(&format!(
            "\n{} pass, {} fail, {} discrepancy, {} skipped.\n",
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::Discrepancy),
            self.count(CheckStatus::Skipped),
        ));
        out
    }
}

/// Zeroes the timing fields in a serialized report, for byte-stable
/// comparisons.
pub fn strip_timings(report: &mut Value) {
    if let Some(obj) = report.as_object_mut() {
        if obj.contains_key("total_elapsed_us") {
            obj.insert("total_elapsed_us".into(), Value::from(0u64));
        }
        if let Some(checks) = obj.get_mut("checks").and_then(Value::as_array_mut) {
            for c in checks {
                if let Some(co) = c.as_object_mut() {
                    co.insert("elapsed_us".into(), Value::from(0u64));
                }
            }
        }
    }
}
