use serde::Serialize;
use serde_json::Value;

use multiseg::properties::Violation;

pub const SCHEMA_VERSION: u32 = 1;

/// Envelope of every `--json` answer.
#[derive(Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub elapsed_ms: u64,
    pub result: Value,
    pub violations: Vec<Violation>,
}

/// What a subcommand produced, before rendering.
pub struct Outcome {
    pub result: Value,
    pub text: String,
    pub violations: Vec<Violation>,
}

impl Outcome {
    pub fn new(result: impl Serialize, text: impl Into<String>) -> Self {
        Outcome {
            result: serde_json::to_value(result).expect("serializable"),
            text: text.into(),
            violations: Vec::new(),
        }
    }

    pub fn with_violations(mut self, violations: Vec<Violation>) -> Self {
        self.violations = violations;
        self
    }
}
