//! The JSON envelope every subcommand (except `verify`) prints.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const TOOL_VERSION: &str = concat!("qext ", env!("CARGO_PKG_VERSION"));

/// Command output. Object keys inside `inputs` and `results` come out
/// sorted, so two runs with equal inputs differ at most in `timing_ms`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub tool_version: String,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, timing_ms: u64) -> Report {
        Report {
            command: command.to_string(),
            inputs,
            results,
            tool_version: TOOL_VERSION.to_string(),
            timing_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Machine-readable failure printed on standard output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub command: String,
    pub error: ErrorObject,
    pub tool_version: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorObject {
    pub kind: String,
    pub message: String,
}

impl ErrorReport {
    pub fn new(command: &str, kind: &str, message: String) -> ErrorReport {
        ErrorReport {
            command: command.to_string(),
            error: ErrorObject {
                kind: kind.to_string(),
                message,
            },
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("error reports serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip_is_identity() {
        let r = Report::new(
            "qindex",
            json!({"n": 21, "g6": "Bw"}),
            json!({"q_lo": 22.8183, "x": [0.1, 1e-300]}),
            3,
        );
        let s = r.to_json();
        let back: Report = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn keys_are_sorted() {
        let r = Report::new("x", json!({"z": 1, "a": 2}), json!(null), 0);
        assert!(r
            .to_json()
            .starts_with(r#"{"command":"x","inputs":{"a":2,"z":1}"#));
    }
}
