//! Versioned JSON report envelope shared by the CLI subcommands.

use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "mcm/1";

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub operation: String,
    pub config: Value,
    pub tolerances: Value,
    pub result: Value,
}

impl Report {
    pub fn new(operation: &str, config: Value, tolerances: Value, result: Value) -> Report {
        Report {
            schema: SCHEMA,
            tool: "mcm",
            version: env!("CARGO_PKG_VERSION"),
            operation: operation.to_string(),
            config,
            tolerances,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Echo a complex number as a JSON pair; all reports carry λ this way.
pub fn complex_json(z: Complex64) -> Value {
    serde_json::json!([z.re, z.im])
}
