//! Machine-readable verification reports.
//!
//! Reports are schema-versioned and byte-deterministic for a fixed
//! configuration: wall-clock timing is kept out of the serialized form and
//! only surfaced on the console.

use serde::Serialize;
use serde_json::{json, Value};

use crate::config::Config;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub check_id: String,
    pub inputs: Value,
    pub pass: bool,
    pub witnesses: Value,
    pub config: Value,
    pub config_hash: String,
    /// not serialized: reports must be byte-identical across runs
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn run(
        check_id: impl Into<String>,
        inputs: Value,
        cfg: &Config,
        body: impl FnOnce() -> crate::error::Result<Value>,
    ) -> VerificationReport {
        let start = std::time::Instant::now();
        let (pass, witnesses) = match body() {
            Ok(w) => (true, w),
            Err(e) => (false, json!({ "error": e.to_string() })),
        };
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            check_id: check_id.into(),
            inputs,
            pass,
            witnesses,
            config: serde_json::to_value(cfg).expect("config is always serializable"),
            config_hash: cfg.hash(),
            elapsed_ms: start.elapsed().as_millis(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": self.schema_version,
            "check_id": self.check_id,
            "inputs": self.inputs,
            "pass": self.pass,
            "witnesses": self.witnesses,
            "config": self.config,
            "config_hash": self.config_hash,
        })
    }

    pub fn file_name(&self) -> String {
        let safe: String = self
            .check_id
            .chars()
            .map(|c| if c.is_alphanumeric() || c == '.' || c == '-' { c } else { '_' })
            .collect();
        format!("{safe}.json")
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} {} ({} ms)",
            if self.pass { "PASS" } else { "FAIL" },
            self.check_id,
            self.elapsed_ms
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_has_no_timing() {
        let cfg = Config::default();
        let r = VerificationReport::run("demo", json!({}), &cfg, || Ok(json!({"ok": true})));
        let v = r.to_json();
        assert!(v.get("elapsed_ms").is_none());
        assert!(v["pass"].as_bool().unwrap());
    }

    #[test]
    fn failures_carry_the_error() {
        let cfg = Config::default();
        let r = VerificationReport::run("demo", json!({}), &cfg, || {
            Err(crate::error::Error::NoSolution("nope".into()))
        });
        assert!(!r.pass);
        assert!(r.witnesses["error"].as_str().unwrap().contains("nope"));
    }
}
