//! The JSON record written next to every output.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::output::write_atomic;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema: u32,
    pub command: String,
    /// Flags exactly as given, enough to rerun the command.
    pub argv: Vec<String>,
    /// Effective inputs; complex values as `re,im`.
    pub parameters: BTreeMap<String, String>,
    pub grid: Option<String>,
    pub tolerances: BTreeMap<String, f64>,
    pub outputs: Vec<String>,
    pub stats: BTreeMap<String, Value>,
    pub notes: Vec<String>,
}

impl RunManifest {
    pub fn new(command: &str, argv: &[String]) -> Self {
        RunManifest {
            schema: SCHEMA,
            command: command.to_string(),
            argv: argv.to_vec(),
            parameters: BTreeMap::new(),
            grid: None,
            tolerances: BTreeMap::new(),
            outputs: Vec::new(),
            stats: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<String>) {
        self.parameters.insert(key.to_string(), value.into());
    }

    pub fn stat(&mut self, key: &str, value: impl Into<Value>) {
        self.stats.insert(key.to_string(), value.into());
    }

    /// Stores a float, or `null` when it is not finite.
    pub fn stat_f64(&mut self, key: &str, value: f64) {
        let v = if value.is_finite() { Value::from(value) } else { Value::Null };
        self.stats.insert(key.to_string(), v);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        write_atomic(path, self.to_json().as_bytes())
    }
}
