//! Machine-readable output shared by all subcommands.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Exact,
    Numeric,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultEntry {
    pub name: String,
    pub value: Value,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema: String,
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub results: Vec<ResultEntry>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            params: BTreeMap::new(),
            results: Vec::new(),
        }
    }

    pub fn param(mut self, name: &str, value: impl Serialize) -> Self {
        self.params.insert(name.to_string(), to_value(value));
        self
    }

    /// Exact values go in as strings or integers, never floats.
    pub fn exact(&mut self, name: &str, value: impl Serialize) {
        self.push(name, value, Provenance::Exact);
    }

    pub fn numeric(&mut self, name: &str, value: impl Serialize) {
        self.push(name, value, Provenance::Numeric);
    }

    fn push(&mut self, name: &str, value: impl Serialize, provenance: Provenance) {
        self.results.push(ResultEntry { name: name.to_string(), value: to_value(value), provenance });
    }

    #[cfg(test)]
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.results.iter().find(|r| r.name == name).map(|r| &r.value)
    }

    pub fn write_json(&self, out: &mut impl Write) -> anyhow::Result<()> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        writeln!(out)?;
        Ok(())
    }
}

fn to_value(v: impl Serialize) -> Value {
    // Only plain data reaches here; a non-finite float becomes null.
    serde_json::to_value(v).unwrap_or(Value::Null)
}
