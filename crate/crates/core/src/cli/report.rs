//! Machine-readable command output.

use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::series::{format_rational, Jet, Rational};

use super::checks::CheckResult;
use super::documents::jet_strings;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Output {
    Jet(JetOutput),
    Rational(String),
    Flag(bool),
    Count(u64),
    Text(String),
    List(Vec<Output>),
    Record(BTreeMap<String, Output>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JetOutput {
    pub coeffs: Vec<String>,
    /// Highest trusted power, `null` when no coefficient is trusted.
    pub valid_order: Option<usize>,
    pub polynomial: bool,
    pub display: String,
}

impl From<&Jet> for Output {
    fn from(j: &Jet) -> Self {
        Output::Jet(JetOutput {
            coeffs: jet_strings(j),
            valid_order: j.valid_order(),
            polynomial: j.is_polynomial(),
            display: j.to_string(),
        })
    }
}

impl From<&Rational> for Output {
    fn from(q: &Rational) -> Self {
        Output::Rational(format_rational(q))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub args: Vec<String>,
    /// SHA-256 over the input documents, in argument order.
    pub inputs_digest: String,
    pub seed: Option<u64>,
    pub outputs: BTreeMap<String, Output>,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &str, args: &[String], inputs: &[&str]) -> Self {
        let mut hasher = Sha256::new();
        for text in inputs {
            hasher.update((text.len() as u64).to_le_bytes());
            hasher.update(text.as_bytes());
        }
        Self {
            command: command.to_string(),
            args: args.to_vec(),
            inputs_digest: hex::encode(hasher.finalize()),
            seed: None,
            outputs: BTreeMap::new(),
            checks: Vec::new(),
            passed: true,
        }
    }

    pub fn output(&mut self, name: impl Into<String>, value: impl Into<Output>) {
        self.outputs.insert(name.into(), value.into());
    }

    pub fn check(&mut self, check: CheckResult) {
        self.passed &= check.pass;
        self.checks.push(check);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl From<bool> for Output {
    fn from(b: bool) -> Self {
        Output::Flag(b)
    }
}

impl From<Jet> for Output {
    fn from(j: Jet) -> Self {
        Output::from(&j)
    }
}

impl From<Rational> for Output {
    fn from(q: Rational) -> Self {
        Output::from(&q)
    }
}
