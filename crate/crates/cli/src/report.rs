//! The structured document each run emits.

use std::collections::BTreeMap;

use gca_core::Vector;
use serde::Serialize;
use serde_json::Value;

use crate::expr::{display_vector, format_monomial, Context};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub verdict: String,
    pub dims: BTreeMap<String, Value>,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    pub wall_ms: u64,
}

/// One term of a witness vector. Tensor terms carry both factors
/// separately; single-module terms carry `monomial`.
#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct WitnessTerm {
    pub coeff: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tensor: Option<TensorFactors>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial: Option<String>,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct TensorFactors {
    pub left: String,
    pub right: String,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct Witness {
    pub label: String,
    /// Re-parseable input syntax.
    pub expr: String,
    /// Display form with `⊗`.
    pub text: String,
    pub terms: Vec<WitnessTerm>,
}

impl Witness {
    pub fn new(label: impl Into<String>, v: &Vector, ctx: &Context) -> Self {
        let terms = v
            .terms()
            .rev()
            .map(|(m, c)| {
                let word = format_monomial(m, ctx, "@");
                let (tensor, monomial) = match word.split_once(" @ ") {
                    Some((l, r)) => (Some(TensorFactors { left: l.into(), right: r.into() }), None),
                    None => (None, Some(word)),
                };
                WitnessTerm { coeff: c.to_string(), tensor, monomial }
            })
            .collect();
        Self { label: label.into(), expr: crate::expr::format_vector(v, ctx), text: display_vector(v, ctx), terms }
    }
}

impl Report {
    pub fn new(command: &str, params: Vec<(&'static str, String)>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            verdict: String::new(),
            dims: BTreeMap::new(),
            witnesses: Vec::new(),
            counterexample: None,
            wall_ms: 0,
        }
    }

    pub fn dim(&mut self, key: &str, value: impl Into<Value>) {
        self.dims.insert(key.into(), value.into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        let mut out = format!("{}: {}", self.command, self.verdict);
        for (k, v) in &self.dims {
            out.push_str(&format!("\n  {k} = {v}"));
        }
        for w in self.witnesses.iter().take(12) {
            out.push_str(&format!("\n  {}: {}", w.label, w.text));
        }
        if self.witnesses.len() > 12 {
            out.push_str(&format!("\n  ... {} more", self.witnesses.len() - 12));
        }
        if let Some(c) = &self.counterexample {
            out.push_str(&format!("\n  counterexample: {c}"));
        }
        out
    }
}
