//! Companion file formats and the JSON documents the CLI emits.

use std::path::Path;

use matex::{DeficiencyCertificate, ElementSet, MatroidSpec};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::exit::Failure;

/// `{"bases":[[...],...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasesFile {
    pub bases: Vec<ElementSet>,
}

/// `{"universe":n,"arms":[{"matroid":{...},"allowed":[...]},...]}`
///
/// Element `j` of an arm's matroid stands for `allowed[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub universe: usize,
    pub arms: Vec<ArmSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArmSpec {
    pub matroid: MatroidSpec,
    pub allowed: ElementSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verification {
    pub member: bool,
    pub solutions: usize,
}

/// `{"A":[...],"shifted":[...]}`, plus the oracle check under `--verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExchangeOutput {
    #[serde(rename = "A")]
    pub parts: Vec<ElementSet>,
    pub shifted: Vec<ElementSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<Verification>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum PartitionOutput {
    Parts(Vec<ElementSet>),
    Certificate(DeficiencyCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasesOutput {
    pub rank: usize,
    pub bases: Vec<ElementSet>,
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    parse_json(&text).map_err(|msg| Failure::parse(format!("{}: {msg}", path.display())))
}

pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T, String> {
    serde_json::from_str(text).map_err(|e| {
        format!(
            "malformed JSON at line {} column {}: {e}",
            e.line(),
            e.column()
        )
    })
}
