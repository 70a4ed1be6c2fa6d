//! The versioned JSON report schema. Field order is fixed by struct
//! declaration order and map keys are sorted, so reports are byte-identical
//! across runs except for the timing fields.

use std::collections::BTreeMap;

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub case: CaseInfo,
    pub order: OrderInfo,
    pub truncation_bound: Option<u64>,
    pub groebner_basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub standard_monomial_count: Option<String>,
    pub residues: Vec<ResidueEntry>,
    pub constraints: Vec<ConstraintEntry>,
    pub verify: Vec<VerifyEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solve: Option<SolveEntry>,
    pub verdicts: BTreeMap<String, String>,
    pub timings_ms: BTreeMap<String, u128>,
}

#[derive(Debug, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo {
            name: "rigidity",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CaseInfo {
    pub name: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct OrderInfo {
    pub kind: String,
    pub precedence: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ResidueEntry {
    pub relation: String,
    pub terms: Vec<ResidueTerm>,
}

#[derive(Debug, Serialize)]
pub struct ResidueTerm {
    pub monomial: String,
    pub coefficient: String,
}

#[derive(Debug, Serialize)]
pub struct ConstraintEntry {
    pub relation: String,
    pub monomial: String,
    /// Primitive form (integer content removed).
    pub polynomial: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyEntry {
    pub family: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessEntry>,
}

#[derive(Debug, Serialize)]
pub struct WitnessEntry {
    pub relation: String,
    pub monomial: String,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct SolveEntry {
    pub k: String,
    pub points: Vec<BTreeMap<String, String>>,
    pub residuals: Vec<String>,
    pub classification: String,
}

/// Renders one report (or a batch) as pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serialization");
    text.push('\n');
    text
}
