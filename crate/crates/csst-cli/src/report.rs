//! JSON report documents. Field order is fixed by the struct definitions and
//! all randomized results carry their seed and budget, so identical inputs
//! produce byte-identical output.

use csst::code::BinaryCode;
use csst::pair::{CssTReport, CsstStatus, QuantumParams};
use serde::Serialize;
use serde_json::Value;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct ReportDocument {
    pub inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub css_t: Option<CssTSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximality: Option<MaximalitySection>,
    pub triorthogonal_c2: Option<bool>,
    pub gamma: Option<f64>,
    pub seed: u64,
    pub budget: u64,
    pub tool_version: &'static str,
}

#[derive(Serialize)]
pub struct CssTSection {
    pub status: &'static str,
    pub is_pair: bool,
    pub conditions: ConditionsSection,
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct ConditionsSection {
    pub c1: Option<bool>,
    pub c2: Option<bool>,
    pub c3: bool,
    pub c4: Option<bool>,
}

#[derive(Serialize)]
pub struct ParamsSection {
    pub n: usize,
    pub k: usize,
    pub d_lower: usize,
    pub d_upper: Option<usize>,
    pub d_exact: bool,
    pub witness_weight: Option<usize>,
}

#[derive(Serialize)]
pub struct MaximalitySection {
    pub in_c1: bool,
    pub in_c2: bool,
    pub full: bool,
}

impl CssTSection {
    pub fn from_report(report: &CssTReport) -> Self {
        Self {
            status: match report.status {
                CsstStatus::Pair => "pair",
                CsstStatus::NotPair => "not_pair",
                CsstStatus::TrivialC2 => "trivial",
            },
            is_pair: report.is_pair(),
            conditions: ConditionsSection {
                c1: report.conditions.cond1,
                c2: report.conditions.cond2,
                c3: report.conditions.cond3,
                c4: report.conditions.cond4,
            },
            witness: report.failing_witness.as_ref().map(|w| w.to_string()),
        }
    }
}

impl ParamsSection {
    pub fn from_params(p: &QuantumParams) -> Self {
        Self {
            n: p.n,
            k: p.k,
            d_lower: p.d_lower,
            d_upper: p.d_upper,
            d_exact: p.d_exact,
            witness_weight: p.witness.as_ref().map(|w| w.weight()),
        }
    }
}

/// gamma of the certified parameters: uses the exact distance when there is
/// one, else a distance bound of at least 2; absent otherwise.
pub fn gamma_of(params: &QuantumParams) -> Option<f64> {
    let d = if params.d_exact {
        params.d_upper?
    } else {
        params.d_lower
    };
    if params.k >= 1 && d >= 2 {
        let g = csst::pair::scaling_exponent(params.n, params.k, d).ok()?;
        Some((g * 1000.0).round() / 1000.0)
    } else {
        None
    }
}

/// Triorthogonality of the canonical generator, skipped above the cubic
/// enumeration cap.
pub fn triorthogonal_flag(c2: &BinaryCode) -> Option<bool> {
    if c2.dim() <= 128 {
        Some(csst::pair::is_triorthogonal_matrix(c2.generator()))
    } else {
        None
    }
}

pub fn generator_strings(c: &BinaryCode) -> Vec<String> {
    c.generator().rows().iter().map(|r| r.to_string()).collect()
}
