//! JSON report of a verification run. Every real number is a decimal string.

use std::collections::BTreeMap;

use mzsv_core::identities::VerificationResult;
use mzsv_core::numerics::parse_decimal;
use mzsv_core::series::Evaluated;
use mzsv_core::{HpReal, PrecisionContext};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContextInfo {
    pub digits: u32,
    pub tol: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PerSide<T> {
    pub lhs: Option<T>,
    pub rhs: Option<T>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub abs_diff: Option<String>,
    pub tolerance: String,
    pub pass: bool,
    pub terms_used: PerSide<u64>,
    pub tail_correction: PerSide<String>,
    pub error_estimate: PerSide<String>,
    pub strategy: PerSide<String>,
    pub elapsed_ms: String,
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub context: ContextInfo,
    pub results: Vec<Record>,
    pub summary: Summary,
}

/// `f64` as positional decimal text (Rust's `Display` never uses exponents).
pub fn f64_text(x: f64) -> String {
    format!("{x}")
}

fn hp_text(x: &HpReal, digits: u32) -> String {
    x.to_decimal_string(digits)
}

fn side<T>(r: &VerificationResult, f: impl Fn(&Evaluated) -> T) -> PerSide<T> {
    PerSide { lhs: r.lhs.as_ref().map(&f), rhs: r.rhs.as_ref().map(&f) }
}

impl Record {
    pub fn from_result(r: &VerificationResult, digits: u32) -> Self {
        Record {
            id: r.id.clone(),
            params: r.params.0.iter().map(|(k, v)| (k.clone(), v.to_string())).collect(),
            lhs: r.lhs.as_ref().map(|e| hp_text(&e.value, digits)),
            rhs: r.rhs.as_ref().map(|e| hp_text(&e.value, digits)),
            abs_diff: r.abs_diff.as_ref().map(|d| hp_text(d, digits)),
            tolerance: f64_text(r.tolerance),
            pass: r.pass,
            terms_used: side(r, |e| e.diagnostics.terms_used),
            tail_correction: side(r, |e| hp_text(&e.diagnostics.tail_correction, digits)),
            error_estimate: side(r, |e| f64_text(e.diagnostics.error_estimate)),
            strategy: side(r, |e| e.diagnostics.strategy.to_string()),
            elapsed_ms: format!("{:.3}", r.elapsed.as_secs_f64() * 1e3),
            error: r.error.as_ref().map(|e| e.to_string()),
        }
    }

    /// Re-derives the pass flag from the serialized `abs_diff` and `tolerance`.
    pub fn recheck(&self) -> bool {
        let (Some(diff), Ok(tol)) = (self.abs_diff.as_deref(), parse_decimal(&self.tolerance)) else {
            return false;
        };
        parse_decimal(diff).is_ok_and(|d| d <= tol)
    }
}

impl Report {
    pub fn new(results: &[VerificationResult], ctx: &PrecisionContext) -> Self {
        let records: Vec<Record> = results.iter().map(|r| Record::from_result(r, ctx.digits)).collect();
        let passed = records.iter().filter(|r| r.pass).count();
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            context: ContextInfo { digits: ctx.digits, tol: f64_text(ctx.tol) },
            summary: Summary { total: records.len(), passed, failed: records.len() - passed },
            results: records,
        }
    }

    /// Summary recomputed from the records' serialized values.
    pub fn recheck(&self) -> Summary {
        let passed = self.results.iter().filter(|r| r.recheck()).count();
        Summary { total: self.results.len(), passed, failed: self.results.len() - passed }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
