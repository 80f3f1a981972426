use std::io::Write;

use serde::{Deserialize, Serialize};

use super::Resolution;
use crate::error::{Error, Result};
use crate::funcspace::io::fmt17;

/// Label attached to every ratio figure.
pub const RATIO_LABEL: &str = "empirical lower bound of the operator norm";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    /// `passed` means every residual is at most `tolerance`.
    Identity,
    /// `passed` means the stability criterion held.
    Ratio,
    /// Descriptive table; `passed` summarizes the marked entries.
    Table,
    /// No pass/fail semantics; `passed` is always true.
    Experimental,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub name: String,
    pub kind: ReportKind,
    pub inputs: serde_json::Value,
    pub residuals_or_ratios: Vec<(String, f64)>,
    pub tolerance: f64,
    pub passed: bool,
    pub runtime_ms: u64,
    pub resolution: Resolution,
    pub seed: u64,
    pub note: String,
}

impl ExperimentReport {
    /// Identity report: passes iff every residual is `≤ tolerance`.
    pub fn identity(
        name: impl Into<String>,
        inputs: serde_json::Value,
        residuals: Vec<(String, f64)>,
        tolerance: f64,
        resolution: Resolution,
        seed: u64,
    ) -> Self {
        let passed = residuals.iter().all(|(_, r)| *r <= tolerance);
        ExperimentReport {
            name: name.into(),
            kind: ReportKind::Identity,
            inputs,
            residuals_or_ratios: residuals,
            tolerance,
            passed,
            runtime_ms: 0,
            resolution,
            seed,
            note: String::new(),
        }
    }

    pub fn with_runtime(mut self, start: std::time::Instant) -> Self {
        self.runtime_ms = start.elapsed().as_millis() as u64;
        self
    }

    /// Largest finite residual or ratio (`NaN` when there is none).
    pub fn max_value(&self) -> f64 {
        self.residuals_or_ratios.iter().map(|(_, v)| *v).filter(|v| v.is_finite()).fold(f64::NAN, f64::max)
    }

    /// Value for `label`, if present.
    pub fn value(&self, label: &str) -> Option<f64> {
        self.residuals_or_ratios.iter().find(|(l, _)| l == label).map(|(_, v)| *v)
    }

    /// Bit patterns of all reported numbers, for reproducibility checks.
    pub fn fingerprint(&self) -> Vec<(String, u64)> {
        self.residuals_or_ratios.iter().map(|(l, v)| (l.clone(), v.to_bits())).collect()
    }

    /// One JSON object on one line; finite numbers carry 17 significant
    /// digits, non-finite ones become `null`.
    pub fn to_json_line(&self) -> Result<String> {
        to_json_17(self)
    }
}

/// Compact JSON with 17 significant digits per finite float and `null`
/// for non-finite ones.
pub fn to_json_17<S: Serialize + ?Sized>(value: &S) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Digits17);
    value.serialize(&mut ser).map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
}

struct Digits17;

impl serde_json::ser::Formatter for Digits17 {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()> {
        writer.write_all(fmt17(value).as_bytes())
    }
}

pub fn write_jsonl<W: Write>(reports: &[ExperimentReport], mut out: W) -> Result<()> {
    for r in reports {
        writeln!(out, "{}", r.to_json_line()?)?;
    }
    Ok(())
}

/// `name,passed,max_residual_or_ratio,runtime_ms`.
pub fn write_summary_csv<W: Write>(reports: &[ExperimentReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let map = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["name", "passed", "max_residual_or_ratio", "runtime_ms"]).map_err(map)?;
    for r in reports {
        w.write_record([r.name.clone(), r.passed.to_string(), fmt17(r.max_value()), r.runtime_ms.to_string()])
            .map_err(map)?;
    }
    w.flush()?;
    Ok(())
}
