//! Report rendering: pretty JSON for machines, CSV for spreadsheets, and
//! aligned tables for eyeballs.
//!
//! JSON uses the serde shape of the report types directly, so parsing the
//! emitted text and re-rendering it reproduces the bytes. CSV emits one row
//! per (identity, parameter-cell); the parameter column joins `key=value`
//! pairs in their canonical (sorted) order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use fgp_core::verify::{IdentityReport, SuiteReport, Verdict};
use fgp_core::{Error, Result};

/// Output encodings shared by `verify` and `suite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Canonical single-line form of a parameter map.
pub fn params_inline(params: &BTreeMap<String, String>) -> String {
    if params.is_empty() {
        return "-".to_string();
    }
    params
        .iter()
        .map(|(key, value)| format!("{key}={value}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn verdict_label(verdict: Verdict) -> &'static str {
    match verdict {
        Verdict::VerifiedAtAllPoints => "verified-at-all-points",
        Verdict::Failed => "failed",
    }
}

fn encoding_error(detail: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("could not encode report: {detail}"))
}

pub fn render_report(report: &IdentityReport, format: Format) -> Result<String> {
    match format {
        Format::Json => serde_json::to_string_pretty(report).map_err(encoding_error),
        Format::Csv => csv_table(std::slice::from_ref(report)),
        Format::Text => Ok(text_report(report)),
    }
}

pub fn render_suite(report: &SuiteReport, format: Format) -> Result<String> {
    match format {
        Format::Json => serde_json::to_string_pretty(report).map_err(encoding_error),
        Format::Csv => csv_table(&report.cells),
        Format::Text => Ok(text_suite(report)),
    }
}

fn csv_table(cells: &[IdentityReport]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["identity", "params", "points", "failures", "verdict"])
        .map_err(encoding_error)?;
    for cell in cells {
        writer
            .write_record([
                cell.identity.clone(),
                params_inline(&cell.params),
                cell.points.to_string(),
                cell.failures.len().to_string(),
                verdict_label(cell.verdict).to_string(),
            ])
            .map_err(encoding_error)?;
    }
    let bytes = writer.into_inner().map_err(encoding_error)?;
    let mut table = String::from_utf8(bytes).map_err(encoding_error)?;
    // The writer terminates the last record; the caller appends the final
    // newline, like every other format.
    table.truncate(table.trim_end_matches('\n').len());
    Ok(table)
}

fn text_report(report: &IdentityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "identity  {}", report.identity);
    let _ = writeln!(out, "params    {}", params_inline(&report.params));
    let _ = writeln!(out, "points    {}", report.points);
    let _ = write!(out, "verdict   {}", verdict_label(report.verdict));
    for witness in &report.failures {
        let _ = write!(
            out,
            "\nfailure   lhs={} rhs={} at {}",
            witness.lhs,
            witness.rhs,
            params_inline(&witness.assignment)
        );
    }
    out
}

fn text_suite(report: &SuiteReport) -> String {
    let id_width = report
        .cells
        .iter()
        .map(|cell| cell.identity.len())
        .max()
        .unwrap_or(8)
        .max("identity".len());
    let verdict_width = "verified-at-all-points".len();

    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<id_width$}  {:>6}  {:<verdict_width$}  params",
        "identity", "points", "verdict"
    );
    for cell in &report.cells {
        let _ = writeln!(
            out,
            "{:<id_width$}  {:>6}  {:<verdict_width$}  {}",
            cell.identity,
            cell.points,
            verdict_label(cell.verdict),
            params_inline(&cell.params)
        );
    }
    let failing = report
        .cells
        .iter()
        .filter(|cell| !cell.is_verified())
        .count();
    let _ = write!(
        out,
        "{} cells, {} (seed {})",
        report.cells.len(),
        if failing == 0 {
            "all verified".to_string()
        } else {
            format!("{failing} FAILED")
        },
        report.seed
    );
    out
}
