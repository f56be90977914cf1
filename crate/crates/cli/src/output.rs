//! Rendering of reports and orbits; everything is written in one piece so
//! repeated runs produce identical bytes.

use std::fs;
use std::io::Write;
use std::path::Path;

use qpvi::report::SuiteReport;
use serde::Serialize;

use crate::args::Format;
use crate::error::{CliError, CliResult};

pub fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// Writes to `out`, or to stdout when absent.
pub fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

pub fn to_json<T: Serialize>(v: &T) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

pub fn render_report(r: &SuiteReport, format: Format) -> CliResult<String> {
    match format {
        Format::Json => to_json(r),
        Format::Csv => report_csv(r),
        Format::Text => Ok(report_text(r)),
    }
}

fn report_csv(r: &SuiteReport) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["suite", "relation", "n", "trials", "pass", "points_used", "failures"])?;
    for rel in &r.relations {
        w.write_record([
            r.suite.clone(),
            rel.relation.clone(),
            rel.n.to_string(),
            rel.trials.to_string(),
            rel.pass.to_string(),
            rel.points_used.to_string(),
            rel.failures.len().to_string(),
        ])?;
    }
    finish_csv(w)
}

fn report_text(r: &SuiteReport) -> String {
    let verdict = |p: bool| if p { "PASS" } else { "FAIL" };
    let mut s = format!("{} {} (n = {}, seed = {})\n", verdict(r.pass), r.suite, r.n, r.seed);
    for rel in &r.relations {
        s += &format!("  {} {} [{} points]\n", verdict(rel.pass), rel.relation, rel.points_used);
    }
    for note in &r.notes {
        s += &format!("  note: {note}\n");
    }
    s
}

/// The failed relations with their witnesses, for stderr.
pub fn failure_report(r: &SuiteReport) -> CliResult<String> {
    let failed: Vec<_> = r.relations.iter().filter(|x| !x.pass).collect();
    to_json(&serde_json::json!({ "suite": r.suite, "n": r.n, "seed": r.seed, "failed": failed }))
}

/// A table with a header row; cells are already strings.
pub fn table_csv(header: &[String], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    finish_csv(w)
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> CliResult<String> {
    let bytes = w.into_inner().map_err(|e| CliError::Csv(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
