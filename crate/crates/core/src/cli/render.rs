//! Markdown, CSV and JSON renderings of reports and tables.

use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Number, Value};

use crate::error::{Error, Result};
use crate::exactalg::Int;
use crate::identities::{CheckReport, Counterexample, Status};
use crate::sequences::SeqTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    check: &'a str,
    params: &'a std::collections::BTreeMap<String, i64>,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<&'a Counterexample>,
    elapsed_ms: Option<f64>,
}

fn params_text(r: &CheckReport) -> String {
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn elapsed_ms(r: &CheckReport) -> f64 {
    (r.elapsed.as_secs_f64() * 1e6).round() / 1e3
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Renders reports in the given order; durations only when `timings` is set.
pub fn render_reports(reports: &[CheckReport], format: Format, timings: bool) -> Result<String> {
    match format {
        Format::Md => {
            let mut out = String::from("| check | params | status | counterexample |");
            out += if timings {
                " elapsed_ms |\n|---|---|---|---|---|\n"
            } else {
                "\n|---|---|---|---|\n"
            };
            for r in reports {
                let ce = r
                    .counterexample
                    .as_ref()
                    .map(|c| {
                        md_escape(&format!(
                            "{}: lhs = {}, rhs = {}",
                            c.assignment, c.lhs, c.rhs
                        ))
                    })
                    .unwrap_or_default();
                out += &format!(
                    "| {} | {} | {} | {} |",
                    r.check,
                    params_text(r),
                    r.status,
                    ce
                );
                if timings {
                    out += &format!(" {} |", elapsed_ms(r));
                }
                out.push('\n');
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            out += &format!(
                "\n{} checks, {} passed, {} failed\n",
                reports.len(),
                reports.len() - failed,
                failed
            );
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["check", "params", "status", "assignment", "lhs", "rhs"];
            if timings {
                header.push("elapsed_ms");
            }
            w.write_record(&header).map_err(csv_err)?;
            for r in reports {
                let ce = r.counterexample.as_ref();
                let field = |f: fn(&Counterexample) -> &str| ce.map(f).unwrap_or("").to_string();
                let mut rec = vec![
                    r.check.clone(),
                    params_text(r),
                    r.status.to_string(),
                    field(|c| &c.assignment),
                    field(|c| &c.lhs),
                    field(|c| &c.rhs),
                ];
                if timings {
                    rec.push(elapsed_ms(r).to_string());
                }
                w.write_record(&rec).map_err(csv_err)?;
            }
            finish_csv(w)
        }
        Format::Json => {
            let docs: Vec<JsonReport> = reports
                .iter()
                .map(|r| JsonReport {
                    check: &r.check,
                    params: &r.params,
                    status: r.status,
                    counterexample: r.counterexample.as_ref(),
                    elapsed_ms: timings.then(|| elapsed_ms(r)),
                })
                .collect();
            let mut s =
                serde_json::to_string_pretty(&docs).map_err(|e| Error::Usage(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Usage(format!("csv output failed: {e}"))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Usage(format!("csv output failed: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Usage(e.to_string()))
}

fn cell_text(c: &Option<Int>) -> String {
    c.as_ref().map(Int::to_string).unwrap_or_default()
}

/// Renders a table. `notes` go below the Markdown table and into a `notes`
/// array in JSON; CSV carries the numbers only.
pub fn render_table(t: &SeqTable, format: Format, notes: &[String]) -> Result<String> {
    match format {
        Format::Md => {
            let mut out = format!("| {} |", t.kind.corner());
            for c in &t.cols {
                out += &format!(" {c} |");
            }
            out += &format!("\n|{}\n", "---|".repeat(t.cols.len() + 1));
            for (row, cells) in t.rows.iter().zip(&t.cells) {
                out += &format!("| {row} |");
                for c in cells {
                    out += &format!(" {} |", cell_text(c));
                }
                out.push('\n');
            }
            for n in notes {
                out += &format!("\nNote: {n}\n");
            }
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec![t.kind.corner().to_string()];
            header.extend(t.cols.iter().map(i64::to_string));
            w.write_record(&header).map_err(csv_err)?;
            for (row, cells) in t.rows.iter().zip(&t.cells) {
                let mut rec = vec![row.to_string()];
                rec.extend(cells.iter().map(cell_text));
                w.write_record(&rec).map_err(csv_err)?;
            }
            finish_csv(w)
        }
        Format::Json => {
            let num = |c: &Option<Int>| -> Value {
                c.as_ref().map_or(Value::Null, |v| {
                    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
                })
            };
            let cells: Vec<Vec<Value>> = t
                .cells
                .iter()
                .map(|row| row.iter().map(num).collect())
                .collect();
            let doc = json!({
                "table": t.kind.to_string(),
                "rows": t.rows,
                "cols": t.cols,
                "cells": cells,
                "notes": notes,
            });
            let mut s =
                serde_json::to_string_pretty(&doc).map_err(|e| Error::Usage(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{table, TableKind};

    #[test]
    fn empty_report_documents() {
        assert_eq!(render_reports(&[], Format::Json, false).unwrap(), "[]\n");
        assert_eq!(
            render_reports(&[], Format::Csv, false).unwrap(),
            "check,params,status,assignment,lhs,rhs\n"
        );
        assert!(render_reports(&[], Format::Md, false)
            .unwrap()
            .contains("0 checks"));
    }

    #[test]
    fn big_values_stay_exact_in_json() {
        let t = table(TableKind::Fib, 2..=2, 200..=200).unwrap();
        let s = render_table(&t, Format::Json, &[]).unwrap();
        let want = t.cells[0][0].as_ref().unwrap().to_string();
        assert!(want.len() > 30);
        assert!(s.contains(&want));
    }

    #[test]
    fn blank_cells() {
        let t = table(TableKind::Cnk, 0..=2, 0..=1).unwrap();
        assert_eq!(
            render_table(&t, Format::Csv, &[]).unwrap(),
            "n\\k,0,1\n0,1,\n1,1,\n2,1,1\n"
        );
        assert!(render_table(&t, Format::Json, &[])
            .unwrap()
            .contains("null"));
    }
}
