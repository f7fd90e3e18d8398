//! Text tables and JSON for reports.

use bihom_core::report::IdentityReport;
use serde_json::{json, Value};

fn row(r: &IdentityReport, labels: &[String]) -> [String; 5] {
    let mut detail: Vec<String> = Vec::new();
    if let Some(p) = &r.part {
        detail.push(format!("part {p}"));
    }
    if !r.side_conditions.is_empty() {
        let conds: Vec<String> = r.side_conditions.iter().map(|c| c.to_string()).collect();
        detail.push(format!("assuming {}", conds.join(", ")));
    }
    if let Some(n) = &r.note {
        detail.push(n.clone());
    }
    [
        r.identity.clone(),
        r.verdict.to_string(),
        r.witness.as_ref().map(|w| w.render(labels)).unwrap_or_default(),
        r.residual.as_ref().map(|x| x.display(labels).to_string()).unwrap_or_default(),
        detail.join("; "),
    ]
}

/// Aligned table with one line per report.
pub fn reports_table(reports: &[IdentityReport], labels: &[String]) -> String {
    let header = ["identity", "verdict", "witness", "residual", "notes"].map(String::from);
    let rows: Vec<[String; 5]> = reports.iter().map(|r| row(r, labels)).collect();
    let mut widths = header.clone().map(|h| h.len());
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for r in std::iter::once(&header).chain(&rows) {
        let cells: Vec<String> = r
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn reports_json(reports: &[IdentityReport], labels: &[String]) -> Value {
    Value::Array(
        reports
            .iter()
            .map(|r| {
                json!({
                    "identity": r.identity,
                    "verdict": r.verdict.as_str(),
                    "witness": r.witness.as_ref().map(|w| w.render(labels)),
                    "part": r.part,
                    "residual": r.residual.as_ref().map(|x| x.display(labels).to_string()),
                    "side_conditions": r.side_conditions.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "note": r.note,
                })
            })
            .collect(),
    )
}

/// `[a, b; c, d]`.
pub fn matrix_inline(rows: &[Vec<String>]) -> String {
    let rows: Vec<String> = rows.iter().map(|r| r.join(", ")).collect();
    format!("[{}]", rows.join("; "))
}
