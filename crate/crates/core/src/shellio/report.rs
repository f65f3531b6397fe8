use std::fmt::Write;

use crate::braided::{CheckOutcome, IdentityCheck};
use crate::exactfield::CycNumber;
use crate::hopfcore::HopfReport;
use crate::ydclass::Classification;

fn term(name: &str, c: &CycNumber) -> String {
    if c.is_one() {
        return name.to_string();
    }
    if (-c).is_one() {
        return format!("-{name}");
    }
    let text = c.pretty();
    match text.strip_prefix('-') {
        Some(rest) if !rest.contains(' ') => format!("-{rest}·{name}"),
        _ if !text.contains(' ') => format!("{text}·{name}"),
        _ => format!("({text})·{name}"),
    }
}

/// `span{…}` of vectors written on the named basis.
pub fn describe_span(names: &[String], vectors: &[Vec<CycNumber>]) -> String {
    let elements: Vec<String> = vectors
        .iter()
        .map(|v| {
            let terms: Vec<String> = v
                .iter()
                .zip(names)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, n)| term(n, c))
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ").replace("+ -", "- ")
            }
        })
        .collect();
    format!("span{{{}}}", elements.join(", "))
}

/// One row per block: D, N_W, number of irreducibles and their dimensions.
pub fn render_table(names: &[String], c: &Classification) -> String {
    let header = ["block", "D", "N_W", "count", "dims"].map(String::from);
    let mut rows = vec![header];
    for (i, b) in c.blocks.iter().enumerate() {
        let nw = match b.nw.as_h_elements() {
            Some(elements) if elements.len() <= 8 => describe_span(names, &elements),
            _ => format!("dim {}", b.nw.dim()),
        };
        let dims: Vec<String> = b.dims().iter().map(usize::to_string).collect();
        rows.push([
            format!("D{}", i + 1),
            describe_span(names, &b.block.vectors()),
            nw,
            b.modules.len().to_string(),
            dims.join(","),
        ]);
    }
    let widths: Vec<usize> = (0..5)
        .map(|k| rows.iter().map(|r| r[k].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = format!("field Q(zeta_{})\n", c.order);
    for row in &rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    let _ = writeln!(out, "total {} irreducibles, sum of squared dims {}", c.count(), c.sum_dim_sq());
    out
}

fn outcome_text(o: &CheckOutcome) -> String {
    match o {
        CheckOutcome::Pass => "pass".to_string(),
        CheckOutcome::Fail { witness } => format!("FAIL at {witness:?}"),
        CheckOutcome::Skipped { reason } => format!("skipped ({reason})"),
    }
}

pub fn render_identity_suite(checks: &[IdentityCheck]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    checks
        .iter()
        .map(|c| format!("{:width$}  {}\n", c.name, outcome_text(&c.outcome)))
        .collect()
}

pub fn render_verify(report: &HopfReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let status = match &c.witness {
            None => "pass".to_string(),
            Some(w) => format!("FAIL at {w:?}"),
        };
        let _ = writeln!(out, "{:<24}  {status}", c.axiom.to_string());
    }
    let flags = [
        ("s_squared_identity", report.s_squared_identity),
        ("unimodular", report.unimodular),
        ("dual_unimodular", report.dual_unimodular),
        ("semisimple", report.semisimple),
        ("cosemisimple", report.cosemisimple),
    ];
    for (name, value) in flags {
        let _ = writeln!(out, "{name:<24}  {value}");
    }
    out
}
