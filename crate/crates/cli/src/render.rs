//! Text and JSON output.

use std::collections::BTreeMap;
use std::fmt::Write;

use covtype::catalog::{CatalogEntry, Evaluation, Method, PrintedValue, Status};
use covtype::{BoundTarget, SearchOutcome, WctReport, WeightedSequence};
use serde::Serialize;

/// Per-k table, totals, refinements and the bounded quantities.
pub fn wct_table(sequence: &WeightedSequence, report: &WctReport) -> String {
    let mut out = String::new();
    writeln!(out, "sequence: {}", sequence.describe()).unwrap();
    writeln!(out, "total weight: {}", report.total_weight).unwrap();
    out.push('\n');
    out.push_str(&dmax_table(report));
    out.push('\n');
    let dims: i64 = report.dmax_table.iter().map(|r| r.dimension).sum();
    writeln!(
        out,
        "wct = 1 + {} + {} = {}",
        report.total_weight, dims, report.base_value
    )
    .unwrap();
    if report.refinements_applied.is_empty() {
        out.push_str("refinements: none\n");
    } else {
        out.push_str("refinements:\n");
        for r in &report.refinements_applied {
            let name = serde_json::to_value(r.name).expect("enum serializes");
            let name = name.as_str().unwrap_or_default();
            writeln!(out, "  +{} {}: {}", r.delta, name, r.rationale).unwrap();
        }
    }
    out.push_str(&bound_lines(report.bound_target, report.final_value, report.delta_applies));
    out
}

pub fn bound_lines(target: BoundTarget, value: i64, delta: bool) -> String {
    let mut out = format!("{} ≥ {}\n", target.label(), value);
    if delta {
        writeln!(out, "Δ ≥ {value}").unwrap();
    }
    out
}

fn dmax_table(report: &WctReport) -> String {
    let rows: Vec<(String, String, String)> = report
        .dmax_table
        .iter()
        .map(|r| {
            let product = if r.witness.factors.is_empty() {
                "–".to_string()
            } else {
                r.witness.product.clone()
            };
            (r.k.to_string(), product, r.dimension.to_string())
        })
        .collect();
    let header = ("k", "subproduct", "dimension");
    let width = |f: fn(&(String, String, String)) -> usize, h: &str| {
        rows.iter().map(f).max().unwrap_or(0).max(h.chars().count())
    };
    let wk = width(|r| r.0.chars().count(), header.0);
    let wp = width(|r| r.1.chars().count(), header.1);
    let wd = width(|r| r.2.chars().count(), header.2);
    let mut out = String::new();
    writeln!(out, "{:>wk$} | {:<wp$} | {:>wd$}", header.0, header.1, header.2).unwrap();
    writeln!(out, "{}-+-{}-+-{}", "-".repeat(wk), "-".repeat(wp), "-".repeat(wd)).unwrap();
    for (k, p, d) in &rows {
        // pad by characters, not bytes, so the en dash lines up
        let pad = wp - p.chars().count();
        writeln!(out, "{k:>wk$} | {p}{} | {d:>wd$}", " ".repeat(pad)).unwrap();
    }
    out
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
pub struct SwctJson<'a> {
    pub value: i64,
    pub bound_target: BoundTarget,
    pub witness: String,
    pub classes_examined: u64,
    pub max_total_degree: u32,
    pub max_factors: u32,
    pub report: &'a WctReport,
}

pub fn swct_table(outcome: &SearchOutcome, report: &WctReport) -> String {
    let mut out = String::new();
    writeln!(out, "witness: {}", outcome.witness.describe()).unwrap();
    writeln!(out, "classes examined: {}", outcome.classes_examined).unwrap();
    out.push_str(&wct_table(&outcome.witness, report));
    out
}

#[derive(Serialize)]
pub struct CatalogJson<'a> {
    pub name: &'a str,
    pub params: BTreeMap<String, String>,
    pub method: &'static str,
    pub sequence: String,
    pub computed: i64,
    pub bound_target: BoundTarget,
    pub expected: Option<i64>,
    pub expected_source: &'a str,
    pub status: Status,
    pub printed: &'a [PrintedValue],
    pub discrepancy_note: Option<&'a str>,
    pub notes: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes_examined: Option<u64>,
    pub report: &'a WctReport,
}

fn method_name(entry: &CatalogEntry) -> &'static str {
    match entry.method {
        Method::Sequence { .. } => "sequence",
        Method::Search { .. } => "search",
        Method::Category { .. } => "category",
    }
}

pub fn catalog_json<'a>(entry: &'a CatalogEntry, ev: &'a Evaluation) -> CatalogJson<'a> {
    CatalogJson {
        name: &entry.name,
        params: entry.params.iter().cloned().collect(),
        method: method_name(entry),
        sequence: ev.sequence.describe(),
        computed: ev.computed,
        bound_target: ev.bound_target,
        expected: entry.expected,
        expected_source: &entry.expected_source,
        status: ev.status,
        printed: &entry.printed,
        discrepancy_note: entry.discrepancy_note.as_deref(),
        notes: &entry.notes,
        classes_examined: ev.classes_examined,
        report: &ev.report,
    }
}

pub fn entry_title(entry: &CatalogEntry) -> String {
    let mut title = entry.name.clone();
    for (k, v) in &entry.params {
        write!(title, " {k}={v}").unwrap();
    }
    title
}

pub fn catalog_table(entry: &CatalogEntry, ev: &Evaluation) -> String {
    let mut out = String::new();
    writeln!(out, "entry: {}", entry_title(entry)).unwrap();
    match &entry.method {
        Method::Sequence { .. } => {
            out.push_str(&wct_table(&ev.sequence, &ev.report));
        }
        Method::Search { budget } => {
            writeln!(
                out,
                "method: exhaustive search (degree ≤ {}, at most {} factors)",
                budget.max_total_degree, budget.max_factors
            )
            .unwrap();
            writeln!(out, "witness: {}", ev.sequence.describe()).unwrap();
            if let Some(n) = ev.classes_examined {
                writeln!(out, "classes examined: {n}").unwrap();
            }
            out.push_str(&bound_lines(ev.bound_target, ev.computed, true));
        }
        Method::Category { cat, .. } => {
            writeln!(out, "method: category bound, cat = {cat}").unwrap();
            writeln!(out, "comparison sequence {}: wct = {}", ev.sequence.describe(), ev.report.base_value).unwrap();
            out.push_str(&bound_lines(ev.bound_target, ev.computed, true));
        }
    }
    writeln!(out, "computed: {}", ev.computed).unwrap();
    match entry.expected {
        Some(e) => writeln!(out, "expected: {e} ({})", entry.expected_source).unwrap(),
        None => out.push_str("expected: none\n"),
    }
    if !entry.printed.is_empty() {
        out.push_str("printed values:\n");
        for p in &entry.printed {
            let mark = if p.printed == p.recomputed { "agrees" } else { "DIFFERS" };
            writeln!(
                out,
                "  {}: printed {}, recomputed {} ({mark})",
                p.label, p.printed, p.recomputed
            )
            .unwrap();
        }
    }
    for note in &entry.notes {
        writeln!(out, "note: {note}").unwrap();
    }
    if let Some(d) = &entry.discrepancy_note {
        writeln!(out, "discrepancy: {d}").unwrap();
    }
    writeln!(out, "status: {}", ev.status).unwrap();
    out
}

pub fn catalog_line(entry: &CatalogEntry, ev: &Evaluation) -> String {
    let expected = entry.expected.map_or("-".to_string(), |e| e.to_string());
    format!(
        "{:<12} {:<48} computed {:>6}  expected {:>6}\n",
        ev.status.to_string(),
        entry_title(entry),
        ev.computed,
        expected
    )
}
