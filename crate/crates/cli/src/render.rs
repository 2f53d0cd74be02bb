//! Text, markdown, CSV and JSON renderings of command results.

use std::fmt::Write;

use serde::Serialize;

use psc_core::analysis::{coprime5_catalog, order_coprime_to, ComplexDiff, PurityReport, ScreenRow, SporadicSizeRow};
use psc_core::groups::ReePurity;
use psc_core::{PrimeComplex, PrimeSimplex, Result};

use crate::TableFormat;

pub fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes") + "\n"
}

pub fn complex_text(c: &PrimeComplex) -> String {
    let vertices: Vec<String> = c.vertices().iter().map(u64::to_string).collect();
    let maximal: Vec<String> = c.maximal().iter().map(PrimeSimplex::to_string).collect();
    format!("vertices: {}\nmaximal: {}\n", vertices.join(", "), maximal.join(", "))
}

/// A table with a header row, emitted as markdown or CSV.
fn table(header: &[&str], rows: &[Vec<String>], format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            let quote = |cell: &str| {
                if cell.contains([',', '"']) {
                    format!("\"{}\"", cell.replace('"', "\"\""))
                } else {
                    cell.to_string()
                }
            };
            writeln!(out, "{}", header.join(",")).unwrap();
            for row in rows {
                let cells: Vec<String> = row.iter().map(|c| quote(c)).collect();
                writeln!(out, "{}", cells.join(",")).unwrap();
            }
        }
        _ => {
            writeln!(out, "| {} |", header.join(" | ")).unwrap();
            writeln!(out, "|{}", "---|".repeat(header.len())).unwrap();
            for row in rows {
                writeln!(out, "| {} |", row.join(" | ")).unwrap();
            }
        }
    }
    out
}

fn witness_cell(r: &PurityReport) -> String {
    match &r.witness {
        Some((a, b)) => format!("{a} / {b}"),
        None => String::new(),
    }
}

pub fn purity_scan(reports: &[PurityReport], format: TableFormat) -> String {
    if let TableFormat::Json = format {
        return json(&reports);
    }
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.spec.clone(),
                if r.pure { "pure" } else { "impure" }.to_string(),
                r.max_size.to_string(),
                r.min_maximal_size.to_string(),
                witness_cell(r),
            ]
        })
        .collect();
    table(&["group", "purity", "largest", "smallest maximal", "witness"], &rows, format)
}

pub fn ree_scan(rows: &[ReePurity], format: TableFormat) -> String {
    if let TableFormat::Json = format {
        return json(&rows);
    }
    let rows: Vec<Vec<String>> = rows
        .iter()
        .map(|w| {
            vec![
                format!("2G2(3^{})", 2 * w.m + 1),
                if w.pure { "pure" } else { "impure" }.to_string(),
                format!("{:?}", w.torus),
                w.torus_order.to_string(),
                w.support.to_string(),
            ]
        })
        .collect();
    table(&["group", "purity", "torus", "torus order", "support"], &rows, format)
}

pub fn diff(d: &ComplexDiff) -> String {
    if d.equal {
        return "equal\n".to_string();
    }
    let mut out = String::from("different\n");
    for s in &d.only_left {
        writeln!(out, "only left: {s}").unwrap();
    }
    for s in &d.only_right {
        writeln!(out, "only right: {s}").unwrap();
    }
    out
}

/// Grid with candidate characteristics as rows; bad cells are bold in markdown.
pub fn screen(allowed: &PrimeSimplex, rows: &[ScreenRow], format: TableFormat) -> String {
    match format {
        TableFormat::Json => json(&rows),
        TableFormat::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![r.p.to_string(), r.r.to_string(), r.order.to_string(), r.bad.to_string()])
                .collect();
            table(&["p", "r", "order", "bad"], &body, format)
        }
        TableFormat::Markdown => {
            let mut ps: Vec<u64> = rows.iter().map(|r| r.p).collect();
            ps.dedup();
            let mut header = vec!["p \\ r".to_string()];
            header.extend(allowed.primes().iter().map(u64::to_string));
            let body: Vec<Vec<String>> = ps
                .iter()
                .map(|&p| {
                    let mut row = vec![p.to_string()];
                    for &r in allowed.primes() {
                        row.push(match rows.iter().find(|c| c.p == p && c.r == r) {
                            Some(c) if c.bad => format!("**{}**", c.order),
                            Some(c) => c.order.to_string(),
                            None => "-".to_string(),
                        });
                    }
                    row
                })
                .collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            table(&header, &body, format)
        }
    }
}

pub fn sporadic(rows: &[SporadicSizeRow], format: TableFormat) -> String {
    if let TableFormat::Json = format {
        return json(&rows);
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| vec![r.group.clone(), r.max_size.to_string(), r.min_maximal_size.to_string()])
        .collect();
    table(&["group", "largest simplex", "smallest maximal simplex"], &body, format)
}

#[derive(Serialize)]
struct Coprime5Row {
    group: &'static str,
    q: u64,
    #[serde(serialize_with = "psc_core::io::serialize_decimal")]
    order: num_bigint::BigUint,
    coprime_to_5: bool,
}

pub fn coprime5(q_max: u64, format: TableFormat) -> Result<String> {
    let mut rows = Vec::new();
    for entry in coprime5_catalog() {
        for q in 2..=q_max {
            if entry.admits(q) {
                rows.push(Coprime5Row {
                    group: entry.label,
                    q,
                    order: entry.order(q)?,
                    coprime_to_5: order_coprime_to(&entry, q, 5)?,
                });
            }
        }
    }
    if let TableFormat::Json = format {
        return Ok(json(&rows));
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| vec![r.group.to_string(), r.q.to_string(), r.order.to_string(), r.coprime_to_5.to_string()])
        .collect();
    Ok(table(&["group", "q", "order", "coprime to 5"], &body, format))
}
