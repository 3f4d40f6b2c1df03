//! Text, JSON and CSV renderings. All output is a pure function of its input.

use std::fmt::Write;

use itertools::Itertools;
use serde::Serialize;

use hurmono::golden::Summary;
use hurmono::{Boundary, HurwitzSpec, MarkedTuple, Partition, SpaceReport};

use crate::Format;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct Versioned<'a, T: Serialize> {
    schema_version: u32,
    #[serde(flatten)]
    body: &'a T,
}

fn json<T: Serialize>(body: &T) -> String {
    let mut s = serde_json::to_string_pretty(&Versioned {
        schema_version: SCHEMA_VERSION,
        body,
    })
    .expect("report types serialize");
    s.push('\n');
    s
}

fn csv_of(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("write to memory");
    for r in rows {
        w.write_record(&r).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
}

#[derive(Serialize)]
struct SheetList<'a> {
    space: &'a HurwitzSpec,
    sheet_count: usize,
    sheets: &'a [MarkedTuple],
}

pub fn sheets(format: Format, spec: &HurwitzSpec, sheets: &[MarkedTuple]) -> String {
    match format {
        Format::Json => json(&SheetList {
            space: spec,
            sheet_count: sheets.len(),
            sheets,
        }),
        Format::Csv => {
            let mut rows = Vec::new();
            for (k, t) in sheets.iter().enumerate() {
                for (i, (p, m)) in t.perms().iter().zip(t.markings()).enumerate() {
                    let cycles = p.cycles();
                    for (c, &(_, label)) in cycles.cycles().iter().zip(m.entries()) {
                        rows.push(vec![
                            (k + 1).to_string(),
                            (i + 1).to_string(),
                            c.iter().join(" "),
                            label.to_string(),
                        ]);
                    }
                }
            }
            csv_of(&["sheet", "fiber", "cycle", "label"], rows)
        }
        Format::Text => {
            let mut s = format!("{spec}: {} sheets\n", sheets.len());
            for (k, t) in sheets.iter().enumerate() {
                writeln!(s, "{:>5}  {t}", k + 1).unwrap();
            }
            s
        }
    }
}

fn profiles(ps: &[Partition]) -> String {
    ps.iter().join(" ")
}

fn cycles(cs: &[Vec<usize>]) -> String {
    cs.iter()
        .map(|c| format!("({})", c.iter().join(" ")))
        .join("")
}

pub fn report(format: Format, r: &SpaceReport) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let rows = r.components.iter().enumerate().map(|(k, c)| {
                let mut row = vec![
                    (k + 1).to_string(),
                    c.degree.to_string(),
                    c.genus.to_string(),
                ];
                row.extend(Boundary::ALL.iter().map(|&b| c.ram.get(b).to_csv()));
                row.extend(Boundary::ALL.iter().map(|&b| {
                    c.node_profiles
                        .get(b)
                        .iter()
                        .map(Partition::to_csv)
                        .join(";")
                }));
                row.push(c.sheets.iter().join(" "));
                row
            });
            csv_of(
                &[
                    "component",
                    "degree",
                    "genus",
                    "ram_zero",
                    "ram_one",
                    "ram_infty",
                    "nodes_zero",
                    "nodes_one",
                    "nodes_infty",
                    "sheets",
                ],
                rows,
            )
        }
        Format::Text => {
            let n = r.components.len();
            let mut s = format!(
                "{}: {} sheets, {n} component{}\n",
                r.space,
                r.sheet_count,
                if n == 1 { "" } else { "s" }
            );
            for (k, c) in r.components.iter().enumerate() {
                writeln!(
                    s,
                    "component {}: degree {}, genus {}",
                    k + 1,
                    c.degree,
                    c.genus
                )
                .unwrap();
                for b in Boundary::ALL {
                    writeln!(
                        s,
                        "  {:<5} ram {}  nodes {}",
                        b.name(),
                        c.ram.get(b),
                        profiles(c.node_profiles.get(b))
                    )
                    .unwrap();
                }
                writeln!(s, "  sheets {}", c.sheets.iter().join(" ")).unwrap();
                if let Some(m) = &c.monodromy {
                    for b in Boundary::ALL {
                        writeln!(s, "  s_{:<5} {}", b.name(), cycles(m.get(b))).unwrap();
                    }
                }
            }
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            writeln!(
                s,
                "s_zero s_one s_infty trivial: {}; s_infty s_one s_zero trivial: {}",
                yes_no(r.zero_one_infty_trivial),
                yes_no(r.infty_one_zero_trivial)
            )
            .unwrap();
            s
        }
    }
}

pub fn summary(format: Format, s: &Summary) -> String {
    let total = s.passed + s.failed;
    match format {
        Format::Json => json(s),
        Format::Csv => csv_of(
            &["line", "space", "pass", "sheets", "expected", "computed"],
            s.results.iter().map(|(row, v)| {
                vec![
                    row.line.to_string(),
                    row.spec.to_string(),
                    v.pass.to_string(),
                    v.sheet_count.to_string(),
                    v.expected.iter().join(" "),
                    v.computed.iter().join(" "),
                ]
            }),
        ),
        Format::Text => {
            let mut out = String::new();
            for (row, v) in s.results.iter().filter(|(_, v)| !v.pass) {
                writeln!(out, "FAIL line {}: {}", row.line, row.spec).unwrap();
                if !row.citation.is_empty() {
                    writeln!(out, "  # {}", row.citation).unwrap();
                }
                for reason in &v.reasons {
                    writeln!(out, "  {reason}").unwrap();
                }
            }
            writeln!(out, "{}/{} pass", s.passed, total).unwrap();
            out
        }
    }
}
