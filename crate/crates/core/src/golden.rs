//! Golden component tables and their verification.
//!
//! File format, one row per line:
//!
//! ```text
//! degrees=<csv> genera=<csv> profiles=<p1;p2;p3;p4> expect=<count:genus:degree,...>
//! ```
//!
//! `#` starts a comment. The comment lines directly above a row are kept as its
//! citation. A degree of `*` is recorded but not asserted.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{report, ComponentReport};
use crate::error::{Error, Result};
use crate::space::HurwitzSpec;

/// The table shipped with the crate.
pub const EMBEDDED_GOLDENS: &str = include_str!("../data/goldens.txt");

/// `count` components of genus `genus`, each mapping with degree `degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Expectation {
    pub count: usize,
    pub genus: usize,
    /// `None` when the degree is not asserted.
    pub degree: Option<usize>,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            Some(d) => write!(f, "{}:{}:{}", self.count, self.genus, d),
            None => write!(f, "{}:{}:*", self.count, self.genus),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenRow {
    /// 1-based line number in the source file.
    pub line: usize,
    pub citation: String,
    pub spec: HurwitzSpec,
    pub expected: Vec<Expectation>,
}

impl GoldenRow {
    pub fn degree(&self) -> usize {
        self.spec.degree()
    }

    fn asserts_degrees(&self) -> bool {
        self.expected.iter().all(|e| e.degree.is_some())
    }
}

pub fn parse_goldens(text: &str) -> Result<Vec<GoldenRow>> {
    let mut rows = Vec::new();
    let mut citation: Vec<&str> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            citation.clear();
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            citation.push(comment.trim());
            continue;
        }
        rows.push(parse_row(raw, line, citation.join(" "))?);
        citation.clear();
    }
    Ok(rows)
}

fn parse_row(raw: &str, line: usize, citation: String) -> Result<GoldenRow> {
    let err = |column: usize, message: String| Error::Golden {
        line,
        column,
        message,
    };
    let mut fields: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    let mut offset = 0;
    for token in raw.split(' ') {
        let column = offset + 1;
        offset += token.len() + 1;
        if token.is_empty() {
            continue;
        }
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| err(column, format!("expected key=value, found '{token}'")))?;
        if !["degrees", "genera", "profiles", "expect"].contains(&key) {
            return Err(err(column, format!("unknown field '{key}'")));
        }
        if fields.insert(key, (column, value)).is_some() {
            return Err(err(column, format!("duplicate field '{key}'")));
        }
    }
    let field = |key: &str| {
        fields
            .get(key)
            .copied()
            .ok_or_else(|| err(1, format!("missing field '{key}'")))
    };
    let (dc, degrees) = field("degrees")?;
    let (_, genera) = field("genera")?;
    let (_, profiles) = field("profiles")?;
    let (ec, expect) = field("expect")?;
    let spec =
        HurwitzSpec::from_flags(degrees, genera, profiles).map_err(|e| err(dc, e.to_string()))?;
    let expected = expect
        .split(',')
        .map(|item| {
            parse_expectation(item).ok_or_else(|| err(ec, format!("bad expectation '{item}'")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut expected = expected;
    expected.sort();
    Ok(GoldenRow {
        line,
        citation,
        spec,
        expected,
    })
}

fn parse_expectation(item: &str) -> Option<Expectation> {
    let (count, genus, degree) = item.split(':').collect_tuple()?;
    let degree = match degree {
        "*" => None,
        d => Some(d.parse().ok().filter(|&d: &usize| d > 0)?),
    };
    Some(Expectation {
        count: count.parse().ok().filter(|&c: &usize| c > 0)?,
        genus: genus.parse().ok()?,
        degree,
    })
}

pub fn embedded_rows() -> Vec<GoldenRow> {
    parse_goldens(EMBEDDED_GOLDENS).expect("embedded golden file parses")
}

/// Groups components into `(count, genus, degree)` entries, sorted.
pub fn tally(components: &[ComponentReport]) -> Vec<Expectation> {
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in components {
        *counts.entry((c.genus, c.degree)).or_default() += 1;
    }
    let mut out: Vec<Expectation> = counts
        .into_iter()
        .map(|((genus, degree), count)| Expectation {
            count,
            genus,
            degree: Some(degree),
        })
        .collect();
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    pub sheet_count: usize,
    pub computed: Vec<Expectation>,
    pub expected: Vec<Expectation>,
    /// Why the row failed, empty on success.
    pub reasons: Vec<String>,
}

pub fn verify_row(row: &GoldenRow) -> Result<Verdict> {
    let report = report(&row.spec)?;
    let computed = tally(&report.components);
    let mut reasons = Vec::new();

    if row.asserts_degrees() {
        if computed != row.expected {
            reasons.push(format!(
                "components: expected {}, computed {}",
                row.expected.iter().join(","),
                computed.iter().join(",")
            ));
        }
        let expected_sheets: usize = row
            .expected
            .iter()
            .map(|e| e.count * e.degree.unwrap_or(0))
            .sum();
        if expected_sheets != report.sheet_count {
            reasons.push(format!(
                "sheets: expected {expected_sheets}, computed {}",
                report.sheet_count
            ));
        }
    } else {
        let by_genus = |es: &[Expectation]| {
            let mut m: BTreeMap<usize, usize> = BTreeMap::new();
            for e in es {
                *m.entry(e.genus).or_default() += e.count;
            }
            m
        };
        let (want, got) = (by_genus(&row.expected), by_genus(&computed));
        if want != got {
            reasons.push(format!(
                "components per genus: expected {want:?}, computed {got:?}"
            ));
        }
    }

    Ok(Verdict {
        pass: reasons.is_empty(),
        sheet_count: report.sheet_count,
        computed,
        expected: row.expected.clone(),
        reasons,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub results: Vec<(GoldenRow, Verdict)>,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Verifies every row, or only rows of the given total degree.
pub fn verify_all(rows: &[GoldenRow], degree: Option<usize>) -> Result<Summary> {
    let selected: Vec<&GoldenRow> = rows
        .iter()
        .filter(|r| degree.is_none_or(|d| r.degree() == d))
        .collect();
    let verdicts = selected
        .par_iter()
        .map(|r| verify_row(r))
        .collect::<Result<Vec<_>>>()?;
    let passed = verdicts.iter().filter(|v| v.pass).count();
    Ok(Summary {
        failed: verdicts.len() - passed,
        passed,
        results: selected.into_iter().cloned().zip(verdicts).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_table_shape() {
        let rows = embedded_rows();
        let per_degree = rows.iter().map(|r| r.degree()).counts();
        assert_eq!(per_degree[&2], 3);
        assert_eq!(per_degree[&3], 9);
        assert_eq!(per_degree[&4], 39);
        assert_eq!(per_degree[&5], 1);
        for r in &rows {
            assert!(
                r.citation.contains("table") || r.citation.contains("example"),
                "{r:?}"
            );
            assert_eq!(r.spec.fiber_count(), 4);
        }
    }

    #[test]
    fn connected_rows_use_riemann_hurwitz_genus() {
        for r in embedded_rows().iter().filter(|r| r.spec.is_connected()) {
            let d = r.spec.degree();
            let ram: usize = r.spec.profiles().iter().map(|p| p.ramification()).sum();
            assert_eq!(ram % 2, 0);
            assert_eq!(r.spec.genera()[0] + d, 1 + ram / 2, "line {}", r.line);
        }
    }

    #[test]
    fn parse_errors_carry_location() {
        let text = "# c\ndegrees=2 genera=1 profiles=2;2;2;2 expect=1:0:1\ndegrees=2 genera=1 profiles=2;2;2;2 expect=1:x:1\n";
        match parse_goldens(text) {
            Err(Error::Golden { line, column, .. }) => {
                assert_eq!(line, 3);
                assert_eq!(column, 37);
            }
            other => panic!("{other:?}"),
        }
        let bad = [
            "degrees=2 genera=1 profiles=2;2;2;2",
            "degrees=2 genera=1 profiles=2;2;2;2 expect=1:0:1 extra=1",
            "degrees=2 degrees=2 genera=1 profiles=2;2;2;2 expect=1:0:1",
            "degrees=2 genera=1 profiles=2;2;3;2 expect=1:0:1",
            "garbage",
        ];
        for b in bad {
            assert!(
                matches!(parse_goldens(b), Err(Error::Golden { line: 1, .. })),
                "{b}"
            );
        }
    }

    #[test]
    fn verify_examples() {
        let rows = parse_goldens(
            "degrees=1,1 genera=0,0 profiles=1,1;1,1;1,1;1,1 expect=8:0:1\n\
             degrees=3 genera=1 profiles=3;3;2,1;2,1 expect=1:0:2\n\
             degrees=3 genera=1 profiles=3;3;2,1;2,1 expect=2:0:1\n",
        )
        .unwrap();
        let v = verify_row(&rows[0]).unwrap();
        assert!(v.pass);
        assert_eq!(
            v.computed,
            vec![Expectation {
                count: 8,
                genus: 0,
                degree: Some(1)
            }]
        );
        assert!(verify_row(&rows[1]).unwrap().pass);
        let v = verify_row(&rows[2]).unwrap();
        assert!(!v.pass);
        assert_eq!(v.reasons.len(), 1);

        let s = verify_all(&rows, Some(3)).unwrap();
        assert_eq!((s.passed, s.failed), (1, 1));
    }

    #[test]
    fn degree_two_table() {
        let s = verify_all(&embedded_rows(), Some(2)).unwrap();
        assert_eq!((s.passed, s.failed), (3, 0));
    }
}
