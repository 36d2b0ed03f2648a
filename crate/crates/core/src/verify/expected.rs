//! The bundled table of expected Davenport constants.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const BUNDLED: &str = include_str!("data/expected.csv");

const HEADER: &str = "gap_m,gap_k,name,order,d,D,source";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Source {
    Table1,
    Table2,
    LemmaDD,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedEntry {
    pub gap_id: (usize, usize),
    pub name: String,
    pub order: usize,
    /// Given for non-abelian rows; abelian rows leave it to `D - 1`.
    pub expected_d: Option<usize>,
    #[serde(rename = "expected_D")]
    pub expected_large: usize,
    pub source: Source,
}

impl ExpectedEntry {
    pub fn small(&self) -> usize {
        self.expected_d.unwrap_or(self.expected_large - 1)
    }
}

pub fn load_expected() -> Result<Vec<ExpectedEntry>> {
    parse_expected(BUNDLED)
}

/// Parses the expected-values CSV: `#` comment lines, one header line, then
/// one row per group, ids strictly increasing.
pub fn parse_expected(text: &str) -> Result<Vec<ExpectedEntry>> {
    let corrupt = |line: usize, msg: &str| Error::DataCorrupt(format!("line {line}: {msg}"));
    let mut out: Vec<ExpectedEntry> = Vec::new();
    let mut seen_header = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let row = raw.trim();
        if row.is_empty() || row.starts_with('#') {
            continue;
        }
        if !seen_header {
            if row != HEADER {
                return Err(corrupt(line, "missing header"));
            }
            seen_header = true;
            continue;
        }
        let fields: Vec<&str> = row.split(',').map(str::trim).collect();
        if fields.len() != 7 {
            return Err(corrupt(line, "expected 7 fields"));
        }
        let num = |s: &str, what: &str| -> Result<usize> {
            s.parse().map_err(|_| corrupt(line, &format!("bad {what}")))
        };
        let m = num(fields[0], "gap_m")?;
        let k = num(fields[1], "gap_k")?;
        let order = num(fields[3], "order")?;
        let expected_d = match fields[4] {
            "" => None,
            s => Some(num(s, "d")?),
        };
        let expected_large = num(fields[5], "D")?;
        let source = match fields[6] {
            "Table1" => Source::Table1,
            "Table2" => Source::Table2,
            "LemmaDD" => Source::LemmaDD,
            _ => return Err(corrupt(line, "unknown source")),
        };
        if fields[2].is_empty() {
            return Err(corrupt(line, "empty name"));
        }
        if order != m || m == 0 || k == 0 {
            return Err(corrupt(line, "order does not match id"));
        }
        if expected_large == 0 || expected_large > order {
            return Err(corrupt(line, "D outside 1..=order"));
        }
        match (source, expected_d) {
            (Source::LemmaDD, None) => return Err(corrupt(line, "non-abelian row without d")),
            (_, Some(d)) if d >= expected_large => return Err(corrupt(line, "d not below D")),
            _ => {}
        }
        if let Some(prev) = out.last() {
            if prev.gap_id >= (m, k) {
                return Err(corrupt(line, "ids not strictly increasing"));
            }
        }
        out.push(ExpectedEntry {
            gap_id: (m, k),
            name: fields[2].to_string(),
            order,
            expected_d,
            expected_large,
            source,
        });
    }
    if !seen_header {
        return Err(Error::DataCorrupt("missing header".into()));
    }
    Ok(out)
}

/// Ids of the groups with `D(G) ≤ 7`.
pub const TABLE1_IDS: &[(usize, usize)] = &[
    (2, 1),
    (3, 1),
    (4, 1),
    (4, 2),
    (5, 1),
    (6, 1),
    (6, 2),
    (7, 1),
    (8, 2),
    (8, 3),
    (8, 4),
    (8, 5),
    (9, 2),
    (12, 3),
    (12, 5),
    (16, 2),
    (16, 3),
    (16, 10),
    (16, 11),
    (16, 12),
    (16, 13),
    (16, 14),
    (27, 5),
    (32, 45),
    (32, 51),
    (64, 267),
];

/// Ids of the groups with `8 ≤ D(G) ≤ 9`, other than those with a proper
/// subgroup of order 32.
pub const TABLE2_IDS: &[(usize, usize)] = &[
    (8, 1),
    (9, 1),
    (12, 1),
    (12, 4),
    (16, 4),
    (16, 5),
    (18, 5),
    (24, 15),
    (25, 2),
    (27, 3),
    (32, 2),
    (32, 21),
    (32, 22),
    (32, 23),
    (32, 24),
    (32, 25),
    (32, 26),
    (32, 27),
    (32, 46),
    (32, 47),
    (32, 48),
    (32, 49),
    (32, 50),
    (48, 52),
    (64, 192),
    (64, 260),
    (81, 15),
    (128, 2319),
    (128, 2328),
    (256, 56092),
];
