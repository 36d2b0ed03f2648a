//! Recomputing the bundled Davenport tables and checking explicit witnesses.

mod expected;
mod witnesses;

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::registry::lookup;
use crate::search::{
    abelian_davenport, large_in_pool, small_in_pool, SearchConfig, SymmetryReduction,
};
use crate::subgroups::all_subgroups;

pub use expected::{load_expected, parse_expected, ExpectedEntry, Source, TABLE1_IDS, TABLE2_IDS};
pub use witnesses::{
    sample_ineq_triples, verify_paper_witnesses, witness_checks, IneqSample, WitnessCheck,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pair {
    pub d: usize,
    #[serde(rename = "D")]
    pub large: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
    Skipped,
    /// A cap was hit; `found` holds verified lower bounds.
    Inexact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub gap_id: (usize, usize),
    pub name: String,
    pub expected: Pair,
    pub found: Option<Pair>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// Listed in the table its `D` calls for.
    Listed,
    /// `8 ≤ D ≤ 9`, not in the second table, but has a proper subgroup of order 32.
    Order32Subgroup,
    /// The order-32 subgroup condition could not be decided under caps.
    Undecided,
    Violation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationNote {
    pub gap_id: (usize, usize),
    #[serde(rename = "D")]
    pub large: usize,
    pub result: Classification,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub attempted: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub skipped: usize,
    pub inexact: usize,
    pub classification_violations: usize,
    pub witness_checks: usize,
    pub witness_failures: usize,
}

/// The search settings that can influence results. The thread count is
/// deliberately absent: it never changes an outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub max_order: Option<usize>,
    pub max_order_exact: usize,
    pub dp_cap: usize,
    pub symmetry_reduction: SymmetryReduction,
    pub length_cap: Option<usize>,
    pub node_budget: u64,
}

impl ConfigEcho {
    pub fn new(cfg: &SearchConfig, max_order: Option<usize>) -> Self {
        ConfigEcho {
            max_order,
            max_order_exact: cfg.max_order_exact,
            dp_cap: cfg.dp_cap,
            symmetry_reduction: cfg.symmetry_reduction,
            length_cap: cfg.length_cap,
            node_budget: cfg.node_budget,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: ConfigEcho,
    pub entries: Vec<ReportEntry>,
    pub classification: Vec<ClassificationNote>,
    pub witnesses: Vec<WitnessCheck>,
    pub totals: Totals,
    /// Wall time; zero when timing is suppressed for reproducible output.
    pub millis: u64,
}

impl VerifyReport {
    pub fn new(config: ConfigEcho) -> Self {
        VerifyReport {
            config,
            entries: Vec::new(),
            classification: Vec::new(),
            witnesses: Vec::new(),
            totals: Totals::default(),
            millis: 0,
        }
    }

    /// Recounts `totals` from the entries, notes, and checks.
    pub fn recount(&mut self) {
        let count = |s| self.entries.iter().filter(|e| e.status == s).count();
        self.totals = Totals {
            attempted: self.entries.len(),
            matched: count(Status::Match),
            mismatched: count(Status::Mismatch),
            skipped: count(Status::Skipped),
            inexact: count(Status::Inexact),
            classification_violations: self
                .classification
                .iter()
                .filter(|c| c.result == Classification::Violation)
                .count(),
            witness_checks: self.witnesses.len(),
            witness_failures: self.witnesses.iter().filter(|w| !w.passed).count(),
        };
    }

    /// No mismatches, classification violations, or failed witness checks.
    pub fn passed(&self) -> bool {
        self.totals.mismatched == 0
            && self.totals.classification_violations == 0
            && self.totals.witness_failures == 0
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serialises");
        serde_json::to_string_pretty(&value).expect("value serialises")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.entries.is_empty() {
            let name_w = self
                .entries
                .iter()
                .map(|e| e.name.len())
                .max()
                .unwrap_or(4)
                .max(4);
            let _ = writeln!(
                out,
                "{:<12} {:<name_w$} {:>9} {:>9}  status",
                "id", "name", "expected", "found"
            );
            for e in &self.entries {
                let id = format!("({},{})", e.gap_id.0, e.gap_id.1);
                let exp = format!("{}/{}", e.expected.d, e.expected.large);
                let found = e
                    .found
                    .map_or("-".to_string(), |f| format!("{}/{}", f.d, f.large));
                let status = match e.status {
                    Status::Match => "match",
                    Status::Mismatch => "MISMATCH",
                    Status::Skipped => "skipped",
                    Status::Inexact => "inexact",
                };
                let _ = write!(
                    out,
                    "{id:<12} {:<name_w$} {exp:>9} {found:>9}  {status}",
                    e.name
                );
                if let Some(r) = &e.reason {
                    let _ = write!(out, " ({r})");
                }
                out.push('\n');
            }
        }
        for c in self
            .classification
            .iter()
            .filter(|c| c.result != Classification::Listed)
        {
            let _ = writeln!(
                out,
                "classification ({},{}) D={}: {:?}",
                c.gap_id.0, c.gap_id.1, c.large, c.result
            );
        }
        for w in &self.witnesses {
            let _ = writeln!(
                out,
                "{} {}: {}",
                if w.passed { "ok  " } else { "FAIL" },
                w.name,
                w.detail
            );
        }
        let t = &self.totals;
        let _ = writeln!(
            out,
            "attempted {} matched {} mismatched {} skipped {} inexact {}; witness checks {} failed {}; classification violations {}",
            t.attempted, t.matched, t.mismatched, t.skipped, t.inexact, t.witness_checks, t.witness_failures,
            t.classification_violations
        );
        out
    }
}

fn entry_for(expected: &ExpectedEntry) -> ReportEntry {
    ReportEntry {
        gap_id: expected.gap_id,
        name: expected.name.clone(),
        expected: Pair {
            d: expected.small(),
            large: expected.expected_large,
        },
        found: None,
        status: Status::Skipped,
        reason: None,
    }
}

fn skipped(expected: &ExpectedEntry, reason: &str) -> ReportEntry {
    ReportEntry {
        reason: Some(reason.to_string()),
        ..entry_for(expected)
    }
}

/// Recomputes `d` and `D` for one table entry.
pub fn verify_group(gap_id: (usize, usize), cfg: &SearchConfig) -> Result<ReportEntry> {
    cfg.validate()?;
    let table = load_expected()?;
    let expected = table
        .iter()
        .find(|e| e.gap_id == gap_id)
        .ok_or(Error::UnknownRegistryId(gap_id.0, gap_id.1))?;
    if lookup(gap_id.0, gap_id.1).is_none() {
        return Err(Error::UnknownRegistryId(gap_id.0, gap_id.1));
    }
    cfg.pool()?.install(|| check_entry(expected, cfg))
}

fn check_entry(expected: &ExpectedEntry, cfg: &SearchConfig) -> Result<ReportEntry> {
    let (m, k) = expected.gap_id;
    if lookup(m, k).is_none() {
        return Ok(skipped(expected, "no construction for this id"));
    }
    if expected.order > cfg.max_order_exact {
        return Ok(skipped(expected, "order beyond exactness cap"));
    }
    let g = crate::registry::registry(m, k)?;
    let (small, large) = rayon::join(|| small_in_pool(&g, cfg), || large_in_pool(&g, cfg));
    let (small, large) = (small?, large?);
    let mut entry = entry_for(expected);
    let found = Pair {
        d: small.value,
        large: large.value,
    };
    entry.found = Some(found);
    entry.status = if !(small.exact && large.exact) {
        Status::Inexact
    } else if found != entry.expected {
        Status::Mismatch
    } else {
        Status::Match
    };
    if g.is_abelian() && entry.status == Status::Match {
        let formula = abelian_davenport(&g)?;
        if formula.exact && (formula.value != found.large || found.d + 1 != found.large) {
            entry.status = Status::Mismatch;
            entry.reason = Some(format!("abelian formula gives {}", formula.value));
        }
    }
    Ok(entry)
}

/// Verifies every table entry of order at most `max_order`.
pub fn verify_range(max_order: usize, cfg: &SearchConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    let start = Instant::now();
    let table = load_expected()?;
    let todo: Vec<&ExpectedEntry> = table.iter().filter(|e| e.order <= max_order).collect();
    let mut report = VerifyReport::new(ConfigEcho::new(cfg, Some(max_order)));
    let results: Vec<Result<ReportEntry>> = cfg
        .pool()?
        .install(|| todo.par_iter().map(|e| check_entry(e, cfg)).collect());
    for r in results {
        report.entries.push(r?);
    }
    report.entries.sort_by_key(|e| e.gap_id);
    report.classification = classify(&report.entries)?;
    report.recount();
    report.millis = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Checks the direction "small D implies listed" for every matched entry.
fn classify(entries: &[ReportEntry]) -> Result<Vec<ClassificationNote>> {
    let mut out = Vec::new();
    for e in entries.iter().filter(|e| e.status == Status::Match) {
        let large = e.found.expect("matched entries have values").large;
        let result = if large <= 7 {
            if TABLE1_IDS.contains(&e.gap_id) {
                Classification::Listed
            } else {
                Classification::Violation
            }
        } else if large <= 9 {
            if TABLE2_IDS.contains(&e.gap_id) {
                Classification::Listed
            } else {
                let g = crate::registry::registry(e.gap_id.0, e.gap_id.1)?;
                match all_subgroups(&g) {
                    Ok(subs) if subs.iter().any(|h| h.len() == 32 && h.len() < g.order()) => {
                        Classification::Order32Subgroup
                    }
                    Ok(_) => Classification::Violation,
                    Err(_) => Classification::Undecided,
                }
            }
        } else {
            continue;
        };
        out.push(ClassificationNote {
            gap_id: e.gap_id,
            large,
            result,
        });
    }
    Ok(out)
}
