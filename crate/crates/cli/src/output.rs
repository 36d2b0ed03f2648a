//! JSON shapes printed by `--json`. Field order is part of the output format.

use davenport_core::search::{Bounds, Quantity};
use davenport_core::{FiniteGroup, GroupFingerprint, SearchOutcome};
use serde::Serialize;

#[derive(Serialize)]
pub struct Generator {
    pub name: String,
    pub element: usize,
}

#[derive(Serialize)]
pub struct Info {
    pub name: String,
    pub order: usize,
    pub abelian: bool,
    pub exponent: usize,
    pub fingerprint: GroupFingerprint,
    pub fingerprint_text: String,
    pub generators: Vec<Generator>,
    pub bounds: Bounds,
}

#[derive(Serialize)]
pub struct Outcome {
    pub group: String,
    pub order: usize,
    pub quantity: Quantity,
    pub value: usize,
    pub exact: bool,
    pub witness: String,
    pub ordering: Option<String>,
    pub nodes_explored: u64,
    pub engine: &'static str,
    pub millis: u64,
}

impl Outcome {
    pub fn new(g: &FiniteGroup, out: &SearchOutcome, timings: bool) -> Self {
        let labels = g.element_labels();
        Outcome {
            group: g.name().to_string(),
            order: g.order(),
            quantity: out.quantity,
            value: out.value,
            exact: out.exact,
            witness: out.witness.render(g),
            ordering: out.ordering.as_ref().map(|o| render_terms(o, &labels)),
            nodes_explored: out.nodes_explored,
            engine: out.engine,
            millis: if timings {
                out.elapsed.as_millis() as u64
            } else {
                0
            },
        }
    }
}

#[derive(Serialize)]
pub struct Products {
    pub group: String,
    pub sequence: String,
    pub length: usize,
    pub elements: Vec<String>,
    pub indices: Vec<usize>,
}

#[derive(Serialize)]
pub struct Check {
    pub group: String,
    pub sequence: String,
    pub length: usize,
    pub predicate: &'static str,
    pub result: bool,
}

#[derive(Serialize)]
pub struct Sample {
    pub gap_id: (usize, usize),
    pub subgroup_order: usize,
    pub h: String,
    pub free: String,
    pub witness: String,
    pub atom: bool,
}

#[derive(Serialize)]
pub struct SampleReport {
    pub seed: u64,
    pub max_order: usize,
    pub samples: Vec<Sample>,
    pub atoms: usize,
}

/// An ordered product in the sequence grammar, one term per factor.
pub fn render_terms(terms: &[usize], labels: &[String]) -> String {
    terms
        .iter()
        .map(|&x| term(&labels[x]))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn term(label: &str) -> String {
    if label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        label.to_string()
    } else {
        format!("({label})")
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("output serialises");
    serde_json::to_string_pretty(&v).expect("value serialises")
}
