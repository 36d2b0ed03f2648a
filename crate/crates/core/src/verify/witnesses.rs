//! Explicit sequences from the proofs, checked with the sequence predicates
//! only (no search), plus sampled instances of the subgroup construction
//! behind `d(H) + 2 ≤ D(G)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{ConfigEcho, VerifyReport};
use crate::bitset::ElementSet;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::pi::{extension_stays_free, is_atom, pi, subsequence_products};
use crate::registry::{order48_fixture, order80_fixture, order81_fixture, registry, ENTRIES};
use crate::search::{ineq_witness, SearchConfig};
use crate::sequence::{parse_ordered, parse_sequence, product, Sequence};
use crate::subgroups::all_subgroups;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: String) -> WitnessCheck {
    WitnessCheck {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn atom_check(g: &FiniteGroup, name: &str, seq: &str, len: usize) -> Result<WitnessCheck> {
    let s = parse_sequence(g, seq)?;
    let atom = is_atom(g, &s)?;
    Ok(check(
        name,
        atom && s.len() == len,
        format!("{seq} in {}: length {}, atom {atom}", g.name(), s.len()),
    ))
}

fn ordering_check(g: &FiniteGroup, name: &str, seq: &str, ordering: &str) -> Result<WitnessCheck> {
    let s = parse_sequence(g, seq)?;
    let terms = parse_ordered(g, ordering)?;
    let same = Sequence::from_elements(g.order(), terms.iter().copied()) == s;
    let prod = product(g, &terms);
    Ok(check(
        name,
        same && prod == 0,
        format!(
            "{ordering}: product {}, ordering of {seq}: {same}",
            g.element_labels()[prod]
        ),
    ))
}

fn pi_check(g: &FiniteGroup, name: &str, seq: &str, expected: &str) -> Result<WitnessCheck> {
    let s = parse_sequence(g, seq)?;
    let found = pi(g, &s)?;
    let listed = parse_sequence(g, expected)?;
    let want = ElementSet::from_elements(g.order(), listed.support());
    let labels = g.element_labels();
    let shown: Vec<&str> = found.iter().map(|x| labels[x].as_str()).collect();
    Ok(check(
        name,
        found == want && want.len() == listed.len(),
        format!("pi({seq}) = {{{}}}", shown.join(", ")),
    ))
}

/// Every explicit check, in a fixed order.
pub fn witness_checks() -> Result<Vec<WitnessCheck>> {
    let g48 = order48_fixture()?;
    let g80 = order80_fixture()?;
    let g81 = order81_fixture()?;
    let s48 = "a[5] b[2] c[3]";
    let s80 = "a[2] b c (b*d) e[5]";
    let s81 = "(a*c) c[2] d[3] x[2] a[2]";
    let mut out = vec![
        atom_check(&g48, "order-48 sequence is an atom", s48, 10)?,
        ordering_check(
            &g48,
            "order-48 ordering has product 1",
            s48,
            "b c a a a b c c a a",
        )?,
        pi_check(
            &g48,
            "order-48 products of b[2] c[3]",
            "b[2] c[3]",
            "a^2 b^2 (a*b^2) (a^2*b^2) b^3 (a^3*b^3)",
        )?,
        atom_check(&g80, "order-80 sequence is an atom", s80, 10)?,
        ordering_check(
            &g80,
            "order-80 ordering has product 1",
            s80,
            "e a b c e e e e a (b*d)",
        )?,
        pi_check(
            &g80,
            "order-80 products of c e[5]",
            "c e[5]",
            "c (b*d) (a*c) b (a*d)",
        )?,
        pi_check(
            &g80,
            "order-80 products of b e[5]",
            "b e[5]",
            "b (a*d) c (b*d) (a*c)",
        )?,
        atom_check(&g81, "order-81 sequence is an atom", s81, 10)?,
        ordering_check(
            &g81,
            "order-81 ordering has product 1",
            s81,
            "a a (a*c) d c c d d x x",
        )?,
        atom_check(
            &g81,
            "H27 sequence c[3] d[3] x[2] is an atom",
            "c[3] d[3] x[2]",
            8,
        )?,
    ];
    let samples = sample_ineq_triples(WITNESS_SEED, 10, 16)?;
    let atoms = samples.iter().filter(|s| s.atom).count();
    out.push(check(
        "subgroup construction yields atoms",
        atoms == samples.len(),
        format!("{atoms}/{} sampled (G, H, h) triples", samples.len()),
    ));
    Ok(out)
}

const WITNESS_SEED: u64 = 0x5eed;

/// Runs `witness_checks` into a report. Independent of any search settings.
pub fn verify_paper_witnesses() -> Result<VerifyReport> {
    let start = std::time::Instant::now();
    let mut report = VerifyReport::new(ConfigEcho::new(&SearchConfig::default(), None));
    report.witnesses = witness_checks()?;
    report.recount();
    report.millis = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct IneqSample {
    pub gap_id: (usize, usize),
    pub subgroup: ElementSet,
    pub h: usize,
    pub s_free: Sequence,
    pub witness: Sequence,
    pub atom: bool,
}

/// `count` seeded random triples `(G, H, h)` with `|G| ≤ max_order`, each with
/// a random product-one free `S` over `H`, pushed through `ineq_witness`.
pub fn sample_ineq_triples(seed: u64, count: usize, max_order: usize) -> Result<Vec<IneqSample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<(usize, usize)> = ENTRIES
        .iter()
        .filter(|e| (2..=max_order).contains(&e.id.0))
        .map(|e| e.id)
        .collect();
    let mut out = Vec::with_capacity(count);
    if pool.is_empty() {
        return Ok(out);
    }
    for _ in 0..count {
        let id = pool[rng.gen_range(0..pool.len())];
        let g = registry(id.0, id.1)?;
        let proper: Vec<ElementSet> = all_subgroups(&g)?
            .into_iter()
            .filter(|h| h.len() < g.order())
            .collect();
        let h_set = proper[rng.gen_range(0..proper.len())].clone();
        let s_free = random_free(&g, &h_set, &mut rng)?;
        let outside: Vec<usize> = (0..g.order()).filter(|&x| !h_set.contains(x)).collect();
        let h = outside[rng.gen_range(0..outside.len())];
        let witness = ineq_witness(&g, &h_set, &s_free, h)?;
        let atom = is_atom(&g, &witness)?;
        out.push(IneqSample {
            gap_id: id,
            subgroup: h_set,
            h,
            s_free,
            witness,
            atom,
        });
    }
    Ok(out)
}

fn random_free(g: &FiniteGroup, h_set: &ElementSet, rng: &mut ChaCha8Rng) -> Result<Sequence> {
    let elems: Vec<usize> = h_set.iter().filter(|&x| x != 0).collect();
    let mut s = Sequence::empty(g.order());
    if elems.is_empty() {
        return Ok(s);
    }
    let target = rng.gen_range(0..=h_set.len());
    for _ in 0..4 * h_set.len() {
        if s.len() >= target {
            break;
        }
        let x = elems[rng.gen_range(0..elems.len())];
        if extension_stays_free(g, &subsequence_products(g, &s)?, x) {
            s.push(x);
        }
    }
    Ok(s)
}
