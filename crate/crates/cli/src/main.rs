//! `davenport`: construct groups, evaluate sequence predicates, compute
//! Davenport constants, and verify the bundled tables.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 cap exceeded.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use davenport_core::pi::{is_atom, is_product_one, is_product_one_free, pi};
use davenport_core::search::{bounds, large_davenport, small_davenport, SymmetryReduction};
use davenport_core::sequence::parse_sequence;
use davenport_core::verify::{
    sample_ineq_triples, verify_paper_witnesses, verify_range, witness_checks, VerifyReport,
};
use davenport_core::{build_group, fingerprint, Error, FiniteGroup, SearchConfig};

use output::{render_terms, term, to_json};

/// Seed used by `sample` when `--seed` is not given.
const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(
    name = "davenport",
    version,
    about = "Davenport constants of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, fingerprint, generators, and bounds of a group.
    Info {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        json: bool,
    },
    /// Compute d(G) and/or D(G) by exhaustive search.
    Compute {
        #[command(flatten)]
        group: GroupArg,
        /// Comma-separated list of `d` and `D`.
        #[arg(long, default_value = "d,D")]
        what: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// The set of products of a sequence.
    Pi {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long)]
        dp_cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate one sequence predicate.
    Check {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        predicate: PredicateArg,
        #[arg(long)]
        json: bool,
    },
    /// Recompute the bundled tables and/or check the explicit witnesses.
    Verify {
        /// Verify every table entry up to this order (default 16 unless only
        /// `--witnesses` is given).
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        witnesses: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Seeded random subgroup-extension atoms `S · h⁻¹ · (h g⁻¹)`.
    Sample {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GroupArg {
    /// Group spec, e.g. `D8`, `C2xQ8`, `gap:16.3`, `cayley:path`.
    #[arg(long, short = 'g')]
    group: String,
}

#[derive(Args)]
struct SeqArg {
    /// Sequence literal, e.g. `a[5] b[2] (a*b^-1)`.
    #[arg(long, short = 's', allow_hyphen_values = true)]
    seq: String,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PredicateArg {
    #[arg(long)]
    atom: bool,
    #[arg(long)]
    free: bool,
    #[arg(long)]
    product_one: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Symmetry {
    Off,
    FirstStepOrbits,
}

#[derive(Args)]
struct SearchArgs {
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    parallel: usize,
    #[arg(long)]
    max_order_exact: Option<usize>,
    #[arg(long)]
    dp_cap: Option<usize>,
    #[arg(long)]
    length_cap: Option<usize>,
    #[arg(long)]
    node_budget: Option<u64>,
    #[arg(long, value_enum)]
    symmetry: Option<Symmetry>,
    /// Report wall-clock times (otherwise zero, so output is reproducible).
    #[arg(long)]
    timings: bool,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        let d = SearchConfig::default();
        SearchConfig {
            max_order_exact: self.max_order_exact.unwrap_or(d.max_order_exact),
            dp_cap: self.dp_cap.unwrap_or(d.dp_cap),
            parallel_width: self.parallel,
            symmetry_reduction: match self.symmetry {
                None => d.symmetry_reduction,
                Some(Symmetry::Off) => SymmetryReduction::Off,
                Some(Symmetry::FirstStepOrbits) => SymmetryReduction::FirstStepOrbits,
            },
            length_cap: self.length_cap,
            node_budget: self.node_budget.unwrap_or(d.node_budget),
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cmd: Command) -> Result<u8, Error> {
    match cmd {
        Command::Info { group, json } => info(&build_group(&group.group)?, json),
        Command::Compute {
            group,
            what,
            search,
            json,
        } => {
            let wanted = parse_what(&what)?;
            let cfg = search.config();
            cfg.validate()?;
            let g = build_group(&group.group)?;
            compute(&g, &wanted, &cfg, search.timings, json)
        }
        Command::Pi {
            group,
            seq,
            dp_cap,
            json,
        } => {
            let g = build_group(&group.group)?;
            products(&g, &seq.seq, dp_cap, json)
        }
        Command::Check {
            group,
            seq,
            predicate,
            json,
        } => {
            let g = build_group(&group.group)?;
            check(&g, &seq.seq, &predicate, json)
        }
        Command::Verify {
            max_order,
            witnesses,
            search,
            json,
        } => verify(max_order, witnesses, &search, json),
        Command::Sample {
            seed,
            count,
            max_order,
            json,
        } => sample(seed, count, max_order, json),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Wanted {
    Small,
    Large,
}

fn parse_what(text: &str) -> Result<Vec<Wanted>, Error> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim) {
        let w = match part {
            "d" => Wanted::Small,
            "D" => Wanted::Large,
            other => {
                return Err(Error::BadParameter(format!(
                    "--what: unknown quantity {other:?} (use d, D)"
                )))
            }
        };
        if !out.contains(&w) {
            out.push(w);
        }
    }
    Ok(out)
}

fn info(g: &FiniteGroup, json: bool) -> Result<u8, Error> {
    let fp = fingerprint(g);
    let generators: Vec<output::Generator> = g
        .gen_names()
        .iter()
        .map(|(name, element)| output::Generator {
            name: name.clone(),
            element: *element,
        })
        .collect();
    let b = bounds(g);
    if json {
        let info = output::Info {
            name: g.name().to_string(),
            order: g.order(),
            abelian: g.is_abelian(),
            exponent: g.exponent(),
            fingerprint_text: fp.to_string(),
            fingerprint: fp,
            generators,
            bounds: b,
        };
        println!("{}", to_json(&info));
    } else {
        println!("group       {}", g.name());
        println!("order       {}", g.order());
        println!("abelian     {}", g.is_abelian());
        println!("fingerprint {fp}");
        let gens: Vec<String> = generators
            .iter()
            .map(|x| format!("{}={}", x.name, x.element))
            .collect();
        println!("generators  {}", gens.join(" "));
        let exact = b
            .large_exact
            .map_or(String::new(), |v| format!(" (D = {v} by formula)"));
        println!(
            "bounds      d >= {}, {} <= D <= {}{exact}",
            b.d_low, b.large_low, b.large_high
        );
    }
    Ok(0)
}

fn compute(
    g: &FiniteGroup,
    wanted: &[Wanted],
    cfg: &SearchConfig,
    timings: bool,
    json: bool,
) -> Result<u8, Error> {
    let mut outs = Vec::new();
    for w in wanted {
        let out = match w {
            Wanted::Small => small_davenport(g, cfg)?,
            Wanted::Large => large_davenport(g, cfg)?,
        };
        outs.push(output::Outcome::new(g, &out, timings));
    }
    if json {
        match outs.as_slice() {
            [one] => println!("{}", to_json(one)),
            many => println!("{}", to_json(&many)),
        }
        return Ok(0);
    }
    for o in &outs {
        let sym = match o.quantity {
            davenport_core::search::Quantity::SmallDavenport => "d",
            davenport_core::search::Quantity::LargeDavenport => "D",
        };
        let bound = if o.exact { "" } else { ">= " };
        println!("{sym}({}) = {bound}{}", o.group, o.value);
        println!(
            "  witness  {}",
            if o.witness.is_empty() {
                "(empty)"
            } else {
                &o.witness
            }
        );
        if let Some(ord) = &o.ordering {
            println!("  ordering {ord}");
        }
        print!("  engine   {}, {} nodes", o.engine, o.nodes_explored);
        if timings {
            print!(", {} ms", o.millis);
        }
        println!(
            "{}",
            if o.exact {
                ""
            } else {
                " (cap reached, lower bound)"
            }
        );
    }
    Ok(0)
}

fn products(g: &FiniteGroup, seq: &str, dp_cap: Option<usize>, json: bool) -> Result<u8, Error> {
    let s = parse_sequence(g, seq)?;
    let set = match dp_cap {
        Some(cap) => davenport_core::PiTable::with_cap(g, &s, cap)?.full(),
        None => pi(g, &s)?,
    };
    let labels = g.element_labels();
    let indices: Vec<usize> = set.iter().collect();
    let elements: Vec<String> = indices.iter().map(|&x| labels[x].clone()).collect();
    if json {
        let out = output::Products {
            group: g.name().to_string(),
            sequence: s.render(g),
            length: s.len(),
            elements,
            indices,
        };
        println!("{}", to_json(&out));
    } else {
        println!(
            "pi({}) = {{{}}}",
            s.render(g),
            render_terms(&indices, &labels).replace(' ', ", ")
        );
        println!("{} elements", indices.len());
    }
    Ok(0)
}

fn check(g: &FiniteGroup, seq: &str, p: &PredicateArg, json: bool) -> Result<u8, Error> {
    let s = parse_sequence(g, seq)?;
    let (name, result) = if p.atom {
        ("atom", is_atom(g, &s)?)
    } else if p.free {
        ("free", is_product_one_free(g, &s)?)
    } else {
        ("product-one", is_product_one(g, &s)?)
    };
    if json {
        let out = output::Check {
            group: g.name().to_string(),
            sequence: s.render(g),
            length: s.len(),
            predicate: name,
            result,
        };
        println!("{}", to_json(&out));
    } else {
        println!("{name}: {result} (length {})", s.len());
    }
    Ok(0)
}

fn verify(
    max_order: Option<usize>,
    witnesses: bool,
    search: &SearchArgs,
    json: bool,
) -> Result<u8, Error> {
    let cfg = search.config();
    cfg.validate()?;
    let mut report: VerifyReport = match (max_order, witnesses) {
        (None, true) => verify_paper_witnesses()?,
        (m, w) => {
            let mut r = verify_range(m.unwrap_or(16), &cfg)?;
            if w {
                r.witnesses = witness_checks()?;
                r.recount();
            }
            r
        }
    };
    if !search.timings {
        report.millis = 0;
    }
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
        if search.timings {
            println!("{} ms", report.millis);
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn sample(seed: u64, count: usize, max_order: usize, json: bool) -> Result<u8, Error> {
    let triples = sample_ineq_triples(seed, count, max_order)?;
    let mut samples = Vec::new();
    for t in &triples {
        let g = davenport_core::registry::registry(t.gap_id.0, t.gap_id.1)?;
        let labels = g.element_labels();
        samples.push(output::Sample {
            gap_id: t.gap_id,
            subgroup_order: t.subgroup.len(),
            h: term(&labels[t.h]),
            free: t.s_free.render(&g),
            witness: t.witness.render(&g),
            atom: t.atom,
        });
    }
    let atoms = samples.iter().filter(|s| s.atom).count();
    let all = atoms == samples.len();
    if json {
        let out = output::SampleReport {
            seed,
            max_order,
            samples,
            atoms,
        };
        println!("{}", to_json(&out));
    } else {
        for s in &samples {
            println!(
                "({},{}) |H|={} h={} S=[{}] U=[{}] atom {}",
                s.gap_id.0, s.gap_id.1, s.subgroup_order, s.h, s.free, s.witness, s.atom
            );
        }
        println!("{atoms}/{} atoms (seed {seed})", samples.len());
    }
    Ok(if all { 0 } else { 1 })
}
