use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_davenport"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn compute_large_for_d8() {
    let v = json(&["compute", "--group", "D8", "--what", "D", "--json"]);
    assert_eq!(v["value"], 6);
    assert_eq!(v["exact"], true);
    assert_eq!(v["quantity"], "large-davenport");
    assert_eq!(v["millis"], 0);
}

#[test]
fn compute_small_for_trivial_group() {
    let v = json(&["compute", "--group", "C1", "--what", "d", "--json"]);
    assert_eq!(v["value"], 0);
    assert_eq!(v["witness"], "");
}

#[test]
fn compute_both_gives_a_list() {
    let v = json(&["compute", "-g", "Q8", "--json"]);
    let values: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["value"].as_u64().unwrap())
        .collect();
    assert_eq!(values, vec![4, 6]);
}

#[test]
fn witnesses_feed_back_into_check() {
    for spec in ["A4", "Q12", "gap:16.3"] {
        let outs = json(&["compute", "-g", spec, "--json"]);
        let small = outs[0]["witness"].as_str().unwrap();
        let large = outs[1]["witness"].as_str().unwrap();
        let free = json(&["check", "-g", spec, "-s", small, "--free", "--json"]);
        assert_eq!(free["result"], true, "{spec}: {small}");
        assert_eq!(free["length"], outs[0]["value"]);
        let atom = json(&["check", "-g", spec, "-s", large, "--atom", "--json"]);
        assert_eq!(atom["result"], true, "{spec}: {large}");
        let ordering = outs[1]["ordering"].as_str().unwrap();
        let same = json(&["check", "-g", spec, "-s", ordering, "--atom", "--json"]);
        assert_eq!(same["sequence"], atom["sequence"]);
    }
}

#[test]
fn pi_of_order48_witness_part() {
    let v = json(&["pi", "--group", "gap:48.3", "--seq", "b[2] c[3]", "--json"]);
    assert_eq!(v["elements"].as_array().unwrap().len(), 6);
    let text = stdout(&run(&["pi", "-g", "gap:48.3", "-s", "b[2] c[3]"]));
    assert!(text.contains("6 elements"), "{text}");
}

#[test]
fn check_predicates() {
    let one = json(&[
        "check",
        "-g",
        "C7",
        "-s",
        "a a^-1",
        "--product-one",
        "--json",
    ]);
    assert_eq!(one["result"], true);
    let free = json(&["check", "-g", "C7", "-s", "a a^-1", "--free", "--json"]);
    assert_eq!(free["result"], false);
    let atom = json(&[
        "check",
        "-g",
        "gap:80.49",
        "-s",
        "a[2] b c (b*d) e[5]",
        "--atom",
        "--json",
    ]);
    assert_eq!(atom["result"], true);
    assert_eq!(atom["length"], 10);
}

#[test]
fn check_needs_exactly_one_predicate() {
    assert_eq!(
        run(&["check", "-g", "C3", "-s", "a"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["check", "-g", "C3", "-s", "a", "--atom", "--free"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn info_reports_fingerprint() {
    let v = json(&["info", "-g", "Q8", "--json"]);
    assert_eq!(v["order"], 8);
    assert_eq!(v["fingerprint"]["center_order"], 2);
    assert_eq!(v["bounds"]["large_exact"], 6);
    let text = stdout(&run(&["info", "-g", "H27"]));
    assert!(text.contains("order       27"), "{text}");
}

#[test]
fn verify_witnesses() {
    let out = run(&["verify", "--witnesses", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["totals"]["witness_failures"], 0);
    assert_eq!(v["totals"]["witness_checks"], 11);
}

#[test]
fn verify_small_range() {
    let v = json(&["verify", "--max-order", "8", "--json"]);
    assert_eq!(v["totals"]["mismatched"], 0);
    assert_eq!(v["totals"]["attempted"], v["totals"]["matched"]);
    let empty = json(&["verify", "--max-order", "1", "--json"]);
    assert_eq!(empty["totals"]["attempted"], 0);
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        vec!["verify", "--max-order", "10", "--witnesses", "--json"],
        vec!["compute", "-g", "D10", "--json"],
        vec!["info", "-g", "gap:16.13", "--json"],
        vec!["pi", "-g", "D8", "-s", "r[2] s", "--json"],
    ] {
        let text = stdout(&run(&args));
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&v).unwrap() + "\n",
            text,
            "{args:?}"
        );
    }
}

#[test]
fn parallel_width_does_not_change_output() {
    for args in [
        vec!["verify", "--max-order", "12", "--witnesses", "--json"],
        vec!["compute", "-g", "gap:16.3", "--json"],
        vec!["compute", "-g", "A4", "--json"],
    ] {
        let outputs: Vec<String> = ["1", "2", "8"]
            .iter()
            .map(|w| {
                let mut a = args.clone();
                a.extend(["--parallel", w]);
                stdout(&run(&a))
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["info", "-g", "X9"]).status.code(), Some(2));
    assert_eq!(run(&["info", "-g", "gap:7.7"]).status.code(), Some(2));
    assert_eq!(run(&["pi", "-g", "D8", "-s", "q"]).status.code(), Some(2));
    assert_eq!(
        run(&["compute", "-g", "D8", "--what", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["compute", "-g", "D8", "--parallel", "0"])
            .status
            .code(),
        Some(2)
    );
    let capped = run(&["pi", "-g", "C2", "-s", "a[40]", "--dp-cap", "16"]);
    assert_eq!(capped.status.code(), Some(3));
    let err = String::from_utf8(capped.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn capped_search_reports_lower_bound() {
    let v = json(&[
        "compute",
        "-g",
        "C7",
        "--what",
        "d",
        "--length-cap",
        "3",
        "--json",
    ]);
    assert_eq!(v["value"], 3);
    assert_eq!(v["exact"], false);
}

#[test]
fn cayley_file_groups() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        "cayley 1\n# Z/4\n4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\nnames: 1 g g2 g3\n"
    )
    .unwrap();
    let spec = format!("cayley:{}", file.path().display());
    let v = json(&["compute", "-g", &spec, "--what", "D", "--json"]);
    assert_eq!(v["value"], 4);
    let c = json(&["check", "-g", &spec, "-s", "g g3", "--atom", "--json"]);
    assert_eq!(c["result"], true);
}

#[test]
fn sample_is_seeded() {
    let a = stdout(&run(&["sample", "--seed", "9", "--count", "5", "--json"]));
    let b = stdout(&run(&["sample", "--seed", "9", "--count", "5", "--json"]));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["atoms"], 5);
}
