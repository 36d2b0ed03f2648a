#![no_main]
use std::sync::OnceLock;

use davenport_core::registry::order48_fixture;
use davenport_core::sequence::{parse_ordered, parse_sequence};
use davenport_core::FiniteGroup;
use libfuzzer_sys::fuzz_target;

static GROUP: OnceLock<FiniteGroup> = OnceLock::new();

fuzz_target!(|data: &[u8]| {
    let g = GROUP.get_or_init(|| order48_fixture().unwrap());
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse_sequence(g, s);
        let _ = parse_ordered(g, s);
    }
});
