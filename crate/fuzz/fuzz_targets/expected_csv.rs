#![no_main]
use davenport_core::verify::parse_expected;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse_expected(s);
    }
});
