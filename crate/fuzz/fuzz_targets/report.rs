#![no_main]

use libfuzzer_sys::fuzz_target;
use rigidity_core::formats::{parse_fraction, parse_machine};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let _ = parse_machine(text);
    let _ = parse_fraction(text);
});
