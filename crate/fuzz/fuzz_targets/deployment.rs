#![no_main]

use libfuzzer_sys::fuzz_target;
use rigidity_core::formats::{parse_deployment, write_deployment};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(dep) = parse_deployment(text) {
        let again = parse_deployment(&write_deployment(&dep)).expect("written deployment reparses");
        assert_eq!(again, dep);
    }
});
