#![no_main]

use eurbound::measure::parse_pairing;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(pairs) = parse_pairing(text) {
            assert!(pairs.len() >= 2);
        }
    }
});
