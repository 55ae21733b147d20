#![no_main]

use eurbound::ProjectiveMeasurement;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(m) = ProjectiveMeasurement::from_json_str(text) {
            for i in 0..m.dim() {
                let p = m.projector(i);
                assert!((p.trace().re - 1.0).abs() < 1e-6);
            }
        }
    }
});
