#![no_main]

use eurbound::DensityMatrix;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(rho) = DensityMatrix::from_json_str(text) {
            let back =
                DensityMatrix::from_json_str(&rho.to_json()).expect("serialized state must parse");
            assert_eq!(back.layout(), rho.layout());
        }
    }
});
