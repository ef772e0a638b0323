#![no_main]

use libfuzzer_sys::fuzz_target;
use ulmc_ts::experiments::{emit_csv, parse_curves};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(curves) = parse_curves(text) {
        let emitted = emit_csv(&curves);
        let again = parse_curves(&emitted).unwrap();
        assert_eq!(curves, again);
    }
});
