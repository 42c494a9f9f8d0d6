#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = moncat::linalg::parse_q(s) {
        assert_eq!(moncat::linalg::parse_q(&moncat::linalg::show_q(&v)).unwrap(), v);
    }
});
