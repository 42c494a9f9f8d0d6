#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = moncat::cob::parse_cob_class(s) {
        let text = serde_json::to_string(&moncat::cob::CobClassFile::from_class(&v)).unwrap();
        assert_eq!(moncat::cob::parse_cob_class(&text).unwrap(), v);
    }
});
