#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = moncat::finvect::parse_linmap(s) {
        let text = serde_json::to_string(&moncat::finvect::LinMapFile::from_map(&v)).unwrap();
        assert_eq!(moncat::finvect::parse_linmap(&text).unwrap(), v);
    }
});
