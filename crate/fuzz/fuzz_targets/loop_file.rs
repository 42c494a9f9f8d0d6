#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = moncat::loopspace::parse_loop(s) {
        let text = serde_json::to_string(&moncat::loopspace::LoopFile::from_loop(&v)).unwrap();
        assert_eq!(moncat::loopspace::parse_loop(&text).unwrap(), v);
    }
});
