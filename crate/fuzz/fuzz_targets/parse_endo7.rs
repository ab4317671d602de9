#![no_main]
use g2lab::json::{endo_to_json, parse_endo7};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(a) = parse_endo7(text) {
        assert_eq!(parse_endo7(&endo_to_json(&a).to_string()).unwrap(), a);
    }
});
