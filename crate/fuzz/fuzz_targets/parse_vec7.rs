#![no_main]
use g2lab::json::{parse_vec7, vec7_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_vec7(text) {
        assert_eq!(parse_vec7(&vec7_to_json(&v).to_string()).unwrap(), v);
    }
});
