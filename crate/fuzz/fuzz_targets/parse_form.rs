#![no_main]
use g2lab::json::{form_to_json, parse_form};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_form(text) {
        // printing is canonical: a second round trip is byte-stable
        let printed = form_to_json(&f).to_string();
        let again = parse_form(&printed).unwrap();
        assert_eq!(again, f);
        assert_eq!(form_to_json(&again).to_string(), printed);
    }
});
