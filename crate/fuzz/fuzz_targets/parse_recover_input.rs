#![no_main]
use g2lab::json::parse_recover_input;
use g2lab::torsion::recover_t;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((d_phi, d_star_phi)) = parse_recover_input(text) {
        assert_eq!((d_phi.degree(), d_star_phi.degree()), (4, 5));
        let _ = recover_t(&d_phi, &d_star_phi);
    }
});
