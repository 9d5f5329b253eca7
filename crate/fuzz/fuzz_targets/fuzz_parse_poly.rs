//! Polynomial text parser: must never panic on arbitrary input, and every
//! accepted polynomial must survive a display/re-parse round trip.

#![no_main]

use exact_core::{BinaryField, PrimeField, Rationals};
use graded_ring::parse_poly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let rationals = Rationals::new();
    let gf101 = PrimeField::new(101).unwrap();
    let gf16 = BinaryField::with_default_modulus(4).unwrap();

    for nvars in [1usize, 3, 5] {
        if let Ok(poly) = parse_poly(&rationals, nvars, text) {
            let rendered = poly.to_string();
            let again = parse_poly(&rationals, nvars, &rendered).expect("rendered text parses");
            assert_eq!(again.to_string(), rendered, "round trip must be stable");
        }
        let _ = parse_poly(&gf101, nvars, text);
        let _ = parse_poly(&gf16, nvars, text);
    }
});
