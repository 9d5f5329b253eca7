//! Field-description strings: parsing must never panic, and every
//! accepted spec must round-trip through its display form.

#![no_main]

use exact_core::FieldSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 256 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = text.parse::<FieldSpec>() {
        let rendered = spec.to_string();
        let again: FieldSpec = rendered.parse().expect("rendered spec parses");
        assert_eq!(again, spec, "display/parse round trip must be exact");
    }
});
