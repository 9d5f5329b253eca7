//! Plane-model JSON files: schema parsing, point validation, and model
//! assembly must never panic, whatever the bytes say.

#![no_main]

use curve_forge::{ingest_plane_model, parse_input, InputFile};
use exact_core::{with_field, FieldSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 16 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(InputFile::Plane(file)) = parse_input(text) else {
        return;
    };
    let Ok(spec) = file.field.parse::<FieldSpec>() else {
        return;
    };
    with_field!(spec, |field| {
        let _ = ingest_plane_model(&field, &file);
    });
});
