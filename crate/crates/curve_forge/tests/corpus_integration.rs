//! End-to-end corpus construction: plane models through the adjoint
//! embedding, serialized sources re-ingested, and profiles checked
//! against Riemann-Roch.

use curve_forge::{
    build_entry, canonical_quotient, find_entry, ingest_plane_model, parse_input, InputFile,
};
use exact_core::{with_field, FieldSpec, PrimeField};
use graded_ring::quotient_sequence;

fn build_with_default_field(name: &str) -> Vec<usize> {
    let entry = find_entry(name).unwrap();
    let spec: FieldSpec = entry.default_field.parse().unwrap();
    with_field!(spec, |field| {
        let built = build_entry(&field, entry, entry.default_seed, 4).unwrap();
        assert_eq!(built.quotient.label(), name);
        built.quotient.piece_dims().to_vec()
    })
}

#[test]
fn trigonal_quintic_pipeline_and_reingest() {
    let entry = find_entry("g5_trigonal").unwrap();
    let field = PrimeField::new(101).unwrap();
    let built = build_entry(&field, entry, entry.default_seed, 4).unwrap();
    assert_eq!(built.quotient.piece_dims(), &[1, 5, 12, 20, 28]);

    // The serialized source re-ingests to the same canonical ring.
    let text = built.source.to_json();
    let InputFile::Plane(file) = parse_input(&text).unwrap() else {
        panic!("plane entry serialized to a non-plane file");
    };
    let model = ingest_plane_model(&field, &file).unwrap();
    let again = canonical_quotient(&model, 4, "g5_trigonal").unwrap();
    assert_eq!(again.piece_dims(), built.quotient.piece_dims());
    assert_eq!(again.ideal_piece_at(2).dim(), 3);
}

#[test]
fn plane_quintic_has_the_genus_six_profile() {
    assert_eq!(build_with_default_field("g6_plane_quintic"), [1, 6, 15, 25, 35]);
}

#[test]
fn four_nodal_sextic_has_the_genus_six_profile() {
    assert_eq!(build_with_default_field("g6_generic"), [1, 6, 15, 25, 35]);
}

#[test]
fn characteristic_two_septic_builds_over_gf16() {
    assert_eq!(build_with_default_field("g7_char2"), [1, 7, 18, 30, 42]);
}

#[test]
fn quartic_model_agrees_with_its_ideal_presentation() {
    let entry = find_entry("g3_generic").unwrap();
    let field = PrimeField::new(101).unwrap();
    let built = build_entry(&field, entry, 1, 4).unwrap();

    // For a smooth quartic the adjoints are the coordinate lines, so the
    // canonical ring is literally the hypersurface ring of the quartic.
    let InputFile::Plane(file) = &built.source else {
        panic!("plane entry serialized to a non-plane file");
    };
    let f = graded_ring::parse_poly(&field, 3, &file.poly).unwrap();
    let direct = quotient_sequence(&field, 3, &[f], 4, "quartic_ideal").unwrap();
    assert_eq!(direct.piece_dims(), built.quotient.piece_dims());
    assert_eq!(
        direct.ideal_piece_at(4).basis(),
        built.quotient.ideal_piece_at(4).basis()
    );
}
