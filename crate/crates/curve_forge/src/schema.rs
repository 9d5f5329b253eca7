//! JSON file formats for plane models and graded ideals.
//!
//! Two shapes share one reader: a *plane model file* (key `poly`)
//! describes a plane curve with assigned singular points, and an *ideal
//! file* (key `generators`) lists homogeneous generators on `nvars`
//! variables.  Both carry a field string and optional metadata.
//!
//! Ingest trusts nothing: forms are re-parsed, degrees and variable
//! counts checked, assigned points re-verified to be ordinary of the
//! stated multiplicity, genus recomputed, and metadata cross-checked.
//! Files are data from outside the trust boundary, even when this crate
//! wrote them.

use serde::{Deserialize, Serialize};

use exact_core::Field;
use graded_ring::{parse_poly, HomogeneousPoly};

use crate::error::ForgeError;
use crate::model::PlaneModel;
use crate::points::PlanePoint;
use crate::ForgeResult;

/// A coordinate literal: a plain integer (interpreted through
/// `from_literal`, so bit-encoded over binary fields) or a field-specific
/// string such as `"3/4"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoordLiteral {
    Int(i64),
    Str(String),
}

/// One assigned singular point.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SingularPointEntry {
    pub point: [CoordLiteral; 3],
    pub mult: usize,
}

/// Curve-versus-surface tag for metadata.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetaKind {
    Curve,
    K3,
}

/// Known special classes in the corpus; `none` means generic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExceptionalClass {
    #[default]
    None,
    Trigonal,
    PlaneQuintic,
}

/// Optional metadata block: identity and the invariants the object is
/// expected to have.  Expectations are recorded inputs, never computed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Meta {
    pub name: String,
    pub kind: MetaKind,
    pub genus: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_clifford: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_gonality: Option<usize>,
    #[serde(default)]
    pub exceptional_class: ExceptionalClass,
}

/// Serialized plane model.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlaneModelFile {
    pub field: String,
    pub degree: usize,
    pub poly: String,
    #[serde(default)]
    pub singular_points: Vec<SingularPointEntry>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

/// Serialized graded ideal.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealFile {
    pub field: String,
    pub nvars: usize,
    pub generators: Vec<String>,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

/// Either input shape, sniffed by its distinguishing key.
#[derive(Debug, Clone)]
pub enum InputFile {
    Plane(PlaneModelFile),
    Ideal(IdealFile),
}

impl InputFile {
    pub fn field_string(&self) -> &str {
        match self {
            InputFile::Plane(f) => &f.field,
            InputFile::Ideal(f) => &f.field,
        }
    }

    pub fn meta(&self) -> Option<&Meta> {
        match self {
            InputFile::Plane(f) => f.meta.as_ref(),
            InputFile::Ideal(f) => f.meta.as_ref(),
        }
    }

    pub fn to_json(&self) -> String {
        let out = match self {
            InputFile::Plane(f) => serde_json::to_string_pretty(f),
            InputFile::Ideal(f) => serde_json::to_string_pretty(f),
        };
        out.expect("schema structs serialize")
    }
}

/// Parses either file shape from JSON text.
pub fn parse_input(text: &str) -> ForgeResult<InputFile> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| ForgeError::Schema(format!("bad JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| ForgeError::Schema("top level must be an object".into()))?;
    if obj.contains_key("poly") {
        let file: PlaneModelFile = serde_json::from_value(value.clone())
            .map_err(|e| ForgeError::Schema(format!("bad plane model file: {e}")))?;
        Ok(InputFile::Plane(file))
    } else if obj.contains_key("generators") {
        let file: IdealFile = serde_json::from_value(value.clone())
            .map_err(|e| ForgeError::Schema(format!("bad ideal file: {e}")))?;
        Ok(InputFile::Ideal(file))
    } else {
        Err(ForgeError::Schema(
            "unrecognized input: expected a `poly` or `generators` key".into(),
        ))
    }
}

fn check_field_string<F: Field>(field: &F, stated: &str) -> ForgeResult<()> {
    let spec: exact_core::FieldSpec = stated
        .parse()
        .map_err(|e| ForgeError::Schema(format!("bad field string `{stated}`: {e}")))?;
    if spec != field.spec() {
        return Err(ForgeError::Schema(format!(
            "file is over {spec}, reader supplied {}",
            field.spec()
        )));
    }
    Ok(())
}

/// Converts a coordinate literal into a field element.
pub fn coord_to_elem<F: Field>(field: &F, c: &CoordLiteral) -> ForgeResult<F::Elem> {
    match c {
        CoordLiteral::Int(i) => Ok(field.from_literal(*i)),
        CoordLiteral::Str(s) => field
            .parse_elem(s)
            .map_err(|e| ForgeError::Schema(format!("bad coordinate `{s}`: {e}"))),
    }
}

/// Validates internal consistency of a metadata block.
pub fn validate_meta(meta: &Meta) -> ForgeResult<()> {
    if meta.name.is_empty() {
        return Err(ForgeError::Schema("meta.name must be nonempty".into()));
    }
    if meta.genus < 3 {
        return Err(ForgeError::GenusTooSmall(meta.genus as i64));
    }
    if let Some(c) = meta.expected_clifford {
        if c == 0 || 2 * c > meta.genus - 1 {
            return Err(ForgeError::Schema(format!(
                "expected_clifford {c} out of range for genus {}",
                meta.genus
            )));
        }
        if let Some(gon) = meta.expected_gonality {
            // Clifford index of a gonality pencil: gon - 2, and the index
            // of the curve sits within one of it.
            if c + 2 > gon || c + 3 < gon {
                return Err(ForgeError::Schema(format!(
                    "expected_clifford {c} inconsistent with expected_gonality {gon}"
                )));
            }
        }
    }
    match meta.exceptional_class {
        ExceptionalClass::Trigonal => {
            if meta.expected_gonality.is_some_and(|gon| gon != 3) {
                return Err(ForgeError::Schema(
                    "trigonal class requires gonality 3".into(),
                ));
            }
        }
        ExceptionalClass::PlaneQuintic => {
            if meta.genus != 6 {
                return Err(ForgeError::Schema(
                    "plane_quintic class requires genus 6".into(),
                ));
            }
        }
        ExceptionalClass::None => {}
    }
    Ok(())
}

/// Rebuilds and fully revalidates a plane model from its file form.
pub fn ingest_plane_model<F: Field>(
    field: &F,
    file: &PlaneModelFile,
) -> ForgeResult<PlaneModel<F>> {
    check_field_string(field, &file.field)?;
    let form = parse_poly(field, 3, &file.poly)?;
    let mut points = Vec::with_capacity(file.singular_points.len());
    for entry in &file.singular_points {
        let coords = [
            coord_to_elem(field, &entry.point[0])?,
            coord_to_elem(field, &entry.point[1])?,
            coord_to_elem(field, &entry.point[2])?,
        ];
        points.push((PlanePoint::new(field, coords)?, entry.mult));
    }
    let model = PlaneModel::assemble(field.clone(), file.degree, form, points, file.seed)?;
    if let Some(meta) = &file.meta {
        validate_meta(meta)?;
        if meta.kind != MetaKind::Curve {
            return Err(ForgeError::Schema(
                "plane model files describe curves; meta.kind must be `curve`".into(),
            ));
        }
        if meta.genus != model.genus() {
            return Err(ForgeError::Schema(format!(
                "meta.genus {} disagrees with the computed genus {}",
                meta.genus,
                model.genus()
            )));
        }
    }
    Ok(model)
}

/// Parses and validates an ideal file; returns the generators (the caller
/// builds whatever quotient it needs).
pub fn ingest_ideal<F: Field>(
    field: &F,
    file: &IdealFile,
) -> ForgeResult<Vec<HomogeneousPoly<F>>> {
    check_field_string(field, &file.field)?;
    if !(2..=16).contains(&file.nvars) {
        return Err(ForgeError::Schema(format!(
            "nvars must lie in 2..=16, got {}",
            file.nvars
        )));
    }
    // An empty generator list is legal: it presents the free polynomial
    // ring, a useful degenerate fixture.
    if file.label.is_empty() {
        return Err(ForgeError::Schema("label must be nonempty".into()));
    }
    let mut gens = Vec::with_capacity(file.generators.len());
    for text in &file.generators {
        let gen = parse_poly(field, file.nvars, text)?;
        if gen.is_zero() {
            return Err(ForgeError::ZeroForm);
        }
        gens.push(gen);
    }
    if let Some(meta) = &file.meta {
        validate_meta(meta)?;
        let expected_vars = match meta.kind {
            MetaKind::Curve => meta.genus,
            MetaKind::K3 => meta.genus + 1,
        };
        if file.nvars != expected_vars {
            return Err(ForgeError::Schema(format!(
                "meta claims genus {} ({:?}), which needs {expected_vars} variables, file has {}",
                meta.genus, meta.kind, file.nvars
            )));
        }
    }
    Ok(gens)
}

/// Renders a plane model back to its file form.  Coefficients were
/// denominator-cleared at construction, so the poly string re-parses in
/// any field.
pub fn render_plane_model<F: Field>(model: &PlaneModel<F>, meta: Option<Meta>) -> PlaneModelFile {
    let field = model.field();
    let singular_points = model
        .singular_points()
        .iter()
        .map(|(p, m)| SingularPointEntry {
            point: [
                CoordLiteral::Str(field.elem_string(&p.coords()[0])),
                CoordLiteral::Str(field.elem_string(&p.coords()[1])),
                CoordLiteral::Str(field.elem_string(&p.coords()[2])),
            ],
            mult: *m,
        })
        .collect();
    PlaneModelFile {
        field: field.spec().to_string(),
        degree: model.degree(),
        poly: model.form().to_string(),
        singular_points,
        seed: model.seed(),
        meta,
    }
}

/// Renders generators to an ideal file.
pub fn render_ideal<F: Field>(
    field: &F,
    nvars: usize,
    gens: &[HomogeneousPoly<F>],
    label: &str,
    meta: Option<Meta>,
) -> IdealFile {
    IdealFile {
        field: field.spec().to_string(),
        nvars,
        generators: gens.iter().map(|g| g.to_string()).collect(),
        label: label.to_string(),
        meta,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::build_plane_model;
    use exact_core::{PrimeField, SplitMix64};
    use crate::ideals::ci_ideal;

    #[test]
    fn plane_model_files_round_trip() {
        let f = PrimeField::new(101).unwrap();
        let model = build_plane_model(&f, 5, &[2], 1).unwrap();
        let meta = Meta {
            name: "g5_trigonal".into(),
            kind: MetaKind::Curve,
            genus: 5,
            expected_clifford: Some(1),
            expected_gonality: Some(3),
            exceptional_class: ExceptionalClass::Trigonal,
        };
        let file = render_plane_model(&model, Some(meta));
        let text = InputFile::Plane(file).to_json();
        let parsed = match parse_input(&text).unwrap() {
            InputFile::Plane(p) => p,
            other => panic!("expected a plane file, got {other:?}"),
        };
        let back = ingest_plane_model(&f, &parsed).unwrap();
        assert_eq!(back.form(), model.form());
        assert_eq!(back.genus(), 5);
        assert_eq!(back.singular_points()[0].0, model.singular_points()[0].0);
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let f = PrimeField::new(101).unwrap();
        let model = build_plane_model(&f, 5, &[2], 1).unwrap();
        let mut file = render_plane_model(&model, None);
        file.field = "gf:7".into();
        match ingest_plane_model(&f, &file) {
            Err(ForgeError::Schema(msg)) => assert!(msg.contains("gf:7")),
            other => panic!("expected a schema error, got {other:?}"),
        }
    }

    #[test]
    fn tampered_points_are_rejected() {
        let f = PrimeField::new(101).unwrap();
        let model = build_plane_model(&f, 5, &[2], 1).unwrap();
        let mut file = render_plane_model(&model, None);
        // Claim a node somewhere the form does not vanish twice.
        file.singular_points[0].point = [
            CoordLiteral::Int(1),
            CoordLiteral::Int(1),
            CoordLiteral::Int(1),
        ];
        assert!(matches!(
            ingest_plane_model(&f, &file),
            Err(ForgeError::Schema(_))
        ));
    }

    #[test]
    fn genus_claims_are_cross_checked() {
        let f = PrimeField::new(101).unwrap();
        let model = build_plane_model(&f, 5, &[2], 1).unwrap();
        let meta = Meta {
            name: "wrong".into(),
            kind: MetaKind::Curve,
            genus: 6,
            expected_clifford: None,
            expected_gonality: None,
            exceptional_class: ExceptionalClass::None,
        };
        let file = render_plane_model(&model, Some(meta));
        match ingest_plane_model(&f, &file) {
            Err(ForgeError::Schema(msg)) => assert!(msg.contains("genus")),
            other => panic!("expected a schema error, got {other:?}"),
        }
    }

    #[test]
    fn ideal_files_round_trip() {
        let f = PrimeField::new(1009).unwrap();
        let mut rng = SplitMix64::new(5);
        let gens = ci_ideal(&f, 4, &[2, 3], &mut rng).unwrap();
        let file = render_ideal(&f, 4, &gens, "g4_ci", None);
        let text = InputFile::Ideal(file).to_json();
        let parsed = match parse_input(&text).unwrap() {
            InputFile::Ideal(i) => i,
            other => panic!("expected an ideal file, got {other:?}"),
        };
        let back = ingest_ideal(&f, &parsed).unwrap();
        assert_eq!(back.len(), 2);
        assert_eq!(back[0], gens[0]);
        assert_eq!(back[1], gens[1]);
    }

    #[test]
    fn inconsistent_meta_is_rejected() {
        let meta = Meta {
            name: "bad".into(),
            kind: MetaKind::Curve,
            genus: 7,
            expected_clifford: Some(1),
            expected_gonality: Some(6),
            exceptional_class: ExceptionalClass::None,
        };
        assert!(matches!(
            validate_meta(&meta),
            Err(ForgeError::Schema(_))
        ));
        let meta = Meta {
            name: "bad".into(),
            kind: MetaKind::Curve,
            genus: 7,
            expected_clifford: Some(4),
            expected_gonality: None,
            exceptional_class: ExceptionalClass::None,
        };
        // 2c > g - 1.
        assert!(validate_meta(&meta).is_err());
    }

    #[test]
    fn unknown_shapes_are_rejected() {
        match parse_input("{\"stuff\": 3}") {
            Err(ForgeError::Schema(msg)) => assert!(msg.contains("poly")),
            other => panic!("expected a schema error, got {other:?}"),
        }
        assert!(parse_input("[1, 2]").is_err());
        assert!(parse_input("not json").is_err());
    }
}
