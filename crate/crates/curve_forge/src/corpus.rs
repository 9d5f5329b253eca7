//! The named corpus: reproducible curve and surface recipes with their
//! expected invariants.
//!
//! Each entry records how to build the object (a plane model or a
//! complete intersection), a default field and seed, and the invariants
//! the construction is expected to realize: genus, Clifford index,
//! gonality, and membership in one of the exceptional classes.  The
//! Clifford values are recorded expectations — the generic value
//! `[(g-1)/2]`, the gonal bound `gon - 2`, or the known value for the
//! special classes — never computed from the object.

use exact_core::{Field, SplitMix64};
use graded_ring::{quotient_sequence, GradedQuotient, QuotientKind};

use crate::adjoint::canonical_quotient;
use crate::error::ForgeError;
use crate::ideals::{ci_ideal, hyperplane_section, random_hyperplane};
use crate::model::{build_plane_model, canonical_dimension};
use crate::schema::{
    render_ideal, render_plane_model, ExceptionalClass, InputFile, Meta, MetaKind,
};
use crate::ForgeResult;

/// How a corpus entry is constructed.
#[derive(Debug, Clone, Copy)]
pub enum Recipe {
    /// Nodal (or smooth) plane model, canonically embedded via adjoints.
    PlaneModel {
        degree: usize,
        multiplicities: &'static [usize],
    },
    /// Canonical curve presented directly as a complete intersection.
    CurveCi {
        nvars: usize,
        degrees: &'static [usize],
    },
    /// Polarized K3-type surface as a complete intersection.
    K3Ci {
        nvars: usize,
        degrees: &'static [usize],
    },
}

/// One corpus entry: recipe plus recorded expectations.
#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub recipe: Recipe,
    pub default_field: &'static str,
    pub default_seed: u64,
    pub genus: usize,
    pub expected_clifford: usize,
    pub expected_gonality: usize,
    pub exceptional_class: ExceptionalClass,
}

const CORPUS: &[CorpusEntry] = &[
    CorpusEntry {
        name: "g3_generic",
        recipe: Recipe::PlaneModel {
            degree: 4,
            multiplicities: &[],
        },
        default_field: "gf:101",
        default_seed: 1,
        genus: 3,
        expected_clifford: 1,
        expected_gonality: 3,
        exceptional_class: ExceptionalClass::None,
    },
    CorpusEntry {
        name: "g4_ci",
        recipe: Recipe::CurveCi {
            nvars: 4,
            degrees: &[2, 3],
        },
        default_field: "gf:1009",
        default_seed: 1,
        genus: 4,
        expected_clifford: 1,
        expected_gonality: 3,
        exceptional_class: ExceptionalClass::Trigonal,
    },
    CorpusEntry {
        name: "g5_generic",
        recipe: Recipe::CurveCi {
            nvars: 5,
            degrees: &[2, 2, 2],
        },
        default_field: "gf:1009",
        default_seed: 1,
        genus: 5,
        expected_clifford: 2,
        expected_gonality: 4,
        exceptional_class: ExceptionalClass::None,
    },
    CorpusEntry {
        name: "g5_trigonal",
        recipe: Recipe::PlaneModel {
            degree: 5,
            multiplicities: &[2],
        },
        default_field: "gf:101",
        default_seed: 1,
        genus: 5,
        expected_clifford: 1,
        expected_gonality: 3,
        exceptional_class: ExceptionalClass::Trigonal,
    },
    CorpusEntry {
        name: "g6_plane_quintic",
        recipe: Recipe::PlaneModel {
            degree: 5,
            multiplicities: &[],
        },
        default_field: "gf:101",
        default_seed: 1,
        genus: 6,
        expected_clifford: 1,
        expected_gonality: 4,
        exceptional_class: ExceptionalClass::PlaneQuintic,
    },
    CorpusEntry {
        name: "g6_generic",
        recipe: Recipe::PlaneModel {
            degree: 6,
            multiplicities: &[2, 2, 2, 2],
        },
        default_field: "gf:1009",
        default_seed: 1,
        genus: 6,
        expected_clifford: 2,
        expected_gonality: 4,
        exceptional_class: ExceptionalClass::None,
    },
    CorpusEntry {
        name: "g7_generic",
        recipe: Recipe::PlaneModel {
            degree: 7,
            multiplicities: &[2; 8],
        },
        default_field: "gf:1009",
        default_seed: 1,
        genus: 7,
        expected_clifford: 3,
        expected_gonality: 5,
        exceptional_class: ExceptionalClass::None,
    },
    CorpusEntry {
        name: "g7_char2",
        recipe: Recipe::PlaneModel {
            degree: 7,
            multiplicities: &[2; 8],
        },
        default_field: "gf2e:4",
        default_seed: 1,
        genus: 7,
        expected_clifford: 3,
        expected_gonality: 5,
        exceptional_class: ExceptionalClass::None,
    },
    CorpusEntry {
        name: "g8_generic",
        recipe: Recipe::PlaneModel {
            degree: 7,
            multiplicities: &[2; 7],
        },
        default_field: "gf:1009",
        default_seed: 1,
        genus: 8,
        expected_clifford: 3,
        expected_gonality: 5,
        exceptional_class: ExceptionalClass::None,
    },
    CorpusEntry {
        name: "g9_generic",
        recipe: Recipe::PlaneModel {
            degree: 8,
            multiplicities: &[2; 12],
        },
        default_field: "gf:1009",
        default_seed: 1,
        genus: 9,
        expected_clifford: 4,
        expected_gonality: 6,
        exceptional_class: ExceptionalClass::None,
    },
    CorpusEntry {
        name: "k3_g3",
        recipe: Recipe::K3Ci {
            nvars: 4,
            degrees: &[4],
        },
        default_field: "gf:101",
        default_seed: 1,
        genus: 3,
        expected_clifford: 1,
        expected_gonality: 3,
        exceptional_class: ExceptionalClass::None,
    },
    CorpusEntry {
        name: "k3_g4",
        recipe: Recipe::K3Ci {
            nvars: 5,
            degrees: &[2, 3],
        },
        default_field: "gf:101",
        default_seed: 1,
        genus: 4,
        expected_clifford: 1,
        expected_gonality: 3,
        exceptional_class: ExceptionalClass::None,
    },
    CorpusEntry {
        name: "k3_g5",
        recipe: Recipe::K3Ci {
            nvars: 6,
            degrees: &[2, 2, 2],
        },
        default_field: "gf:101",
        default_seed: 1,
        genus: 5,
        expected_clifford: 2,
        expected_gonality: 4,
        exceptional_class: ExceptionalClass::None,
    },
];

/// All corpus entries, in presentation order.
pub fn corpus() -> &'static [CorpusEntry] {
    CORPUS
}

/// Looks an entry up by name.
pub fn find_entry(name: &str) -> ForgeResult<&'static CorpusEntry> {
    CORPUS
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| ForgeError::UnknownEntry(name.to_string()))
}

impl CorpusEntry {
    /// Whether the entry is a surface (its invariants then describe the
    /// hyperplane-section curve).
    pub fn is_surface(&self) -> bool {
        matches!(self.recipe, Recipe::K3Ci { .. })
    }

    pub fn kind(&self) -> MetaKind {
        if self.is_surface() {
            MetaKind::K3
        } else {
            MetaKind::Curve
        }
    }

    /// The entry's metadata block, as embedded in built files.
    pub fn meta(&self) -> Meta {
        Meta {
            name: self.name.to_string(),
            kind: self.kind(),
            genus: self.genus,
            expected_clifford: Some(self.expected_clifford),
            expected_gonality: Some(self.expected_gonality),
            exceptional_class: self.exceptional_class,
        }
    }

    /// Genus implied by the recipe alone.
    pub fn recipe_genus(&self) -> i64 {
        match self.recipe {
            Recipe::PlaneModel {
                degree,
                multiplicities,
            } => crate::model::plane_genus(degree, multiplicities),
            Recipe::CurveCi { nvars, .. } => nvars as i64,
            Recipe::K3Ci { nvars, .. } => nvars as i64 - 1,
        }
    }
}

/// Expected dimension of the degree-`q` piece of a polarized K3 ring of
/// section genus `g`: 1, then `2 + q^2 (g - 1)`.
pub fn k3_dimension(genus: usize, q: usize) -> usize {
    if q == 0 {
        1
    } else {
        2 + q * q * (genus - 1)
    }
}

/// A built corpus object: the graded quotient plus its reproducible
/// serialized source.
#[derive(Debug, Clone)]
pub struct BuiltEntry<F: Field> {
    pub quotient: GradedQuotient<F>,
    pub source: InputFile,
}

fn check_profile<F: Field>(
    quotient: &GradedQuotient<F>,
    expected: impl Fn(usize) -> usize,
) -> Result<(), String> {
    for q in 0..=quotient.qmax() {
        let got = quotient.dim_r(q);
        let want = expected(q);
        if got != want {
            return Err(format!(
                "degree-{q} piece has dimension {got}, expected {want}"
            ));
        }
    }
    Ok(())
}

/// Builds a corpus entry over the given field from the given seed,
/// carrying the quotient through degree `qmax`.  Complete intersections
/// are resampled (up to 32 draws from the seed's stream) until the
/// dimension profile gate passes; plane models carry their own gates.
pub fn build_entry<F: Field>(
    field: &F,
    entry: &CorpusEntry,
    seed: u64,
    qmax: usize,
) -> ForgeResult<BuiltEntry<F>> {
    match entry.recipe {
        Recipe::PlaneModel {
            degree,
            multiplicities,
        } => {
            let model = build_plane_model(field, degree, multiplicities, seed)?;
            if model.genus() != entry.genus {
                return Err(ForgeError::Schema(format!(
                    "entry {} recipe builds genus {}, table says {}",
                    entry.name,
                    model.genus(),
                    entry.genus
                )));
            }
            let quotient = canonical_quotient(&model, qmax, entry.name)?;
            let source = InputFile::Plane(render_plane_model(&model, Some(entry.meta())));
            Ok(BuiltEntry { quotient, source })
        }
        Recipe::CurveCi { nvars, degrees } => {
            let mut rng = SplitMix64::new(seed);
            let mut last = String::from("no attempt made");
            for _ in 0..32 {
                let gens = ci_ideal(field, nvars, degrees, &mut rng)?;
                let quotient = quotient_sequence(field, nvars, &gens, qmax, entry.name)?
                    .with_meta(QuotientKind::CanonicalCurve, entry.genus);
                match check_profile(&quotient, |q| canonical_dimension(entry.genus, q)) {
                    Ok(()) => {
                        let source = InputFile::Ideal(render_ideal(
                            field,
                            nvars,
                            &gens,
                            entry.name,
                            Some(entry.meta()),
                        ));
                        return Ok(BuiltEntry { quotient, source });
                    }
                    Err(reason) => last = reason,
                }
            }
            Err(ForgeError::ConstructionFailed {
                attempts: 32,
                reason: last,
            })
        }
        Recipe::K3Ci { nvars, degrees } => {
            let mut rng = SplitMix64::new(seed);
            let mut last = String::from("no attempt made");
            for _ in 0..32 {
                let gens = ci_ideal(field, nvars, degrees, &mut rng)?;
                let quotient = quotient_sequence(field, nvars, &gens, qmax, entry.name)?
                    .with_meta(QuotientKind::K3, entry.genus);
                match check_profile(&quotient, |q| k3_dimension(entry.genus, q)) {
                    Ok(()) => {
                        let source = InputFile::Ideal(render_ideal(
                            field,
                            nvars,
                            &gens,
                            entry.name,
                            Some(entry.meta()),
                        ));
                        return Ok(BuiltEntry { quotient, source });
                    }
                    Err(reason) => last = reason,
                }
            }
            Err(ForgeError::ConstructionFailed {
                attempts: 32,
                reason: last,
            })
        }
    }
}

/// Builds a K3 entry together with its hyperplane-section curve, both
/// from one deterministic stream.  The section's quotient must satisfy
/// the canonical-curve profile — which makes the pair exhibit
/// `dim R(Y)_q = dim R(X)_q - dim R(X)_{q-1}` degree by degree.
pub fn build_k3_with_section<F: Field>(
    field: &F,
    entry: &CorpusEntry,
    seed: u64,
    qmax: usize,
) -> ForgeResult<(GradedQuotient<F>, GradedQuotient<F>)> {
    let Recipe::K3Ci { nvars, degrees } = entry.recipe else {
        return Err(ForgeError::Schema(format!(
            "entry {} is not a surface",
            entry.name
        )));
    };
    let g = entry.genus;
    let mut rng = SplitMix64::new(seed);
    let mut last = String::from("no attempt made");
    for _ in 0..32 {
        let gens = ci_ideal(field, nvars, degrees, &mut rng)?;
        let surface = quotient_sequence(field, nvars, &gens, qmax, entry.name)?
            .with_meta(QuotientKind::K3, g);
        if let Err(reason) = check_profile(&surface, |q| k3_dimension(g, q)) {
            last = format!("surface: {reason}");
            continue;
        }
        let ell = random_hyperplane(field, nvars, &mut rng);
        let section = hyperplane_section(field, &gens, &ell)?;
        let label = format!("{}_section", entry.name);
        let curve = quotient_sequence(field, nvars - 1, &section, qmax, &label)?
            .with_meta(QuotientKind::CanonicalCurve, g);
        match check_profile(&curve, |q| canonical_dimension(g, q)) {
            Ok(()) => return Ok((surface, curve)),
            Err(reason) => last = format!("section: {reason}"),
        }
    }
    Err(ForgeError::ConstructionFailed {
        attempts: 32,
        reason: last,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema::validate_meta;
    use exact_core::with_field;

    #[test]
    fn table_is_internally_consistent() {
        assert_eq!(CORPUS.len(), 13);
        let mut names = std::collections::HashSet::new();
        for entry in corpus() {
            assert!(names.insert(entry.name), "duplicate name {}", entry.name);
            validate_meta(&entry.meta()).unwrap();
            assert_eq!(
                entry.recipe_genus(),
                entry.genus as i64,
                "recipe/table genus mismatch on {}",
                entry.name
            );
            assert!(entry.default_field.parse::<exact_core::FieldSpec>().is_ok());
            // Clifford expectations: within the generic bound and within
            // one of the gonality pencil's value.
            assert!(2 * entry.expected_clifford <= entry.genus - 1);
            assert!(entry.expected_clifford + 2 <= entry.expected_gonality);
            assert!(entry.expected_gonality <= entry.expected_clifford + 3);
        }
        for name in ["g4_ci", "g5_trigonal", "g6_plane_quintic"] {
            assert!(
                find_entry(name).unwrap().exceptional_class != ExceptionalClass::None,
                "{name} should be exceptional"
            );
        }
        let exceptional = corpus()
            .iter()
            .filter(|e| e.exceptional_class != ExceptionalClass::None)
            .count();
        assert_eq!(exceptional, 3);
    }

    #[test]
    fn unknown_entries_are_reported() {
        match find_entry("g11_fancy") {
            Err(ForgeError::UnknownEntry(name)) => assert_eq!(name, "g11_fancy"),
            other => panic!("expected UnknownEntry, got {other:?}"),
        }
    }

    #[test]
    fn small_entries_build_with_their_profiles() {
        let entry = find_entry("g4_ci").unwrap();
        let spec: exact_core::FieldSpec = entry.default_field.parse().unwrap();
        with_field!(spec, |field| {
            let built = build_entry(&field, entry, entry.default_seed, 4).unwrap();
            assert_eq!(built.quotient.piece_dims(), &[1, 4, 9, 15, 21]);
            assert_eq!(built.quotient.genus(), 4);
        });

        let entry = find_entry("k3_g3").unwrap();
        let spec: exact_core::FieldSpec = entry.default_field.parse().unwrap();
        with_field!(spec, |field| {
            let built = build_entry(&field, entry, entry.default_seed, 4).unwrap();
            assert_eq!(built.quotient.piece_dims(), &[1, 4, 10, 20, 34]);
        });
    }

    #[test]
    fn builds_are_deterministic() {
        let entry = find_entry("g4_ci").unwrap();
        let f = exact_core::PrimeField::new(1009).unwrap();
        let a = build_entry(&f, entry, 9, 4).unwrap();
        let b = build_entry(&f, entry, 9, 4).unwrap();
        assert_eq!(a.source.to_json(), b.source.to_json());
        let c = build_entry(&f, entry, 10, 4).unwrap();
        assert_ne!(a.source.to_json(), c.source.to_json());
    }

    #[test]
    fn surface_and_section_satisfy_the_dimension_identity() {
        let entry = find_entry("k3_g3").unwrap();
        let f = exact_core::PrimeField::new(101).unwrap();
        let (surface, curve) = build_k3_with_section(&f, entry, 1, 4).unwrap();
        for q in 1..=4usize {
            assert_eq!(
                curve.dim_r(q),
                surface.dim_r(q) - surface.dim_r(q - 1),
                "difference identity fails at degree {q}"
            );
        }
    }
}
