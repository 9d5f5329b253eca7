//! The classical theorems as dimension checks: projective normality
//! (Noether) and quadric generation of the canonical ideal (Petri).

use exact_core::{Field, Subspace};
use graded_ring::{HomogeneousPoly, QuotientKind};

use crate::report::CheckReport;

/// Expected piece dimension for the quotient's kind: the canonical-curve
/// profile `1, g, (2k-1)(g-1)` or the polarized-K3 profile
/// `1, then 2 + k^2 (g-1)`.
fn expected_dim(kind: QuotientKind, genus: usize, k: usize) -> usize {
    match (kind, k) {
        (_, 0) => 1,
        (QuotientKind::CanonicalCurve, 1) => genus,
        (QuotientKind::CanonicalCurve, _) => (2 * k - 1) * (genus - 1),
        (QuotientKind::K3, _) => 2 + k * k * (genus - 1),
    }
}

/// Surjectivity of the multiplication maps in dimension form: every
/// graded piece through `qmax` has the dimension Riemann-Roch predicts
/// for a projectively normal embedding.  For curve quotients this is the
/// statement of Noether's theorem (degree-wise surjectivity of
/// `Sym H^0(K) -> ⊕ H^0(kK)`); K3 quotients are held to their own
/// profile.
pub fn noether_check<F: Field>(
    quotient: &graded_ring::GradedQuotient<F>,
    genus: usize,
) -> CheckReport {
    let kind = quotient.kind();
    let mut offending = Vec::new();
    let mut dims = Vec::new();
    for k in 0..=quotient.qmax() {
        let got = quotient.dim_r(k);
        let want = expected_dim(kind, genus, k);
        dims.push(serde_json::json!({"k": k, "dim": got, "expected": want}));
        if got != want {
            offending.push(k);
        }
    }
    let passed = offending.is_empty();
    CheckReport::new(
        "noether",
        passed,
        serde_json::json!({
            "genus": genus,
            "kind": match kind {
                QuotientKind::CanonicalCurve => "curve",
                QuotientKind::K3 => "k3",
            },
            "pieces": dims,
            "offending_degrees": offending,
        }),
    )
}

/// Quadric generation of the ideal in degree 3: compares the span of
/// `S_1 · I_2` with `I_3`.  Passing is the conclusion of Petri's theorem
/// for non-exceptional curves; trigonal curves and plane quintics need a
/// cubic generator and fail.
pub fn petri_check<F: Field>(quotient: &graded_ring::GradedQuotient<F>) -> CheckReport {
    let field = quotient.field();
    let nvars = quotient.nvars();
    let i2 = quotient.ideal_piece_at(2);
    let i3 = quotient.ideal_piece_at(3);

    let mut rows = Vec::new();
    for v in i2.basis() {
        let quadric = HomogeneousPoly::from_dense(field.clone(), nvars, 2, v);
        for i in 0..nvars {
            let var = HomogeneousPoly::var(field.clone(), nvars, i);
            let shifted = quadric.mul(&var).expect("degree 3 stays in range");
            rows.push(shifted.to_dense());
        }
    }
    let product_span = Subspace::from_rows(field.clone(), i3.ambient_dim(), rows);

    // S_1 · I_2 is always contained in I_3, so equality is a dimension
    // statement.
    let passed = product_span.dim() == i3.dim();
    CheckReport::new(
        "petri",
        passed,
        serde_json::json!({
            "dim_i2": i2.dim(),
            "dim_s1_i2": product_span.dim(),
            "dim_i3": i3.dim(),
            "missing_cubics": i3.dim() - product_span.dim(),
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use curve_forge::{build_entry, find_entry};
    use exact_core::PrimeField;
    use graded_ring::quotient_sequence;

    #[test]
    fn quintic_ci_passes_both_classical_checks() {
        let f = PrimeField::new(1009).unwrap();
        let entry = find_entry("g5_generic").unwrap();
        let built = build_entry(&f, entry, 1, 4).unwrap();
        let noether = noether_check(&built.quotient, 5);
        assert!(noether.passed, "{}", noether.to_json_line());
        let petri = petri_check(&built.quotient);
        assert!(petri.passed, "{}", petri.to_json_line());
        assert_eq!(petri.details["dim_s1_i2"], 15);
        assert_eq!(petri.details["dim_i3"], 15);
    }

    #[test]
    fn genus_four_needs_its_cubic() {
        let f = PrimeField::new(1009).unwrap();
        let entry = find_entry("g4_ci").unwrap();
        let built = build_entry(&f, entry, 1, 4).unwrap();
        assert!(noether_check(&built.quotient, 4).passed);
        let petri = petri_check(&built.quotient);
        assert!(!petri.passed);
        assert_eq!(petri.details["dim_s1_i2"], 4);
        assert_eq!(petri.details["dim_i3"], 5);
        assert_eq!(petri.details["missing_cubics"], 1);
    }

    #[test]
    fn shrunken_quotient_fails_noether_at_the_right_degree() {
        // Four quadrics in five variables cut the quotient below the
        // genus-5 canonical profile starting in degree 2.
        let f = PrimeField::new(1009).unwrap();
        let mut rng = exact_core::SplitMix64::new(3);
        let gens = curve_forge::ci_ideal(&f, 5, &[2, 2, 2, 2], &mut rng).unwrap();
        let q = quotient_sequence(&f, 5, &gens, 4, "too_small").unwrap();
        let report = noether_check(&q, 5);
        assert!(!report.passed);
        let offending = report.details["offending_degrees"].as_array().unwrap();
        assert_eq!(offending[0], 2);
    }

    #[test]
    fn k3_quotients_are_held_to_the_k3_profile() {
        let f = PrimeField::new(101).unwrap();
        let entry = find_entry("k3_g4").unwrap();
        let built = build_entry(&f, entry, 1, 4).unwrap();
        let report = noether_check(&built.quotient, 4);
        assert!(report.passed, "{}", report.to_json_line());
        assert_eq!(report.details["kind"], "k3");
    }
}
