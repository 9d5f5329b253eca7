//! Structural identities of Betti tables: resolution self-duality and the
//! Hilbert-series alternating-sum identity.

use graded_ring::QuotientKind;
use koszul_engine::BettiTable;

use crate::error::CheckError;
use crate::report::CheckReport;

fn require_full(table: &BettiTable) -> Result<(), CheckError> {
    if table.is_partial() {
        Err(CheckError::PartialTable)
    } else {
        Ok(())
    }
}

/// Self-duality of the minimal resolution of a canonical curve or
/// polarized K3 ring: `β[p][q] = β[g-2-p][3-q]` across the whole window.
pub fn duality_check(table: &BettiTable) -> Result<CheckReport, CheckError> {
    require_full(table)?;
    let g = table.genus();
    let mut offending = Vec::new();
    for p in 0..=g - 2 {
        for q in 0..=3usize {
            let lhs = table.entry(p, q);
            let rhs = table.entry(g - 2 - p, 3 - q);
            if lhs != rhs {
                offending.push(serde_json::json!({
                    "cell": [p, q],
                    "value": lhs,
                    "dual_cell": [g - 2 - p, 3 - q],
                    "dual_value": rhs,
                }));
            }
        }
    }
    let passed = offending.is_empty();
    Ok(CheckReport::new(
        "duality",
        passed,
        serde_json::json!({"genus": g, "offending": offending}),
    ))
}

/// Coefficients `N_j`, `j = 0..=g+1`, of the resolution numerator
/// `(1-t)^nvars · H(t)` for the expected Hilbert profile of the table's
/// kind (curve: `1 + g t + Σ (2k-1)(g-1) t^k` on `g` variables; K3:
/// `1 + Σ (2 + k^2 (g-1)) t^k` on `g+1` variables).
pub fn resolution_numerator(kind: QuotientKind, genus: usize) -> Vec<i64> {
    let g = genus as i64;
    let nvars = match kind {
        QuotientKind::CanonicalCurve => genus,
        QuotientKind::K3 => genus + 1,
    };
    let top = genus + 1;
    let h = |k: usize| -> i64 {
        match (kind, k) {
            (_, 0) => 1,
            (QuotientKind::CanonicalCurve, 1) => g,
            (QuotientKind::CanonicalCurve, _) => (2 * k as i64 - 1) * (g - 1),
            (QuotientKind::K3, _) => 2 + (k as i64) * (k as i64) * (g - 1),
        }
    };
    (0..=top)
        .map(|j| {
            let mut n = 0i64;
            for i in 0..=j.min(nvars) {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                n += sign * graded_ring::binomial(nvars, i) as i64 * h(j - i);
            }
            n
        })
        .collect()
}

/// The alternating-sum identity `Σ_p (-1)^p β[p][j-p] = N_j` for every
/// `j ≤ g+1`, tying the table to the Hilbert series of the ring it
/// resolves.
pub fn hilbert_identity_check(table: &BettiTable, genus: usize) -> Result<CheckReport, CheckError> {
    require_full(table)?;
    if genus != table.genus() {
        return Err(CheckError::GateFailed(format!(
            "table has genus {}, check was asked about genus {genus}",
            table.genus()
        )));
    }
    let numerator = resolution_numerator(table.kind(), genus);
    let mut offending = Vec::new();
    let mut sums = Vec::new();
    for (j, &want) in numerator.iter().enumerate() {
        let mut got = 0i64;
        for p in j.saturating_sub(3)..=j.min(genus - 2) {
            let sign = if p % 2 == 0 { 1 } else { -1 };
            got += sign * table.entry(p, j - p) as i64;
        }
        sums.push(serde_json::json!({"j": j, "sum": got, "numerator": want}));
        if got != want {
            offending.push(j);
        }
    }
    let passed = offending.is_empty();
    Ok(CheckReport::new(
        "hilbert",
        passed,
        serde_json::json!({
            "genus": genus,
            "terms": sums,
            "offending_degrees": offending,
        }),
    ))
}
