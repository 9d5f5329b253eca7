//! Syzygy space dimensions and graded Betti tables.
//!
//! The dimension in homological position `(p, q)` is computed from two
//! differential ranks:
//!
//! ```text
//! dim K_{p,q} = C(n, p) * dim R_q - rank d_{p,q} - rank d_{p+1,q-1},
//! ```
//!
//! valid because the image of `d_{p+1,q-1}` sits inside the kernel of
//! `d_{p,q}`.  A Betti table collects these numbers for `p = 0 ..= g-2` and
//! `q = 0 ..= 3`, sharing each rank between the two adjacent cells that use
//! it.  Ranks are exact, so the table is exact.

use std::collections::HashMap;

use exact_core::{Field, FieldSpec};
use graded_ring::{GradedQuotient, QuotientKind};
use rayon::prelude::*;

use crate::differential::differential_matrix;
use crate::error::KoszulError;
use crate::wedge::wedge_count;

/// Closed-form dimension of the degree-`q` piece of the coordinate ring:
/// for a canonically embedded curve of genus `g` the sequence is
/// `1, g, (2q-1)(g-1), ...`; for a K3-type surface of sectional genus `g`
/// it is `1, g+1, 2 + q^2 (g-1), ...`.
pub fn expected_piece_dims(kind: QuotientKind, genus: usize, q: usize) -> usize {
    match (kind, q) {
        (_, 0) => 1,
        (QuotientKind::CanonicalCurve, 1) => genus,
        (QuotientKind::CanonicalCurve, _) => (2 * q - 1) * (genus - 1),
        (QuotientKind::K3, _) => 2 + q * q * (genus - 1),
    }
}

/// Dimension of the syzygy space in position `(p, q)`.
///
/// Computes the two relevant differential ranks directly, so it suits spot
/// checks; building a whole table via [`betti_table`] shares ranks instead.
/// Requires `q + 1 <= qmax`.
pub fn koszul_dim<F: Field>(
    quotient: &GradedQuotient<F>,
    p: usize,
    q: usize,
) -> Result<usize, KoszulError> {
    let n = quotient.nvars();
    let middle = wedge_count(n, p) * quotient.dim_r(q);
    let out_rank = if p == 0 || p > n {
        0
    } else {
        differential_matrix(quotient, p, q)?.into_rank()
    };
    let in_rank = if q == 0 || p + 1 > n {
        0
    } else {
        differential_matrix(quotient, p + 1, q - 1)?.into_rank()
    };
    checked_cell(middle, out_rank, in_rank, p, q)
}

fn checked_cell(
    middle: usize,
    out_rank: usize,
    in_rank: usize,
    p: usize,
    q: usize,
) -> Result<usize, KoszulError> {
    middle
        .checked_sub(out_rank)
        .and_then(|m| m.checked_sub(in_rank))
        .ok_or_else(|| {
            // Unreachable for quotients built by `quotient_sequence`: the
            // composite of consecutive differentials vanishes there, forcing
            // rank(out) + rank(in) <= middle.
            KoszulError::Json(format!(
                "inconsistent ranks at position ({p}, {q}): {out_rank} + {in_rank} > {middle}"
            ))
        })
}

/// An exact graded Betti table over rows `q = 0..=3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    genus: usize,
    field: FieldSpec,
    label: String,
    kind: QuotientKind,
    /// Set when the ring's piece dimensions deviate from the closed-form
    /// profile for its kind; rows beyond `q = 3` may then be nonzero and the
    /// table shown is only the visible window.
    partial: bool,
    /// `entries[q][p]` for `q = 0..=3`, `p = 0..=genus-2`.
    entries: Vec<Vec<usize>>,
    /// `(p, q, rank d_{p,q})` for every computed differential, sorted.
    ranks: Vec<(usize, usize, usize)>,
}

impl BettiTable {
    /// Assembles a table from raw parts, validating shape; used by the JSON
    /// decoder and by synthetic fixtures in tests.
    pub fn from_parts(
        genus: usize,
        field: FieldSpec,
        label: String,
        kind: QuotientKind,
        partial: bool,
        entries: Vec<Vec<usize>>,
        ranks: Vec<(usize, usize, usize)>,
    ) -> Result<Self, KoszulError> {
        if genus < 3 {
            return Err(KoszulError::GenusTooSmall(genus));
        }
        if entries.len() != 4 || entries.iter().any(|row| row.len() != genus - 1) {
            return Err(KoszulError::Json(format!(
                "entry grid must be 4 rows of width {}",
                genus - 1
            )));
        }
        Ok(BettiTable {
            genus,
            field,
            label,
            kind,
            partial,
            entries,
            ranks,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> QuotientKind {
        self.kind
    }

    pub fn is_partial(&self) -> bool {
        self.partial
    }

    /// Number of columns, `genus - 1` (positions `p = 0..=genus-2`).
    pub fn ncols(&self) -> usize {
        self.genus - 1
    }

    /// `dim K_{p,q}`; zero outside the stored window.
    pub fn entry(&self, p: usize, q: usize) -> usize {
        if q > 3 || p > self.genus - 2 {
            return 0;
        }
        self.entries[q][p]
    }

    /// The computed differential ranks `(p, q, rank d_{p,q})`.
    pub fn ranks(&self) -> &[(usize, usize, usize)] {
        &self.ranks
    }

    /// Nonzero cells as `(p, q, value)`, sorted by `(p, q)`.
    pub fn nonzero_cells(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for p in 0..=self.genus - 2 {
            for q in 0..=3 {
                let v = self.entries[q][p];
                if v != 0 {
                    out.push((p, q, v));
                }
            }
        }
        out
    }
}

/// Computes the full Betti table of a quotient.
///
/// Every differential rank in the window `p = 1..=g-1`, `q = 0..=3` is
/// computed exactly once and shared by the adjacent cells.  Requires the
/// quotient to be computed through degree at least 4 (`q = 3` cells consume
/// the degree-4 piece).  The `partial` flag is set — never an error — when
/// the ring's piece dimensions stray from the closed-form profile of its
/// kind, since then rows `q > 3` need not vanish.
pub fn betti_table<F: Field>(quotient: &GradedQuotient<F>) -> Result<BettiTable, KoszulError> {
    let g = quotient.genus();
    if g < 3 {
        return Err(KoszulError::GenusTooSmall(g));
    }
    if quotient.qmax() < 4 {
        return Err(KoszulError::QmaxTooSmall {
            need: 4,
            have: quotient.qmax(),
        });
    }
    let n = quotient.nvars();
    let partial = (0..=quotient.qmax())
        .any(|q| quotient.dim_r(q) != expected_piece_dims(quotient.kind(), g, q));

    // One rank job per differential the table window touches.
    let jobs: Vec<(usize, usize)> = (1..=(g - 1).min(n))
        .flat_map(|p| (0..=3).map(move |q| (p, q)))
        .collect();
    let computed: Result<Vec<((usize, usize), usize)>, KoszulError> = jobs
        .into_par_iter()
        .map(|(p, q)| {
            let rank = differential_matrix(quotient, p, q)?.into_rank();
            Ok(((p, q), rank))
        })
        .collect();
    let grid: HashMap<(usize, usize), usize> = computed?.into_iter().collect();
    let rank_at = |p: usize, q: usize| -> usize {
        if p == 0 || p > n {
            0
        } else {
            *grid.get(&(p, q)).expect("rank job covered the window")
        }
    };

    let mut entries = vec![vec![0usize; g - 1]; 4];
    for q in 0..=3usize {
        for p in 0..=g - 2 {
            let middle = wedge_count(n, p) * quotient.dim_r(q);
            let out_rank = rank_at(p, q);
            let in_rank = if q == 0 { 0 } else { rank_at(p + 1, q - 1) };
            entries[q][p] = checked_cell(middle, out_rank, in_rank, p, q)?;
        }
    }
    let mut ranks: Vec<(usize, usize, usize)> =
        grid.into_iter().map(|((p, q), r)| (p, q, r)).collect();
    ranks.sort_unstable();
    BettiTable::from_parts(
        g,
        quotient.field().spec(),
        quotient.label().to_string(),
        quotient.kind(),
        partial,
        entries,
        ranks,
    )
}
