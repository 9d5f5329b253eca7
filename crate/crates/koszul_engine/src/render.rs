//! Text and JSON presentations of Betti tables.
//!
//! The text form is a fixed-width grid: a metadata line, a header row of
//! homological positions, then one row per internal degree `q = 0..=3`,
//! with zero entries shown as `.`:
//!
//! ```text
//! genus: 4  field: gf:101  label: g4_ci
//! q\p  0  1  2
//! 0    1  .  .
//! 1    .  1  .
//! 2    .  1  .
//! 3    .  .  1
//! ```
//!
//! The JSON form keeps only nonzero cells (`beta`) plus the differential
//! ranks that produced them, and decodes back to an identical table.

use std::str::FromStr;

use exact_core::FieldSpec;
use graded_ring::QuotientKind;
use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::error::KoszulError;

#[derive(Serialize, Deserialize)]
struct BettiJson {
    g: usize,
    field: String,
    label: String,
    kind: String,
    partial: bool,
    /// Nonzero entries as `[p, q, value]`, sorted by `(p, q)`.
    beta: Vec<(usize, usize, usize)>,
    /// Differential ranks as `[p, q, rank]`, sorted by `(p, q)`.
    ranks: Vec<(usize, usize, usize)>,
}

fn kind_str(kind: QuotientKind) -> &'static str {
    match kind {
        QuotientKind::CanonicalCurve => "curve",
        QuotientKind::K3 => "k3",
    }
}

/// Renders the fixed-width text grid; deterministic for a given table.
pub fn render_text(table: &BettiTable) -> String {
    let cols = table.ncols();
    let mut cells: Vec<Vec<String>> = Vec::with_capacity(5);
    let mut header: Vec<String> = vec!["q\\p".to_string()];
    header.extend((0..cols).map(|p| p.to_string()));
    cells.push(header);
    for q in 0..=3usize {
        let mut row = vec![q.to_string()];
        row.extend((0..cols).map(|p| match table.entry(p, q) {
            0 => ".".to_string(),
            v => v.to_string(),
        }));
        cells.push(row);
    }
    let widths: Vec<usize> = (0..=cols)
        .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(1))
        .collect();
    let mut out = format!(
        "genus: {}  field: {}  label: {}\n",
        table.genus(),
        table.field(),
        table.label()
    );
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| {
                if c == 0 {
                    format!("{:<width$}", s, width = widths[c])
                } else {
                    format!("{:>width$}", s, width = widths[c])
                }
            })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    if table.is_partial() {
        out.push_str("partial: ring profile is off the closed form; rows beyond q = 3 may be nonzero\n");
    }
    out
}

/// Serializes a table to pretty-printed JSON.
pub fn render_json(table: &BettiTable) -> String {
    let doc = BettiJson {
        g: table.genus(),
        field: table.field().to_string(),
        label: table.label().to_string(),
        kind: kind_str(table.kind()).to_string(),
        partial: table.is_partial(),
        beta: table.nonzero_cells(),
        ranks: table.ranks().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

/// Decodes a table from its JSON presentation.
pub fn parse_json(text: &str) -> Result<BettiTable, KoszulError> {
    let doc: BettiJson = serde_json::from_str(text).map_err(|e| KoszulError::Json(e.to_string()))?;
    if doc.g < 3 {
        return Err(KoszulError::GenusTooSmall(doc.g));
    }
    let field = FieldSpec::from_str(&doc.field)
        .map_err(|e| KoszulError::Json(format!("bad field string {:?}: {e}", doc.field)))?;
    let kind = match doc.kind.as_str() {
        "curve" => QuotientKind::CanonicalCurve,
        "k3" => QuotientKind::K3,
        other => {
            return Err(KoszulError::Json(format!(
                "unknown kind {other:?}; expected \"curve\" or \"k3\""
            )))
        }
    };
    let mut entries = vec![vec![0usize; doc.g - 1]; 4];
    for &(p, q, v) in &doc.beta {
        if q > 3 || p > doc.g - 2 {
            return Err(KoszulError::Json(format!(
                "cell ({p}, {q}) is outside the table window for genus {}",
                doc.g
            )));
        }
        entries[q][p] = v;
    }
    BettiTable::from_parts(doc.g, field, doc.label, kind, doc.partial, entries, doc.ranks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::betti_table;
    use exact_core::PrimeField;
    use graded_ring::{parse_poly, quotient_sequence};

    fn g4_table() -> BettiTable {
        let f = PrimeField::new(101).unwrap();
        let quadric = parse_poly(&f, 4, "x0*x3 - x1*x2").unwrap();
        let cubic = parse_poly(&f, 4, "x1^3 + x2^3 + x0^2*x1 + x3^2*x2").unwrap();
        let quot = quotient_sequence(&f, 4, &[quadric, cubic], 4, "g4_ci").unwrap();
        betti_table(&quot).unwrap()
    }

    #[test]
    fn text_grid_has_the_documented_shape() {
        let table = g4_table();
        let text = render_text(&table);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], "genus: 4  field: gf:101  label: g4_ci");
        assert_eq!(lines[1], "q\\p  0  1  2");
        assert_eq!(lines[2], "0    1  .  .");
        assert_eq!(lines[3], "1    .  1  .");
        assert_eq!(lines[4], "2    .  1  .");
        assert_eq!(lines[5], "3    .  .  1");
    }

    #[test]
    fn json_round_trip_reproduces_the_table_and_its_text() {
        let table = g4_table();
        let json = render_json(&table);
        let back = parse_json(&json).unwrap();
        assert_eq!(back, table);
        assert_eq!(render_text(&back), render_text(&table));
    }

    #[test]
    fn malformed_json_is_rejected_with_context() {
        assert!(matches!(parse_json("{"), Err(KoszulError::Json(_))));
        let bad_kind = r#"{"g":4,"field":"gf:101","label":"x","kind":"surface","partial":false,"beta":[],"ranks":[]}"#;
        assert!(matches!(parse_json(bad_kind), Err(KoszulError::Json(_))));
        let bad_field = r#"{"g":4,"field":"gf:6","label":"x","kind":"curve","partial":false,"beta":[],"ranks":[]}"#;
        assert!(matches!(parse_json(bad_field), Err(KoszulError::Json(_))));
        let out_of_window = r#"{"g":4,"field":"gf:101","label":"x","kind":"curve","partial":false,"beta":[[3,1,5]],"ranks":[]}"#;
        assert!(matches!(parse_json(out_of_window), Err(KoszulError::Json(_))));
        let tiny = r#"{"g":2,"field":"q","label":"x","kind":"curve","partial":false,"beta":[],"ranks":[]}"#;
        assert!(matches!(
            parse_json(tiny),
            Err(KoszulError::GenusTooSmall(2))
        ));
    }

    #[test]
    fn wide_entries_keep_columns_aligned() {
        use exact_core::FieldSpec;
        use graded_ring::QuotientKind;
        // Synthetic table with a three-digit entry to exercise padding.
        let mut entries = vec![vec![0usize; 6]; 4];
        entries[0][0] = 1;
        entries[1][2] = 120;
        entries[2][3] = 9;
        entries[3][5] = 1;
        let table = BettiTable::from_parts(
            7,
            FieldSpec::Rationals,
            "wide".to_string(),
            QuotientKind::CanonicalCurve,
            false,
            entries,
            vec![],
        )
        .unwrap();
        let text = render_text(&table);
        let lines: Vec<&str> = text.lines().collect();
        // All grid lines align on the widened column.
        let width = lines[1].len();
        for line in &lines[1..] {
            assert_eq!(line.len(), width, "{text}");
        }
        assert!(lines[3].contains("120"), "{text}");
    }
}
