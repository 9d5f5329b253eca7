//! Sparse rank by Markowitz-style pivoting.
//!
//! Pivots are chosen to limit fill-in: the pivot column is one of minimal
//! nonzero count and the pivot row is a shortest row in that column.  Column
//! occupancy lists are maintained lazily (stale entries are tolerated and
//! compacted on use).  When the active submatrix exceeds 20% fill the
//! remainder is densified and handed to the owning field's dense kernel,
//! whose unreduced multiply-accumulate loop is faster at that density.

use crate::field::Field;

/// Fill fraction above which the active submatrix is densified.
const DENSIFY_FILL: f64 = 0.20;

/// Minimum active dimensions before densification is considered.
const DENSIFY_MIN_DIM: usize = 32;

/// Rank of a sparse matrix given as sorted `(column, value)` rows.
pub(crate) fn markowitz_rank<F: Field>(
    field: &F,
    nrows: usize,
    ncols: usize,
    mut rows: Vec<Vec<(u32, F::Elem)>>,
) -> usize {
    debug_assert_eq!(rows.len(), nrows);
    let mut alive = vec![true; nrows];
    let mut n_alive = 0usize;
    let mut nnz = 0usize;
    let mut col_count = vec![0u32; ncols];
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            alive[r] = false;
            continue;
        }
        n_alive += 1;
        nnz += row.len();
        for (c, _) in row {
            col_count[*c as usize] += 1;
            col_rows[*c as usize].push(r as u32);
        }
    }

    let mut rank = 0usize;
    loop {
        if n_alive == 0 {
            return rank;
        }
        let active_cols = col_count.iter().filter(|&&c| c > 0).count();
        if active_cols == 0 {
            return rank;
        }
        let fill = nnz as f64 / (n_alive as f64 * active_cols as f64);
        if n_alive.min(active_cols) > DENSIFY_MIN_DIM && fill > DENSIFY_FILL {
            return rank + densified_rank(field, ncols, &rows, &alive, &col_count);
        }

        // Pivot column: minimal nonzero count.
        let pc = (0..ncols)
            .filter(|&c| col_count[c] > 0)
            .min_by_key(|&c| col_count[c])
            .expect("active column exists");
        // Pivot row: shortest valid row in that column; compact the
        // occupancy list while scanning.
        let mut valid: Vec<u32> = Vec::with_capacity(col_rows[pc].len());
        let mut pr: Option<(u32, usize)> = None;
        for &r in &col_rows[pc] {
            let ru = r as usize;
            if !alive[ru] || valid.contains(&r) {
                continue;
            }
            if rows[ru].binary_search_by_key(&(pc as u32), |e| e.0).is_err() {
                continue;
            }
            valid.push(r);
            let len = rows[ru].len();
            if pr.map_or(true, |(_, best)| len < best) {
                pr = Some((r, len));
            }
        }
        let (pr, _) = pr.expect("column count said a pivot row exists");
        let pru = pr as usize;

        // Retire the pivot row.
        let piv = std::mem::take(&mut rows[pru]);
        alive[pru] = false;
        n_alive -= 1;
        nnz -= piv.len();
        for (c, _) in &piv {
            col_count[*c as usize] -= 1;
        }
        let piv_idx = piv
            .binary_search_by_key(&(pc as u32), |e| e.0)
            .expect("pivot row contains pivot column");
        let pivinv = field.inv(&piv[piv_idx].1).expect("pivot entry is nonzero");

        // Eliminate the pivot column from every other valid row.
        for &r in &valid {
            if r == pr {
                continue;
            }
            let ru = r as usize;
            let old = std::mem::take(&mut rows[ru]);
            nnz -= old.len();
            for (c, _) in &old {
                col_count[*c as usize] -= 1;
            }
            let k = old
                .binary_search_by_key(&(pc as u32), |e| e.0)
                .expect("valid row contains pivot column");
            let factor = field.mul(&old[k].1, &pivinv);
            let (new_row, gained) = merge_eliminate(field, &old, &piv, &factor, pc as u32);
            nnz += new_row.len();
            for (c, _) in &new_row {
                col_count[*c as usize] += 1;
            }
            for c in gained {
                col_rows[c as usize].push(r);
            }
            if new_row.is_empty() {
                alive[ru] = false;
                n_alive -= 1;
            } else {
                rows[ru] = new_row;
            }
        }
        debug_assert_eq!(col_count[pc], 0, "pivot column fully eliminated");
        col_rows[pc].clear();
        rank += 1;
    }
}

/// `old - factor * piv`, skipping the pivot column (which cancels exactly).
/// Returns the merged row and the columns newly gained from the pivot row.
fn merge_eliminate<F: Field>(
    field: &F,
    old: &[(u32, F::Elem)],
    piv: &[(u32, F::Elem)],
    factor: &F::Elem,
    skip: u32,
) -> (Vec<(u32, F::Elem)>, Vec<u32>) {
    let mut out = Vec::with_capacity(old.len() + piv.len());
    let mut gained = Vec::new();
    let (mut i, mut j) = (0usize, 0usize);
    while i < old.len() || j < piv.len() {
        let oc = old.get(i).map(|e| e.0);
        let pc = piv.get(j).map(|e| e.0);
        match (oc, pc) {
            (Some(a), Some(b)) if a == b => {
                if a != skip {
                    let v = field.sub(&old[i].1, &field.mul(factor, &piv[j].1));
                    if !field.is_zero(&v) {
                        out.push((a, v));
                    }
                }
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                out.push(old[i].clone());
                i += 1;
                let _ = b;
            }
            (Some(_), Some(b)) => {
                debug_assert_ne!(b, skip, "pivot column is present in both rows");
                let v = field.neg(&field.mul(factor, &piv[j].1));
                if !field.is_zero(&v) {
                    out.push((b, v));
                    gained.push(b);
                }
                j += 1;
            }
            (Some(_), None) => {
                out.push(old[i].clone());
                i += 1;
            }
            (None, Some(b)) => {
                if b != skip {
                    let v = field.neg(&field.mul(factor, &piv[j].1));
                    if !field.is_zero(&v) {
                        out.push((b, v));
                        gained.push(b);
                    }
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    (out, gained)
}

/// Densifies the still-active rows and columns and defers to the field's
/// dense kernel.
fn densified_rank<F: Field>(
    field: &F,
    ncols: usize,
    rows: &[Vec<(u32, F::Elem)>],
    alive: &[bool],
    col_count: &[u32],
) -> usize {
    let mut col_map = vec![u32::MAX; ncols];
    let mut sub_cols = 0usize;
    for c in 0..ncols {
        if col_count[c] > 0 {
            col_map[c] = sub_cols as u32;
            sub_cols += 1;
        }
    }
    let sub_rows = alive.iter().filter(|&&a| a).count();
    let mut data = vec![field.zero(); sub_rows * sub_cols];
    let mut i = 0usize;
    for (r, row) in rows.iter().enumerate() {
        if !alive[r] {
            continue;
        }
        for (c, v) in row {
            let cc = col_map[*c as usize];
            debug_assert_ne!(cc, u32::MAX);
            data[i * sub_cols + cc as usize] = v.clone();
        }
        i += 1;
    }
    field.dense_rank(sub_rows, sub_cols, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::matrix::generic_dense_rank;
    use crate::rng::SplitMix64;

    fn random_sparse_case(seed: u64, nrows: usize, ncols: usize, fill_pct: u64) {
        let f = PrimeField::new(1009).unwrap();
        let mut rng = SplitMix64::new(seed);
        let mut dense = vec![0u32; nrows * ncols];
        let mut rows: Vec<Vec<(u32, u32)>> = vec![Vec::new(); nrows];
        for i in 0..nrows {
            for j in 0..ncols {
                if rng.next_below(100) < fill_pct {
                    let v = 1 + rng.next_below(1008) as u32;
                    dense[i * ncols + j] = v;
                    rows[i].push((j as u32, v));
                }
            }
        }
        let sparse = markowitz_rank(&f, nrows, ncols, rows);
        let reference = generic_dense_rank(&f, nrows, ncols, dense);
        assert_eq!(sparse, reference, "seed {seed}");
    }

    #[test]
    fn agrees_with_dense_on_low_fill() {
        for seed in 0..8 {
            random_sparse_case(seed, 40, 55, 5);
        }
    }

    #[test]
    fn agrees_with_dense_through_densify_fallback() {
        // 30% initial fill forces the densified path on the first pivots.
        for seed in 100..104 {
            random_sparse_case(seed, 50, 50, 30);
        }
    }

    #[test]
    fn handles_structured_and_degenerate_inputs() {
        let f = PrimeField::new(101).unwrap();
        // Empty matrix.
        assert_eq!(markowitz_rank(&f, 0, 0, vec![]), 0);
        // All-zero rows.
        assert_eq!(markowitz_rank(&f, 3, 4, vec![vec![], vec![], vec![]]), 0);
        // Duplicate rows collapse to rank 1.
        let row = vec![(0u32, 5u32), (3, 7)];
        assert_eq!(
            markowitz_rank(&f, 3, 4, vec![row.clone(), row.clone(), row]),
            1
        );
        // Permutation matrix has full rank.
        let perm: Vec<Vec<(u32, u32)>> =
            (0..6).map(|i| vec![((5 - i) as u32, 1u32)]).collect();
        assert_eq!(markowitz_rank(&f, 6, 6, perm), 6);
    }
}
