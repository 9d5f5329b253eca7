//! Exact matrices and rank/echelon kernels.
//!
//! A [`Matrix`] stores its entries either dense row-major or as sorted
//! sparse rows, and rank computation dispatches through the owning field so
//! each representation gets its fast path:
//!
//! * GF(p): Gaussian elimination on a `u64` working buffer with lazy
//!   reduction — rows accumulate `row += f * pivot` steps unreduced and are
//!   swept back below the modulus only when the accumulated bound approaches
//!   `u64::MAX`, so the inner loop is a bare multiply-add.
//! * GF(2): rows packed 64 columns to a machine word, elimination by XOR.
//! * GF(2^e): log/antilog table arithmetic; for `e <= 8` each elimination
//!   row builds a 2^e-entry multiplication table so the inner loop is a
//!   table lookup and XOR.
//! * Q: rank is computed modulo three independent random 30-bit primes that
//!   avoid every denominator (drawn from a fixed internal seed so results
//!   are deterministic); if the three ranks disagree — or too few usable
//!   primes are found — the answer is recomputed by exact fraction-free
//!   (Bareiss) elimination over the integers.  The modular ranks are each a
//!   lower bound that is tight with overwhelming probability, and the
//!   Bareiss fallback is exact, so the result is always correct or the
//!   disagreement is resolved exactly.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::is_prime_u64;
use crate::error::LinAlgError;
use crate::field::{BinaryField, Field, PrimeField, Rationals};
use crate::rng::SplitMix64;
use crate::subspace::Subspace;

/// Fixed seed for the internal prime sampler of the rational rank kernel.
/// Documented so that rational ranks are reproducible run to run.
const MULTIMODULAR_SEED: u64 = 0x9D3A_11C0_5EED_0001;

/// Reduced row-echelon form: the nonzero rows (each of full ambient width,
/// pivot entries 1, pivot columns cleared elsewhere) and the pivot columns
/// in strictly increasing order.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub rows: Vec<Vec<F::Elem>>,
    pub pivots: Vec<usize>,
}

/// Entry storage for [`Matrix`].
#[derive(Clone, Debug)]
pub enum Storage<E> {
    /// Row-major dense entries, length `nrows * ncols`.
    Dense(Vec<E>),
    /// One sorted `(column, value)` list per row; values are nonzero.
    Sparse(Vec<Vec<(u32, E)>>),
}

/// An exact matrix over the field `F`.
#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    field: F,
    nrows: usize,
    ncols: usize,
    storage: Storage<F::Elem>,
}

impl<F: Field> Matrix<F> {
    /// Dense matrix from row-major entries.
    pub fn from_dense(field: F, nrows: usize, ncols: usize, entries: Vec<F::Elem>) -> Self {
        assert_eq!(entries.len(), nrows * ncols, "entry count mismatch");
        Matrix {
            field,
            nrows,
            ncols,
            storage: Storage::Dense(entries),
        }
    }

    /// Dense matrix from explicit rows.
    pub fn from_rows(field: F, ncols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "row width mismatch");
            entries.extend(row);
        }
        Matrix::from_dense(field, nrows, ncols, entries)
    }

    /// Sparse matrix from per-row `(column, value)` lists.  Zero values are
    /// dropped; each list must be sorted by column with no duplicates.
    pub fn from_sparse(
        field: F,
        nrows: usize,
        ncols: usize,
        rows: Vec<Vec<(u32, F::Elem)>>,
    ) -> Self {
        assert_eq!(rows.len(), nrows, "row count mismatch");
        assert!(ncols <= u32::MAX as usize, "column index must fit in u32");
        let rows: Vec<Vec<(u32, F::Elem)>> = rows
            .into_iter()
            .map(|row| {
                let filtered: Vec<(u32, F::Elem)> = row
                    .into_iter()
                    .filter(|(c, v)| {
                        assert!((*c as usize) < ncols, "column index out of range");
                        !field.is_zero(v)
                    })
                    .collect();
                debug_assert!(
                    filtered.windows(2).all(|w| w[0].0 < w[1].0),
                    "sparse rows must be sorted with unique columns"
                );
                filtered
            })
            .collect();
        Matrix {
            field,
            nrows,
            ncols,
            storage: Storage::Sparse(rows),
        }
    }

    /// All-zero dense matrix.
    pub fn zeros(field: F, nrows: usize, ncols: usize) -> Self {
        let z = field.zero();
        Matrix::from_dense(field, nrows, ncols, vec![z; nrows * ncols])
    }

    /// Identity matrix.
    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        if let Storage::Dense(data) = &mut m.storage {
            for i in 0..n {
                data[i * n + i] = m.field.one();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Sparse(_))
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        match &self.storage {
            Storage::Dense(d) => d.iter().filter(|v| !self.field.is_zero(v)).count(),
            Storage::Sparse(rows) => rows.iter().map(Vec::len).sum(),
        }
    }

    /// Entry at `(i, j)` (cloned).
    pub fn get(&self, i: usize, j: usize) -> F::Elem {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        match &self.storage {
            Storage::Dense(d) => d[i * self.ncols + j].clone(),
            Storage::Sparse(rows) => match rows[i].binary_search_by_key(&(j as u32), |e| e.0) {
                Ok(k) => rows[i][k].1.clone(),
                Err(_) => self.field.zero(),
            },
        }
    }

    /// Row-major dense copy of the entries.
    pub fn to_dense_entries(&self) -> Vec<F::Elem> {
        match &self.storage {
            Storage::Dense(d) => d.clone(),
            Storage::Sparse(rows) => {
                let mut out = vec![self.field.zero(); self.nrows * self.ncols];
                for (i, row) in rows.iter().enumerate() {
                    for (c, v) in row {
                        out[i * self.ncols + *c as usize] = v.clone();
                    }
                }
                out
            }
        }
    }

    /// Transposed matrix in the same storage kind.
    pub fn transpose(&self) -> Matrix<F> {
        match &self.storage {
            Storage::Dense(d) => {
                let mut out = Vec::with_capacity(self.nrows * self.ncols);
                for j in 0..self.ncols {
                    for i in 0..self.nrows {
                        out.push(d[i * self.ncols + j].clone());
                    }
                }
                Matrix::from_dense(self.field.clone(), self.ncols, self.nrows, out)
            }
            Storage::Sparse(rows) => {
                let mut out: Vec<Vec<(u32, F::Elem)>> = vec![Vec::new(); self.ncols];
                for (i, row) in rows.iter().enumerate() {
                    for (c, v) in row {
                        out[*c as usize].push((i as u32, v.clone()));
                    }
                }
                Matrix::from_sparse(self.field.clone(), self.ncols, self.nrows, out)
            }
        }
    }

    /// Rank, consuming the matrix (no copy of the entries is made).
    pub fn into_rank(self) -> usize {
        let Matrix {
            field,
            nrows,
            ncols,
            storage,
        } = self;
        if nrows == 0 || ncols == 0 {
            return 0;
        }
        match storage {
            Storage::Dense(data) => field.dense_rank(nrows, ncols, data),
            Storage::Sparse(rows) => field.sparse_rank(nrows, ncols, rows),
        }
    }

    /// Rank (clones the entries; prefer [`Matrix::into_rank`] for large
    /// matrices).
    pub fn rank(&self) -> usize {
        self.clone().into_rank()
    }

    /// Reduced row-echelon form (densifies sparse storage first).
    pub fn rref(&self) -> Rref<F> {
        self.field
            .dense_rref(self.nrows, self.ncols, self.to_dense_entries())
    }

    /// Right null space as a canonical subspace of `F^ncols`.
    pub fn kernel(&self) -> Subspace<F> {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.ncols - rref.pivots.len());
        for f in 0..self.ncols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.ncols];
            v[f] = self.field.one();
            for (i, &p) in rref.pivots.iter().enumerate() {
                let coeff = &rref.rows[i][f];
                if !self.field.is_zero(coeff) {
                    v[p] = self.field.neg(coeff);
                }
            }
            basis.push(v);
        }
        Subspace::from_rows(self.field.clone(), self.ncols, basis)
    }

    /// Exact matrix product (dense result).
    pub fn mul(&self, rhs: &Matrix<F>) -> Result<Matrix<F>, LinAlgError> {
        if self.ncols != rhs.nrows {
            return Err(LinAlgError::ShapeMismatch(
                self.nrows, self.ncols, rhs.nrows, rhs.ncols,
            ));
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.nrows * rhs.ncols];
        let mut accumulate = |i: usize, k: usize, aik: &F::Elem| {
            let dst = &mut out[i * rhs.ncols..(i + 1) * rhs.ncols];
            match &rhs.storage {
                Storage::Dense(d) => {
                    let src = &d[k * rhs.ncols..(k + 1) * rhs.ncols];
                    for (o, s) in dst.iter_mut().zip(src) {
                        if !f.is_zero(s) {
                            *o = f.add(o, &f.mul(aik, s));
                        }
                    }
                }
                Storage::Sparse(rows) => {
                    for (c, v) in &rows[k] {
                        let o = &mut dst[*c as usize];
                        *o = f.add(o, &f.mul(aik, v));
                    }
                }
            }
        };
        match &self.storage {
            Storage::Dense(d) => {
                for i in 0..self.nrows {
                    for k in 0..self.ncols {
                        let aik = &d[i * self.ncols + k];
                        if !f.is_zero(aik) {
                            accumulate(i, k, aik);
                        }
                    }
                }
            }
            Storage::Sparse(rows) => {
                for (i, row) in rows.iter().enumerate() {
                    for (k, aik) in row {
                        accumulate(i, *k as usize, aik);
                    }
                }
            }
        }
        Ok(Matrix::from_dense(
            self.field.clone(),
            self.nrows,
            rhs.ncols,
            out,
        ))
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        match &self.storage {
            Storage::Dense(d) => d.iter().all(|v| self.field.is_zero(v)),
            Storage::Sparse(rows) => rows.iter().all(Vec::is_empty),
        }
    }
}

// ---------------------------------------------------------------------------
// Generic dense kernels (any field)
// ---------------------------------------------------------------------------

/// Row-echelon rank by plain Gaussian elimination with field operations.
pub fn generic_dense_rank<F: Field>(
    field: &F,
    nrows: usize,
    ncols: usize,
    mut data: Vec<F::Elem>,
) -> usize {
    let mut rank = 0usize;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pr) = (rank..nrows).find(|&r| !field.is_zero(&data[r * ncols + c])) else {
            continue;
        };
        if pr != rank {
            for j in c..ncols {
                data.swap(rank * ncols + j, pr * ncols + j);
            }
        }
        let pivinv = field
            .inv(&data[rank * ncols + c])
            .expect("pivot is nonzero");
        for r in rank + 1..nrows {
            let v = data[r * ncols + c].clone();
            if field.is_zero(&v) {
                continue;
            }
            let factor = field.mul(&v, &pivinv);
            for j in c..ncols {
                let t = field.mul(&factor, &data[rank * ncols + j]);
                data[r * ncols + j] = field.sub(&data[r * ncols + j], &t);
            }
        }
        rank += 1;
    }
    rank
}

/// Full reduced row-echelon form by Gauss-Jordan elimination.
pub fn generic_dense_rref<F: Field>(
    field: &F,
    nrows: usize,
    ncols: usize,
    mut data: Vec<F::Elem>,
) -> Rref<F> {
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pr) = (rank..nrows).find(|&r| !field.is_zero(&data[r * ncols + c])) else {
            continue;
        };
        if pr != rank {
            for j in c..ncols {
                data.swap(rank * ncols + j, pr * ncols + j);
            }
        }
        let pivinv = field
            .inv(&data[rank * ncols + c])
            .expect("pivot is nonzero");
        for j in c..ncols {
            data[rank * ncols + j] = field.mul(&data[rank * ncols + j], &pivinv);
        }
        for r in 0..nrows {
            if r == rank {
                continue;
            }
            let v = data[r * ncols + c].clone();
            if field.is_zero(&v) {
                continue;
            }
            for j in c..ncols {
                let t = field.mul(&v, &data[rank * ncols + j]);
                data[r * ncols + j] = field.sub(&data[r * ncols + j], &t);
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let rows = (0..rank)
        .map(|r| data[r * ncols..(r + 1) * ncols].to_vec())
        .collect();
    Rref { rows, pivots }
}

// ---------------------------------------------------------------------------
// GF(p) dense kernel with lazy reduction
// ---------------------------------------------------------------------------

/// Multiply-add over a `u64` buffer: `row[j] += f * piv[j]`.
///
/// Overflow safety is the caller's responsibility (dirty counters cap the
/// number of accumulations between sweeps).
#[inline]
fn madd_row(row: &mut [u64], piv: &[u32], f: u64) {
    debug_assert_eq!(row.len(), piv.len());
    for (x, &m) in row.iter_mut().zip(piv.iter()) {
        *x += f * m as u64;
    }
}

/// Rank over GF(p) with delayed modular reduction.
pub(crate) fn prime_dense_rank(
    field: &PrimeField,
    nrows: usize,
    ncols: usize,
    data: Vec<u32>,
) -> usize {
    let p = field.modulus() as u64;
    let mut a: Vec<u64> = data.into_iter().map(u64::from).collect();
    // A row entry after k unreduced accumulations is at most
    // (p-1) + k * (p-1)^2, so k_max sweeps arrive before u64 overflow.
    let pm1sq = (p - 1) * (p - 1);
    let k_max = if pm1sq == 0 {
        u64::MAX
    } else {
        (u64::MAX - (p - 1)) / pm1sq
    };
    let mut piv_row: Vec<u32> = vec![0; ncols];
    let mut dirty: Vec<u64> = vec![0; nrows];
    let mut rank = 0usize;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        // Pivot search, reducing the scanned column entries in place.
        let mut pivot = None;
        for r in rank..nrows {
            let v = field.reduce_u64(a[r * ncols + c]);
            a[r * ncols + c] = v as u64;
            if v != 0 {
                pivot = Some(r);
                break;
            }
        }
        let Some(pr) = pivot else { continue };
        if pr != rank {
            for j in c..ncols {
                a.swap(rank * ncols + j, pr * ncols + j);
            }
            dirty.swap(rank, pr);
        }
        // Normalize the pivot row to leading 1 and snapshot it as u32.
        let prow = &mut a[rank * ncols..(rank + 1) * ncols];
        for x in prow[c..].iter_mut() {
            *x = field.reduce_u64(*x) as u64;
        }
        let pivinv = field.inv(&(prow[c] as u32)).expect("pivot nonzero") as u64;
        for (j, x) in prow.iter_mut().enumerate().skip(c) {
            let v = field.reduce_u64(*x * pivinv) as u64;
            *x = v;
            piv_row[j] = v as u32;
        }
        dirty[rank] = 0;
        // Eliminate below.
        for r in rank + 1..nrows {
            let idx = r * ncols + c;
            let v = field.reduce_u64(a[idx]);
            a[idx] = v as u64;
            if v == 0 {
                continue;
            }
            if dirty[r] >= k_max {
                for x in a[r * ncols + c..(r + 1) * ncols].iter_mut() {
                    *x = field.reduce_u64(*x) as u64;
                }
                dirty[r] = 0;
            }
            let f = p - v as u64;
            let (row, piv) = (
                &mut a[r * ncols + c..(r + 1) * ncols],
                &piv_row[c..ncols],
            );
            madd_row(row, piv, f);
            dirty[r] += 1;
        }
        rank += 1;
    }
    rank
}

// ---------------------------------------------------------------------------
// GF(2) dense kernel, bit-packed
// ---------------------------------------------------------------------------

/// Rank over GF(2): rows are packed 64 columns per word and eliminated with
/// word-wide XOR.
pub(crate) fn gf2_dense_rank(nrows: usize, ncols: usize, data: &[u8]) -> usize {
    let words = ncols.div_ceil(64);
    let mut packed = vec![0u64; nrows * words];
    for i in 0..nrows {
        for j in 0..ncols {
            if data[i * ncols + j] & 1 == 1 {
                packed[i * words + (j >> 6)] |= 1u64 << (j & 63);
            }
        }
    }
    let mut rank = 0usize;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let (w, bit) = (c >> 6, 1u64 << (c & 63));
        let Some(pr) = (rank..nrows).find(|&r| packed[r * words + w] & bit != 0) else {
            continue;
        };
        if pr != rank {
            for k in w..words {
                packed.swap(rank * words + k, pr * words + k);
            }
        }
        for r in rank + 1..nrows {
            if packed[r * words + w] & bit != 0 {
                let (head, tail) = packed.split_at_mut(r * words);
                let prow = &head[rank * words + w..rank * words + words];
                let row = &mut tail[w..words];
                for (x, y) in row.iter_mut().zip(prow) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

// ---------------------------------------------------------------------------
// GF(2^e) dense kernel, table-driven
// ---------------------------------------------------------------------------

/// Rank over GF(2^e) using log/antilog tables.  For `e <= 8` each
/// elimination row precomputes the 2^e-entry multiplication table of its
/// factor, turning the inner loop into lookup + XOR.
pub(crate) fn binary_ext_dense_rank(
    field: &BinaryField,
    nrows: usize,
    ncols: usize,
    mut a: Vec<u16>,
) -> usize {
    let (exp, log, order) = field.tables();
    let e = field.degree();
    let mut piv_row: Vec<u16> = vec![0; ncols];
    let mut rank = 0usize;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pr) = (rank..nrows).find(|&r| a[r * ncols + c] != 0) else {
            continue;
        };
        if pr != rank {
            for j in c..ncols {
                a.swap(rank * ncols + j, pr * ncols + j);
            }
        }
        // Normalize pivot row to leading 1 (multiply by the inverse).
        let linv = (order - log[a[rank * ncols + c] as usize] as u32) as usize;
        for j in c..ncols {
            let v = a[rank * ncols + j];
            let nv = if v == 0 {
                0
            } else {
                exp[linv + log[v as usize] as usize]
            };
            a[rank * ncols + j] = nv;
            piv_row[j] = nv;
        }
        if e <= 8 {
            // Per-factor multiplication table: worthwhile once the row is
            // longer than the 2^e table build.
            let mut tab = vec![0u16; 1usize << e];
            for r in rank + 1..nrows {
                let v = a[r * ncols + c];
                if v == 0 {
                    continue;
                }
                let lf = log[v as usize] as usize;
                for (u, t) in tab.iter_mut().enumerate().skip(1) {
                    *t = exp[lf + log[u] as usize];
                }
                let row = &mut a[r * ncols + c..(r + 1) * ncols];
                for (x, &m) in row.iter_mut().zip(&piv_row[c..ncols]) {
                    *x ^= tab[m as usize];
                }
            }
        } else {
            for r in rank + 1..nrows {
                let v = a[r * ncols + c];
                if v == 0 {
                    continue;
                }
                let lf = log[v as usize] as usize;
                let row = &mut a[r * ncols + c..(r + 1) * ncols];
                for (x, &m) in row.iter_mut().zip(&piv_row[c..ncols]) {
                    if m != 0 {
                        *x ^= exp[lf + log[m as usize] as usize];
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

// ---------------------------------------------------------------------------
// Rational rank: multimodular with fraction-free fallback
// ---------------------------------------------------------------------------

/// `n mod p` as a canonical residue.
fn bigint_mod_u64(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = r.to_i64().expect("residue fits in i64");
    r.rem_euclid(p as i64) as u64
}

fn rational_to_residue(q: &BigRational, fp: &PrimeField) -> u32 {
    let p = fp.modulus() as u64;
    let num = bigint_mod_u64(q.numer(), p) as u32;
    let den = bigint_mod_u64(q.denom(), p) as u32;
    let den_inv = fp.inv(&den).expect("prime was chosen to avoid denominators");
    fp.mul(&num, &den_inv)
}

/// Draws up to three distinct 30-bit primes dividing none of `denoms`.
fn sample_rank_primes(denoms: &HashSet<BigInt>) -> Vec<PrimeField> {
    let mut rng = SplitMix64::new(MULTIMODULAR_SEED);
    let mut primes: Vec<u64> = Vec::new();
    let mut draws = 0;
    while primes.len() < 3 && draws < 512 {
        draws += 1;
        let cand = (1u64 << 29) + rng.next_below(1u64 << 29);
        if !is_prime_u64(cand) || primes.contains(&cand) {
            continue;
        }
        let divides_some = denoms
            .iter()
            .any(|d| bigint_mod_u64(d, cand) == 0);
        if !divides_some {
            primes.push(cand);
        }
    }
    primes
        .into_iter()
        .map(|p| PrimeField::new(p as u32).expect("sampled prime is valid"))
        .collect()
}

fn collect_denominators<'a>(entries: impl Iterator<Item = &'a BigRational>) -> HashSet<BigInt> {
    let mut set = HashSet::new();
    for q in entries {
        let d = q.denom();
        if !d.is_one() {
            set.insert(d.abs());
        }
    }
    set
}

/// Rank of a dense rational matrix (multimodular; Bareiss on disagreement).
pub(crate) fn rational_dense_rank(nrows: usize, ncols: usize, data: &[BigRational]) -> usize {
    if nrows == 0 || ncols == 0 {
        return 0;
    }
    let denoms = collect_denominators(data.iter());
    let fields = sample_rank_primes(&denoms);
    if fields.len() == 3 {
        let ranks: Vec<usize> = fields
            .iter()
            .map(|fp| {
                let residues: Vec<u32> = data.iter().map(|q| rational_to_residue(q, fp)).collect();
                prime_dense_rank(fp, nrows, ncols, residues)
            })
            .collect();
        if ranks[0] == ranks[1] && ranks[1] == ranks[2] {
            return ranks[0];
        }
    }
    let rows: Vec<Vec<BigRational>> = (0..nrows)
        .map(|i| data[i * ncols..(i + 1) * ncols].to_vec())
        .collect();
    bareiss_rank(ncols, &rows)
}

/// Rank of a sparse rational matrix through the same multimodular path.
pub(crate) fn rational_sparse_rank(
    nrows: usize,
    ncols: usize,
    rows: &[Vec<(u32, BigRational)>],
) -> usize {
    if nrows == 0 || ncols == 0 {
        return 0;
    }
    let denoms = collect_denominators(rows.iter().flatten().map(|(_, v)| v));
    let fields = sample_rank_primes(&denoms);
    if fields.len() == 3 {
        let ranks: Vec<usize> = fields
            .iter()
            .map(|fp| {
                let residue_rows: Vec<Vec<(u32, u32)>> = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|(c, v)| (*c, rational_to_residue(v, fp)))
                            .filter(|(_, v)| *v != 0)
                            .collect()
                    })
                    .collect();
                fp.sparse_rank(nrows, ncols, residue_rows)
            })
            .collect();
        if ranks[0] == ranks[1] && ranks[1] == ranks[2] {
            return ranks[0];
        }
    }
    let q = Rationals::new();
    let dense: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|row| {
            let mut out = vec![q.zero(); ncols];
            for (c, v) in row {
                out[*c as usize] = v.clone();
            }
            out
        })
        .collect();
    bareiss_rank(ncols, &dense)
}

/// Exact rank by Bareiss fraction-free elimination over the integers.
///
/// Rows are first scaled by the LCM of their denominators; every division in
/// the update `m[r][j] = (piv * m[r][j] - m[r][c] * m[rank][j]) / prev` is
/// exact by the Sylvester identity, so no fractions ever appear.
pub(crate) fn bareiss_rank(ncols: usize, rows: &[Vec<BigRational>]) -> usize {
    let nrows = rows.len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for v in row {
                lcm = lcm.lcm(v.denom());
            }
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pr) = (rank..nrows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            for j in (c + 1)..ncols {
                let num = &prow[c] * &row[j] - &row[c] * &prow[j];
                row[j] = num / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}
