//! Graded quotients `R = S / I` presented by exact multiplication maps.
//!
//! A [`GradedQuotient`] stores, for each degree `q` up to a cutoff, the
//! ideal piece `I_q` as a subspace of the monomial basis of `S_q`, the coset
//! basis of `R_q` (the monomials at non-pivot columns of `I_q`, a canonical
//! complement), and the multiplication maps `R_q -> R_{q+1}` by each
//! variable.  Downstream syzygy computations consume only the piece
//! dimensions and these maps, so everything geometric about the ring is
//! frozen here, exactly, once.

use exact_core::{Field, Subspace};

use crate::error::RingError;
use crate::monomial::{checked_monomial_count, monomial_unrank, monomials};
use crate::poly::HomogeneousPoly;

/// Hard cap on `rows * cols` for any dense system materialized here,
/// protecting against hostile ideal descriptions.
const MAX_DENSE_CELLS: usize = 100_000_000;

/// Geometric flavor of a quotient, consumed by downstream checks (it does
/// not influence the algebra computed here).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    /// Homogeneous coordinate ring of a canonically embedded curve.
    CanonicalCurve,
    /// Coordinate ring of a K3-type surface section.
    K3,
}

/// Multiplication `R_q x V -> R_{q+1}` for the variable basis of `V`,
/// stored column-sparse: column `var * r_in + j` is the image of
/// `x_var * b_j` in the degree-`(q+1)` coset basis.
#[derive(Clone, Debug)]
pub struct MultMap<F: Field> {
    r_in: usize,
    r_out: usize,
    nvars: usize,
    cols: Vec<Vec<(u32, F::Elem)>>,
}

impl<F: Field> MultMap<F> {
    pub fn r_in(&self) -> usize {
        self.r_in
    }

    pub fn r_out(&self) -> usize {
        self.r_out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Sparse image of `x_var * b_j`.
    pub fn col(&self, var: usize, j: usize) -> &[(u32, F::Elem)] {
        &self.cols[var * self.r_in + j]
    }

    /// Applies multiplication by `x_var` to a dense coordinate vector.
    pub fn apply(&self, field: &F, var: usize, coords: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(coords.len(), self.r_in, "coordinate width mismatch");
        let mut out = vec![field.zero(); self.r_out];
        for (j, c) in coords.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            for (row, v) in self.col(var, j) {
                let t = field.mul(c, v);
                out[*row as usize] = field.add(&out[*row as usize], &t);
            }
        }
        out
    }
}

/// The graded piece `I_q` of the ideal generated by `gens`, as a subspace
/// of the degree-`q` monomial coefficient space.
///
/// The spanning set is the brute-force one — every generator times every
/// monomial of complementary degree — reduced to a canonical basis by
/// elimination.  No term-order machinery is involved, which keeps the
/// computation exact and obviously correct at the cost of larger
/// intermediate systems; the cutoff degrees used in this workspace keep
/// those systems comfortably small.
pub fn ideal_piece<F: Field>(
    field: &F,
    nvars: usize,
    gens: &[HomogeneousPoly<F>],
    q: usize,
) -> Result<Subspace<F>, RingError> {
    let sq = checked_monomial_count(nvars, q).ok_or(RingError::DimensionOverflow)?;
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for g in gens {
        if g.is_zero() || g.degree() > q {
            continue;
        }
        let shift = q - g.degree();
        let count = checked_monomial_count(nvars, shift).ok_or(RingError::DimensionOverflow)?;
        let total = rows
            .len()
            .checked_add(count)
            .and_then(|r| r.checked_mul(sq))
            .ok_or(RingError::DimensionOverflow)?;
        if total > MAX_DENSE_CELLS {
            return Err(RingError::DimensionOverflow);
        }
        for m in monomials(nvars, shift) {
            let mut row = vec![field.zero(); sq];
            for (expo, coeff) in g.terms() {
                let shifted: Vec<u8> = expo.iter().zip(&m).map(|(a, b)| a + b).collect();
                row[crate::monomial::monomial_rank(&shifted)] = coeff.clone();
            }
            rows.push(row);
        }
    }
    Ok(Subspace::from_rows(field.clone(), sq, rows))
}

/// A graded quotient ring presented degree by degree.
#[derive(Clone, Debug)]
pub struct GradedQuotient<F: Field> {
    field: F,
    nvars: usize,
    qmax: usize,
    label: String,
    kind: QuotientKind,
    genus: usize,
    /// `dim R_q` for `q = 0..=qmax`.
    piece_dims: Vec<usize>,
    /// `I_q` for `q = 0..=qmax`.
    ideal: Vec<Subspace<F>>,
    /// Monomial ranks forming the coset basis of `R_q`, per degree.
    coset: Vec<Vec<usize>>,
    /// Multiplication maps `R_q -> R_{q+1}` for `q = 0..qmax`.
    mult: Vec<MultMap<F>>,
}

/// Builds the quotient `S / (gens)` through degree `qmax`.
///
/// Fails with [`RingError::DegreeOneNotFree`] when the ideal contains a
/// nonzero linear form (the presentations used downstream all require the
/// degree-one piece to be the full space of variables).
pub fn quotient_sequence<F: Field>(
    field: &F,
    nvars: usize,
    gens: &[HomogeneousPoly<F>],
    qmax: usize,
    label: &str,
) -> Result<GradedQuotient<F>, RingError> {
    if nvars == 0 || nvars > crate::poly::MAX_NVARS {
        return Err(RingError::TooManyVariables(nvars));
    }
    assert!(qmax <= 8, "cutoff degrees beyond 8 are never needed");
    for g in gens {
        if g.nvars() != nvars {
            return Err(RingError::NvarsMismatch(g.nvars(), nvars));
        }
    }
    let mut ideal = Vec::with_capacity(qmax + 1);
    let mut piece_dims = Vec::with_capacity(qmax + 1);
    let mut coset = Vec::with_capacity(qmax + 1);
    for q in 0..=qmax {
        let iq = ideal_piece(field, nvars, gens, q)?;
        if q == 1 && iq.dim() > 0 {
            return Err(RingError::DegreeOneNotFree);
        }
        piece_dims.push(iq.ambient_dim() - iq.dim());
        coset.push(iq.non_pivots());
        ideal.push(iq);
    }
    let mut mult = Vec::with_capacity(qmax);
    for q in 0..qmax {
        let r_in = piece_dims[q];
        let r_out = piece_dims[q + 1];
        let s_next = ideal[q + 1].ambient_dim();
        let next_coset = &coset[q + 1];
        let mut cols = Vec::with_capacity(nvars * r_in);
        for var in 0..nvars {
            for &mrank in &coset[q] {
                let mut expo = monomial_unrank(nvars, q, mrank);
                expo[var] += 1;
                let mut unit = vec![field.zero(); s_next];
                unit[crate::monomial::monomial_rank(&expo)] = field.one();
                let reduced = ideal[q + 1].reduce(&unit);
                let col: Vec<(u32, F::Elem)> = next_coset
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| !field.is_zero(&reduced[c]))
                    .map(|(row, &c)| (row as u32, reduced[c].clone()))
                    .collect();
                cols.push(col);
            }
        }
        mult.push(MultMap {
            r_in,
            r_out,
            nvars,
            cols,
        });
    }
    Ok(GradedQuotient {
        field: field.clone(),
        nvars,
        qmax,
        label: label.to_string(),
        // Raw ideals default to canonical-curve semantics in P^(nvars-1);
        // construction pipelines overwrite this via `with_meta`.
        kind: QuotientKind::CanonicalCurve,
        genus: nvars,
        piece_dims,
        ideal,
        coset,
        mult,
    })
}

impl<F: Field> GradedQuotient<F> {
    /// Attaches geometric metadata (consumed by downstream checks).
    pub fn with_meta(mut self, kind: QuotientKind, genus: usize) -> Self {
        self.kind = kind;
        self.genus = genus;
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn qmax(&self) -> usize {
        self.qmax
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> QuotientKind {
        self.kind
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `dim R_q`; panics when `q > qmax`.
    pub fn dim_r(&self, q: usize) -> usize {
        self.piece_dims[q]
    }

    pub fn piece_dims(&self) -> &[usize] {
        &self.piece_dims
    }

    /// The ideal piece `I_q` as a canonical subspace of `S_q`.
    pub fn ideal_piece_at(&self, q: usize) -> &Subspace<F> {
        &self.ideal[q]
    }

    /// Monomial ranks of the coset basis of `R_q`.
    pub fn coset_monomials(&self, q: usize) -> &[usize] {
        &self.coset[q]
    }

    /// Multiplication map `R_q -> R_{q+1}`.
    pub fn mult_map(&self, q: usize) -> &MultMap<F> {
        &self.mult[q]
    }

    /// Coordinates of a polynomial's class in the coset basis of its degree.
    pub fn class_of(&self, p: &HomogeneousPoly<F>) -> Result<Vec<F::Elem>, RingError> {
        if p.nvars() != self.nvars {
            return Err(RingError::NvarsMismatch(p.nvars(), self.nvars));
        }
        let q = p.degree();
        assert!(q <= self.qmax, "degree beyond the computed range");
        let reduced = self.ideal[q].reduce(&p.to_dense());
        Ok(self.coset[q]
            .iter()
            .map(|&c| reduced[c].clone())
            .collect())
    }

    /// Verifies `x_i (x_j r) = x_j (x_i r)` for every pair of variables and
    /// every coset basis vector, in every degree where both composites are
    /// available.  True for any well-formed quotient; exposed so property
    /// suites can assert it on freshly built rings.
    pub fn multiplication_commutes(&self) -> bool {
        let f = &self.field;
        for q in 0..self.qmax.saturating_sub(1) {
            let m0 = &self.mult[q];
            let m1 = &self.mult[q + 1];
            for i in 0..self.nvars {
                for j in (i + 1)..self.nvars {
                    for b in 0..self.piece_dims[q] {
                        let mut unit = vec![f.zero(); self.piece_dims[q]];
                        unit[b] = f.one();
                        let via_i = m1.apply(f, j, &m0.apply(f, i, &unit));
                        let via_j = m1.apply(f, i, &m0.apply(f, j, &unit));
                        if via_i != via_j {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}
