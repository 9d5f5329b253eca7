//! Linear subspaces of `F^n` in canonical reduced row-echelon form.
//!
//! Because the stored basis is the RREF of any generating set, two
//! subspaces are equal as sets if and only if their stored bases are equal
//! componentwise, which makes equality checks and regression fixtures exact.

use crate::error::LinAlgError;
use crate::field::Field;
use crate::matrix::Matrix;

/// A subspace of `F^ambient`, stored as an RREF basis.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    /// Subspace spanned by `rows` (each of length `ambient`).
    pub fn from_rows(field: F, ambient: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        for row in &rows {
            assert_eq!(row.len(), ambient, "generator width mismatch");
        }
        let nrows = rows.len();
        let flat: Vec<F::Elem> = rows.into_iter().flatten().collect();
        let rref = field.dense_rref(nrows, ambient, flat);
        Subspace {
            field,
            ambient,
            basis: rref.rows,
            pivots: rref.pivots,
        }
    }

    /// The zero subspace.
    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The full space `F^ambient`.
    pub fn full(field: F, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut row = vec![field.zero(); ambient];
                row[i] = field.one();
                row
            })
            .collect();
        Subspace {
            field,
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// The canonical RREF basis rows.
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    /// Pivot columns, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots, in increasing order.  These index the
    /// canonical complement coordinates used for quotient spaces.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Canonical representative of `v` modulo this subspace: subtracts the
    /// unique basis combination that clears every pivot coordinate.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ambient, "vector width mismatch");
        let f = &self.field;
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            // Basis row i is zero left of its pivot, so start at p.
            for j in p..self.ambient {
                let t = f.mul(&c, &self.basis[i][j]);
                w[j] = f.sub(&w[j], &t);
            }
        }
        w
    }

    /// Coordinates of `v + subspace` in the canonical complement basis: the
    /// non-pivot entries of the reduced representative.
    pub fn coset_coordinates(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let w = self.reduce(v);
        self.non_pivots().into_iter().map(|c| w[c].clone()).collect()
    }

    /// Membership test.
    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// True when every basis vector of `other` lies in `self`.
    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>, LinAlgError> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::AmbientMismatch(self.ambient, other.ambient));
        }
        let rows: Vec<Vec<F::Elem>> = self
            .basis
            .iter()
            .chain(other.basis.iter())
            .cloned()
            .collect();
        Ok(Subspace::from_rows(self.field.clone(), self.ambient, rows))
    }

    /// Intersection of two subspaces of the same ambient space.
    ///
    /// Computed from the kernel of the `ambient x (dim A + dim B)` matrix
    /// whose columns are the two bases: a kernel vector `(u, v)` encodes
    /// `sum u_j a_j = -sum v_j b_j`, an element of the intersection, and
    /// this correspondence is a bijection onto it.
    pub fn intersect(&self, other: &Subspace<F>) -> Result<Subspace<F>, LinAlgError> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::AmbientMismatch(self.ambient, other.ambient));
        }
        let f = &self.field;
        let (ka, kb) = (self.dim(), other.dim());
        if ka == 0 || kb == 0 {
            return Ok(Subspace::zero(f.clone(), self.ambient));
        }
        let mut data = Vec::with_capacity(self.ambient * (ka + kb));
        for i in 0..self.ambient {
            for a in &self.basis {
                data.push(a[i].clone());
            }
            for b in &other.basis {
                data.push(b[i].clone());
            }
        }
        let stacked = Matrix::from_dense(f.clone(), self.ambient, ka + kb, data);
        let ker = stacked.kernel();
        let rows: Vec<Vec<F::Elem>> = ker
            .basis()
            .iter()
            .map(|uv| {
                let mut w = vec![f.zero(); self.ambient];
                for (j, a) in self.basis.iter().enumerate() {
                    if f.is_zero(&uv[j]) {
                        continue;
                    }
                    for (wi, ai) in w.iter_mut().zip(a) {
                        *wi = f.add(wi, &f.mul(&uv[j], ai));
                    }
                }
                w
            })
            .collect();
        let expected_dim = rows.len();
        let out = Subspace::from_rows(f.clone(), self.ambient, rows);
        debug_assert_eq!(out.dim(), expected_dim, "kernel maps bijectively");
        Ok(out)
    }
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.pivots == other.pivots && self.basis == other.basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::rng::SplitMix64;

    #[test]
    fn rref_basis_is_canonical() {
        let f = PrimeField::new(101).unwrap();
        // Same plane given by two different generating sets.
        let s1 = Subspace::from_rows(
            f.clone(),
            3,
            vec![vec![1, 2, 3], vec![4, 5, 6]],
        );
        let s2 = Subspace::from_rows(
            f.clone(),
            3,
            vec![vec![5, 7, 9], vec![99, 96, 93]],
        );
        assert_eq!(s1.dim(), 2);
        assert_eq!(s1, s2);
    }

    #[test]
    fn reduce_and_membership() {
        let f = PrimeField::new(7).unwrap();
        let s = Subspace::from_rows(f.clone(), 4, vec![vec![1, 0, 2, 0], vec![0, 1, 3, 0]]);
        assert!(s.contains(&[1, 1, 5, 0]));
        assert!(!s.contains(&[0, 0, 0, 1]));
        let red = s.reduce(&[1, 1, 5, 6]);
        assert_eq!(red, vec![0, 0, 0, 6]);
        assert_eq!(s.non_pivots(), vec![2, 3]);
        assert_eq!(s.coset_coordinates(&[1, 1, 5, 6]), vec![0, 6]);
    }

    #[test]
    fn sum_and_intersection_dimension_formula() {
        let f = PrimeField::new(101).unwrap();
        let mut rng = SplitMix64::new(31);
        for _ in 0..25 {
            let ambient = 6;
            let da = 1 + rng.next_below(4) as usize;
            let db = 1 + rng.next_below(4) as usize;
            let mk = |rng: &mut SplitMix64, d: usize| {
                let rows: Vec<Vec<u32>> = (0..d)
                    .map(|_| (0..ambient).map(|_| f.sample(rng)).collect())
                    .collect();
                Subspace::from_rows(f.clone(), ambient, rows)
            };
            let a = mk(&mut rng, da);
            let b = mk(&mut rng, db);
            let s = a.sum(&b).unwrap();
            let i = a.intersect(&b).unwrap();
            assert_eq!(s.dim() + i.dim(), a.dim() + b.dim(), "modular law");
            assert!(a.contains_subspace(&i));
            assert!(b.contains_subspace(&i));
            assert!(s.contains_subspace(&a));
            assert!(s.contains_subspace(&b));
        }
    }

    #[test]
    fn intersection_over_rationals() {
        let q = Rationals::new();
        let e = |n: i64| q.from_int(n);
        // span{(1,0,0),(0,1,0)} intersect span{(0,1,0),(0,0,1)} = span{(0,1,0)}.
        let a = Subspace::from_rows(
            q.clone(),
            3,
            vec![vec![e(1), e(0), e(0)], vec![e(0), e(1), e(0)]],
        );
        let b = Subspace::from_rows(
            q.clone(),
            3,
            vec![vec![e(0), e(1), e(0)], vec![e(0), e(0), e(1)]],
        );
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[e(0), e(5), e(0)]));
        // Mismatched ambients error out.
        let c = Subspace::full(q.clone(), 4);
        assert!(a.sum(&c).is_err());
        assert!(a.intersect(&c).is_err());
    }

    #[test]
    fn zero_and_full_subspaces() {
        let f = PrimeField::new(13).unwrap();
        let z = Subspace::zero(f.clone(), 5);
        let full = Subspace::full(f.clone(), 5);
        assert_eq!(z.dim(), 0);
        assert_eq!(full.dim(), 5);
        assert!(full.contains_subspace(&z));
        let v = [1, 2, 3, 4, 5];
        assert_eq!(z.reduce(&v), v.to_vec());
        assert!(full.contains(&v));
        assert_eq!(full.intersect(&z).unwrap().dim(), 0);
    }
}
