//! Linear conditions imposed by point multiplicities, and ordinariness
//! tests, for forms in three variables.
//!
//! A form has multiplicity `>= m` at a point exactly when, after a linear
//! change of coordinates moving the point to `[0:0:1]`, every Taylor
//! coefficient of the chart `z = 1` with `(x, y)`-degree below `m`
//! vanishes.  Each such coefficient is a linear functional on the
//! coefficient space of the form, giving `m (m + 1) / 2` condition rows.
//!
//! For `m = 2` the rows used are instead the evaluation of the form and of
//! its three partial derivatives — four rows of rank exactly three.  This
//! sidesteps the Euler relation, which in characteristic dividing the
//! degree fails to make the evaluation row redundant; with all four rows
//! the imposed subspace is the multiplicity-two locus in every
//! characteristic.
//!
//! A multiplicity-`m` point is *ordinary* when the degree-`m` Taylor part —
//! a binary form in the chart variables — is nonzero and squarefree
//! (distinct tangent directions).  In characteristic 2 the node case
//! reduces to the classical "middle coefficient nonzero" test, which the
//! general squarefree test reproduces.

use exact_core::Field;
use graded_ring::{monomials, HomogeneousPoly};

use crate::points::PlanePoint;

/// Invertible 3x3 matrix whose third column is the point, as rows; the
/// substitution `x_i <- sum_j M[i][j] u_j` then sends `[0:0:1]` to the
/// point.
pub fn chart_matrix<F: Field>(field: &F, point: &PlanePoint<F>) -> Vec<Vec<F::Elem>> {
    let pivot = point.pivot(field);
    let others: Vec<usize> = (0..3).filter(|&i| i != pivot).collect();
    let mut m = vec![vec![field.zero(); 3]; 3];
    for (slot, &row) in others.iter().enumerate() {
        m[row][slot] = field.one();
    }
    for row in 0..3 {
        m[row][2] = point.coords()[row].clone();
    }
    m
}

/// Evaluation row: entry `j` is the value of the `j`-th degree-`deg`
/// monomial at the point.
pub fn evaluation_row<F: Field>(field: &F, deg: usize, point: &PlanePoint<F>) -> Vec<F::Elem> {
    monomials(3, deg)
        .into_iter()
        .map(|expo| monomial_value(field, &expo, point.coords()))
        .collect()
}

fn monomial_value<F: Field>(field: &F, expo: &[u8], coords: &[F::Elem; 3]) -> F::Elem {
    let mut v = field.one();
    for (i, &e) in expo.iter().enumerate() {
        for _ in 0..e {
            v = field.mul(&v, &coords[i]);
        }
    }
    v
}

/// The four multiplicity-two rows: evaluation of the form and of its three
/// partial derivatives at the point.  Rank is exactly three in every
/// characteristic.
pub fn node_condition_rows<F: Field>(
    field: &F,
    deg: usize,
    point: &PlanePoint<F>,
) -> Vec<Vec<F::Elem>> {
    let mut rows = vec![evaluation_row(field, deg, point)];
    for var in 0..3 {
        let row = monomials(3, deg)
            .into_iter()
            .map(|expo| {
                if expo[var] == 0 {
                    return field.zero();
                }
                let mut lower = expo.clone();
                lower[var] -= 1;
                let scale = field.from_int(expo[var] as i64);
                field.mul(&scale, &monomial_value(field, &lower, point.coords()))
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Chart Taylor rows: one row per pair `(a, b)` with `a + b < mu`, each the
/// functional extracting the coefficient of `x^a y^b z^(deg-a-b)` after the
/// chart change of coordinates.
fn chart_condition_rows<F: Field>(
    field: &F,
    deg: usize,
    point: &PlanePoint<F>,
    mu: usize,
) -> Vec<Vec<F::Elem>> {
    let m = chart_matrix(field, point);
    let targets: Vec<[u8; 3]> = taylor_positions(deg, mu);
    let mut rows = vec![vec![field.zero(); monomials(3, deg).len()]; targets.len()];
    for (j, expo) in monomials(3, deg).into_iter().enumerate() {
        let mono = HomogeneousPoly::monomial(field.clone(), 3, &expo, field.one());
        let moved = mono.linear_substitute(&m);
        for (r, t) in targets.iter().enumerate() {
            rows[r][j] = moved.coeff(t);
        }
    }
    rows
}

fn taylor_positions(deg: usize, mu: usize) -> Vec<[u8; 3]> {
    let mut out = Vec::new();
    for total in 0..mu {
        for a in (0..=total).rev() {
            let b = total - a;
            out.push([a as u8, b as u8, (deg - total) as u8]);
        }
    }
    out
}

/// Condition rows forcing multiplicity `>= mu` at the point on the space of
/// degree-`deg` forms.  `mu = 0` imposes nothing; `mu = 1` is evaluation;
/// `mu = 2` the four derivative rows; larger `mu` the chart Taylor rows.
pub fn multiplicity_condition_rows<F: Field>(
    field: &F,
    deg: usize,
    point: &PlanePoint<F>,
    mu: usize,
) -> Vec<Vec<F::Elem>> {
    assert!(mu <= deg, "multiplicity beyond the degree leaves only zero");
    match mu {
        0 => Vec::new(),
        1 => vec![evaluation_row(field, deg, point)],
        2 => node_condition_rows(field, deg, point),
        _ => chart_condition_rows(field, deg, point, mu),
    }
}

/// The degree-`m` Taylor part of `f` at the point, in chart coordinates:
/// entry `a` is the coefficient of `x^a y^(m-a)`.
pub fn taylor_form<F: Field>(
    field: &F,
    f: &HomogeneousPoly<F>,
    point: &PlanePoint<F>,
    m: usize,
) -> Vec<F::Elem> {
    let moved = f.linear_substitute(&chart_matrix(field, point));
    let deg = f.degree();
    (0..=m)
        .map(|a| moved.coeff(&[a as u8, (m - a) as u8, (deg - m) as u8]))
        .collect()
}

/// Whether `f` vanishes to order at least `m` at the point.
pub fn has_multiplicity_at_least<F: Field>(
    field: &F,
    f: &HomogeneousPoly<F>,
    point: &PlanePoint<F>,
    m: usize,
) -> bool {
    let moved = f.linear_substitute(&chart_matrix(field, point));
    let deg = f.degree();
    taylor_positions(deg, m)
        .iter()
        .all(|t| field.is_zero(&moved.coeff(t)))
}

/// Whether the point is an ordinary multiplicity-`m` point of `f`: the
/// degree-`m` Taylor binary form is nonzero (multiplicity exactly `m`) and
/// squarefree (`m` distinct tangent directions).  Vanishing to order `m`
/// itself is assumed checked separately.
pub fn is_ordinary_point<F: Field>(
    field: &F,
    f: &HomogeneousPoly<F>,
    point: &PlanePoint<F>,
    m: usize,
) -> bool {
    let tf = taylor_form(field, f, point, m);
    binary_form_is_squarefree(field, &tf)
}

/// Squarefreeness of a binary form given by coefficients of
/// `x^a y^(m-a)`, `a = 0..=m`.  The zero form is not squarefree.
pub fn binary_form_is_squarefree<F: Field>(field: &F, coeffs: &[F::Elem]) -> bool {
    let m = coeffs.len() - 1;
    let top = match (0..=m).rev().find(|&a| !field.is_zero(&coeffs[a])) {
        Some(t) => t,
        None => return false,
    };
    // y-multiplicity of the form is m - top; a square factor of y appears
    // exactly when that exceeds one.
    if m - top > 1 {
        return false;
    }
    univariate_squarefree(field, &coeffs[..=top])
}

/// Squarefreeness of a univariate polynomial with nonzero leading
/// coefficient, via gcd with the derivative.  A vanishing derivative in
/// positive degree means the polynomial is a p-th power composed with
/// Frobenius pieces, never squarefree over the fields used here.
fn univariate_squarefree<F: Field>(field: &F, coeffs: &[F::Elem]) -> bool {
    if coeffs.len() <= 2 {
        return true;
    }
    let deriv: Vec<F::Elem> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| field.mul(&field.from_int(i as i64), c))
        .collect();
    let deriv = trim(field, deriv);
    if deriv.is_empty() {
        return false;
    }
    let g = poly_gcd(field, coeffs.to_vec(), deriv);
    g.len() == 1
}

fn trim<F: Field>(field: &F, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
    while v.last().is_some_and(|c| field.is_zero(c)) {
        v.pop();
    }
    v
}

/// Euclidean gcd of univariate polynomials (little-endian coefficients,
/// trimmed); returns a trimmed representative, `[ ]` for gcd of zeros.
fn poly_gcd<F: Field>(field: &F, a: Vec<F::Elem>, b: Vec<F::Elem>) -> Vec<F::Elem> {
    let mut a = trim(field, a);
    let mut b = trim(field, b);
    while !b.is_empty() {
        let r = poly_rem(field, &a, &b);
        a = b;
        b = r;
    }
    a
}

fn poly_rem<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = field.inv(&b[db]).expect("divisor has nonzero leading coefficient");
    while r.len() > db {
        let k = r.len() - 1 - db;
        let factor = field.mul(r.last().unwrap(), &lead_inv);
        if !field.is_zero(&factor) {
            for (i, bc) in b.iter().enumerate() {
                let t = field.mul(&factor, bc);
                r[k + i] = field.sub(&r[k + i], &t);
            }
        }
        r.pop();
        r = trim(field, r);
        if r.is_empty() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{Gf2, Matrix, PrimeField, Rationals};
    use graded_ring::parse_poly;

    fn pt<F: Field>(field: &F, a: i64, b: i64, c: i64) -> PlanePoint<F> {
        PlanePoint::new(
            field,
            [field.from_int(a), field.from_int(b), field.from_int(c)],
        )
        .unwrap()
    }

    #[test]
    fn node_rows_have_rank_three_even_when_char_divides_degree() {
        // deg 4 over GF(2): the Euler relation degenerates, yet the four
        // rows still cut the multiplicity-2 locus with rank 3.
        let f2 = Gf2::new();
        let p = pt(&f2, 0, 0, 1);
        let rows = node_condition_rows(&f2, 4, &p);
        let m = Matrix::from_rows(f2.clone(), 15, rows);
        assert_eq!(m.rank(), 3);

        let f101 = PrimeField::new(101).unwrap();
        let p = pt(&f101, 1, 2, 3);
        let rows = node_condition_rows(&f101, 4, &p);
        let m = Matrix::from_rows(f101.clone(), 15, rows);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn kernel_members_really_vanish_to_order_two() {
        let f = PrimeField::new(101).unwrap();
        let p = pt(&f, 5, 7, 1);
        let rows = multiplicity_condition_rows(&f, 4, &p, 2);
        let kernel = exact_core::kernel_basis(&Matrix::from_rows(f.clone(), 15, rows));
        assert_eq!(kernel.dim(), 12);
        for basis_vec in kernel.basis() {
            let poly = HomogeneousPoly::from_dense(f.clone(), 3, 4, basis_vec);
            assert!(has_multiplicity_at_least(&f, &poly, &p, 2));
        }
    }

    #[test]
    fn triple_point_rows_cut_the_expected_codimension() {
        let f = PrimeField::new(101).unwrap();
        let p = pt(&f, 2, 3, 1);
        let rows = multiplicity_condition_rows(&f, 5, &p, 3);
        assert_eq!(rows.len(), 6);
        let m = Matrix::from_rows(f.clone(), 21, rows);
        assert_eq!(m.rank(), 6);
        let kernel = exact_core::kernel_basis(&m);
        let mut exactly_three = 0;
        for basis_vec in kernel.basis() {
            let poly = HomogeneousPoly::from_dense(f.clone(), 3, 5, basis_vec);
            assert!(has_multiplicity_at_least(&f, &poly, &p, 3));
            if !has_multiplicity_at_least(&f, &poly, &p, 4) {
                exactly_three += 1;
            }
        }
        // The kernel is strictly larger than the order-4 locus, so some
        // basis member has multiplicity exactly three.
        assert!(exactly_three >= 1);
    }

    #[test]
    fn taylor_form_reads_the_tangent_cone() {
        let f = PrimeField::new(101).unwrap();
        // x^2 z^2 - y^2 z^2 + x^4 has a node at [0:0:1], tangents x = ±y.
        let c = parse_poly(&f, 3, "x^2*z^2 - y^2*z^2 + x^4").unwrap();
        let p = pt(&f, 0, 0, 1);
        assert!(has_multiplicity_at_least(&f, &c, &p, 2));
        assert!(!has_multiplicity_at_least(&f, &c, &p, 3));
        let t = taylor_form(&f, &c, &p, 2);
        assert_eq!(t[0], f.from_int(-1)); // entry a is the x^a y^(2-a) coefficient
        assert_eq!(t[2], f.one());
        assert!(is_ordinary_point(&f, &c, &p, 2));

        // y^2 z^2 - x^3 z has a cusp (double tangent y^2) at [0:0:1].
        let cusp = parse_poly(&f, 3, "y^2*z^2 - x^3*z").unwrap();
        assert!(has_multiplicity_at_least(&f, &cusp, &p, 2));
        assert!(!is_ordinary_point(&f, &cusp, &p, 2));
    }

    #[test]
    fn char_two_node_detection_reduces_to_the_middle_coefficient() {
        let f2 = Gf2::new();
        let p = pt(&f2, 0, 0, 1);
        // x y z^2 + x^4 + y^4: Taylor part x y — middle coefficient 1: node.
        let good = parse_poly(&f2, 3, "x*y*z^2 + x^4 + y^4").unwrap();
        assert!(is_ordinary_point(&f2, &good, &p, 2));
        // (x^2 + y^2) z^2 = (x+y)^2 z^2: double tangent, not ordinary.
        let bad = parse_poly(&f2, 3, "x^2*z^2 + y^2*z^2 + x^4").unwrap();
        assert!(!is_ordinary_point(&f2, &bad, &p, 2));
    }

    #[test]
    fn squarefree_test_handles_rational_forms_and_y_powers() {
        let q = Rationals::new();
        // Entry a holds the x^a y^(m-a) coefficient throughout.
        // x^2: a repeated tangent, not squarefree.
        let c = [q.zero(), q.zero(), q.one()];
        assert!(!binary_form_is_squarefree(&q, &c));
        // x y: yes.
        let c = [q.zero(), q.one(), q.zero()];
        assert!(binary_form_is_squarefree(&q, &c));
        // y^2 (top = a index 0 ⇒ y-multiplicity 2): no.
        let c = [q.one(), q.zero(), q.zero()];
        assert!(!binary_form_is_squarefree(&q, &c));
        // x^2 - y^2: yes.
        let c = [q.from_int(-1), q.zero(), q.one()];
        assert!(binary_form_is_squarefree(&q, &c));
        // zero form: no.
        let c = [q.zero(), q.zero(), q.zero()];
        assert!(!binary_form_is_squarefree(&q, &c));
    }

    #[test]
    fn chart_matrix_moves_the_distinguished_point() {
        let f = PrimeField::new(101).unwrap();
        let p = pt(&f, 4, 9, 1);
        let m = chart_matrix(&f, &p);
        // Column 2 is the point itself.
        for r in 0..3 {
            assert_eq!(m[r][2], p.coords()[r]);
        }
        // Determinant nonzero: the rows span.
        let mat = Matrix::from_rows(f.clone(), 3, m);
        assert_eq!(mat.rank(), 3);
    }
}
