//! Homogeneous polynomials with exact coefficients.
//!
//! Terms are stored sparsely in a `BTreeMap` keyed by exponent vector, so a
//! polynomial's memory footprint is proportional to its term count rather
//! than to the full monomial basis.  The text grammar accepted by
//! [`parse_poly`] is
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := factor ('*' factor)*
//! factor := integer | variable ['^' integer]
//! ```
//!
//! with variables `x0, x1, ...` (and the aliases `x, y, z` when there are
//! exactly three variables).  Integer literals are interpreted through
//! [`Field::from_literal`], so over GF(2^e) they denote bit-encoded field
//! elements.  All terms must have the same total degree.

use std::collections::BTreeMap;
use std::fmt;

use exact_core::Field;

use crate::error::RingError;
use crate::monomial::{monomial_count, monomial_rank, monomial_unrank};

/// Maximum number of variables accepted anywhere in the workspace.
pub const MAX_NVARS: usize = 32;

/// Maximum total degree accepted anywhere in the workspace.
pub const MAX_DEGREE: usize = 64;

/// A homogeneous polynomial of fixed degree in `nvars` variables.
///
/// The zero polynomial of each degree is representable (empty term map), so
/// arithmetic never loses track of grading.
#[derive(Clone, Debug)]
pub struct HomogeneousPoly<F: Field> {
    field: F,
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Vec<u8>, F::Elem>,
}

impl<F: Field> HomogeneousPoly<F> {
    /// The zero polynomial of the given degree.
    pub fn zero(field: F, nvars: usize, degree: usize) -> Self {
        assert!(nvars <= MAX_NVARS && degree <= MAX_DEGREE);
        HomogeneousPoly {
            field,
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Polynomial from `(exponent vector, coefficient)` pairs of a common
    /// degree; duplicate monomials are merged and zero coefficients dropped.
    pub fn from_terms(
        field: F,
        nvars: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<u8>, F::Elem)>,
    ) -> Self {
        let mut poly = HomogeneousPoly::zero(field, nvars, degree);
        for (expo, coeff) in terms {
            poly.add_term(&expo, coeff);
        }
        poly
    }

    /// The monomial `x^expo` with the given coefficient.
    pub fn monomial(field: F, nvars: usize, expo: &[u8], coeff: F::Elem) -> Self {
        let degree = expo.iter().map(|&e| e as usize).sum();
        HomogeneousPoly::from_terms(field, nvars, degree, [(expo.to_vec(), coeff)])
    }

    /// The variable `x_i` as a degree-1 polynomial.
    pub fn var(field: F, nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut expo = vec![0u8; nvars];
        expo[i] = 1;
        let one = field.one();
        HomogeneousPoly::monomial(field, nvars, &expo, one)
    }

    fn add_term(&mut self, expo: &[u8], coeff: F::Elem) {
        assert_eq!(expo.len(), self.nvars, "exponent width mismatch");
        let total: usize = expo.iter().map(|&e| e as usize).sum();
        assert_eq!(total, self.degree, "term degree mismatch");
        if self.field.is_zero(&coeff) {
            return;
        }
        match self.terms.get_mut(expo) {
            Some(c) => {
                let merged = self.field.add(c, &coeff);
                if self.field.is_zero(&merged) {
                    self.terms.remove(expo);
                } else {
                    *c = merged;
                }
            }
            None => {
                self.terms.insert(expo.to_vec(), coeff);
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lex order of exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &F::Elem)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Coefficient of `x^expo` (zero when absent).
    pub fn coeff(&self, expo: &[u8]) -> F::Elem {
        self.terms
            .get(expo)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Sum of two polynomials of matching shape.
    pub fn add(&self, other: &Self) -> Result<Self, RingError> {
        if self.nvars != other.nvars {
            return Err(RingError::NvarsMismatch(self.nvars, other.nvars));
        }
        if self.degree != other.degree {
            return Err(RingError::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (expo, coeff) in &other.terms {
            out.add_term(expo, coeff.clone());
        }
        Ok(out)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = HomogeneousPoly::zero(self.field.clone(), self.nvars, self.degree);
        if self.field.is_zero(c) {
            return out;
        }
        for (expo, coeff) in &self.terms {
            out.terms
                .insert(expo.clone(), self.field.mul(coeff, c));
        }
        out
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff = self.field.neg(coeff);
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Result<Self, RingError> {
        self.add(&other.neg())
    }

    /// Product of two polynomials (degrees add).
    pub fn mul(&self, other: &Self) -> Result<Self, RingError> {
        if self.nvars != other.nvars {
            return Err(RingError::NvarsMismatch(self.nvars, other.nvars));
        }
        let degree = self.degree + other.degree;
        if degree > MAX_DEGREE {
            return Err(RingError::DegreeTooLarge(degree));
        }
        let mut out = HomogeneousPoly::zero(self.field.clone(), self.nvars, degree);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expo: Vec<u8> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(&expo, self.field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to `x_var`.
    ///
    /// The exponent enters through the field, so derivatives degenerate in
    /// small characteristic exactly as they should (`d/dx x^2 = 0` over
    /// GF(2)).
    pub fn derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars);
        if self.degree == 0 {
            return HomogeneousPoly::zero(self.field.clone(), self.nvars, 0);
        }
        let mut out = HomogeneousPoly::zero(self.field.clone(), self.nvars, self.degree - 1);
        for (expo, coeff) in &self.terms {
            let e = expo[var];
            if e == 0 {
                continue;
            }
            let factor = self.field.from_int(e as i64);
            let c = self.field.mul(coeff, &factor);
            if self.field.is_zero(&c) {
                continue;
            }
            let mut shifted = expo.clone();
            shifted[var] -= 1;
            out.add_term(&shifted, c);
        }
        out
    }

    /// Value at a point (coordinates in the coefficient field).
    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars, "point width mismatch");
        let f = &self.field;
        let mut acc = f.zero();
        for (expo, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &e) in expo.iter().enumerate() {
                for _ in 0..e {
                    term = f.mul(&term, &point[i]);
                }
            }
            acc = f.add(&acc, &term);
        }
        acc
    }

    /// Substitution `x_i <- sum_j mat[i][j] * x_j` for a square matrix of
    /// scalars; the result is homogeneous of the same degree.
    pub fn linear_substitute(&self, mat: &[Vec<F::Elem>]) -> Self {
        assert_eq!(mat.len(), self.nvars, "substitution matrix height");
        for row in mat {
            assert_eq!(row.len(), self.nvars, "substitution matrix width");
        }
        let f = self.field.clone();
        let images: Vec<HomogeneousPoly<F>> = (0..self.nvars)
            .map(|i| {
                HomogeneousPoly::from_terms(
                    f.clone(),
                    self.nvars,
                    1,
                    (0..self.nvars).map(|j| {
                        let mut expo = vec![0u8; self.nvars];
                        expo[j] = 1;
                        (expo, mat[i][j].clone())
                    }),
                )
            })
            .collect();
        let mut out = HomogeneousPoly::zero(f.clone(), self.nvars, self.degree);
        for (expo, coeff) in &self.terms {
            let mut term = HomogeneousPoly::monomial(f.clone(), self.nvars, &vec![0; self.nvars], coeff.clone());
            for (i, &e) in expo.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&images[i]).expect("degree bounded by original");
                }
            }
            out = out.add(&term).expect("shapes match");
        }
        out
    }

    /// Dense coefficient vector over the lex-descending monomial basis.
    pub fn to_dense(&self) -> Vec<F::Elem> {
        let len = monomial_count(self.nvars, self.degree);
        let mut out = vec![self.field.zero(); len];
        for (expo, coeff) in &self.terms {
            out[monomial_rank(expo)] = coeff.clone();
        }
        out
    }

    /// Polynomial from a dense coefficient vector over the lex-descending
    /// monomial basis.
    pub fn from_dense(field: F, nvars: usize, degree: usize, coeffs: &[F::Elem]) -> Self {
        assert_eq!(coeffs.len(), monomial_count(nvars, degree));
        HomogeneousPoly::from_terms(
            field,
            nvars,
            degree,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (monomial_unrank(nvars, degree, i), c.clone())),
        )
    }
}

impl<F: Field> PartialEq for HomogeneousPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.degree == other.degree && self.terms == other.terms
    }
}

impl<F: Field> fmt::Display for HomogeneousPoly<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let mut first = true;
        // Iterate lex descending: largest exponent vector first.
        for (expo, coeff) in self.terms.iter().rev() {
            let cs = self.field.elem_string(coeff);
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if first {
                if neg {
                    write!(out, "-")?;
                }
                first = false;
            } else if neg {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            let mon = monomial_string(expo);
            match (&mon[..], &body[..]) {
                ("1", _) => write!(out, "{body}")?,
                (_, "1") => write!(out, "{mon}")?,
                _ => write!(out, "{body}*{mon}")?,
            }
        }
        Ok(())
    }
}

fn monomial_string(expo: &[u8]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in expo.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{i}")),
            _ => parts.push(format!("x{i}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(i64),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(nvars: usize, input: &str) -> Result<Vec<Token>, RingError> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            c if c.is_ascii_digit() => {
                let mut value: i64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    chars.next();
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as i64))
                        .ok_or(RingError::CoefficientOverflow)?;
                }
                tokens.push(Token::Int(value));
            }
            'x' => {
                chars.next();
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|c| c.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                if digits.is_empty() {
                    // Bare `x` is the three-variable alias for x0.
                    if nvars == 3 {
                        tokens.push(Token::Var(0));
                    } else {
                        return Err(RingError::UnknownVariable("x".into()));
                    }
                } else {
                    let idx: usize = digits
                        .parse()
                        .map_err(|_| RingError::UnknownVariable(format!("x{digits}")))?;
                    if idx >= nvars {
                        return Err(RingError::UnknownVariable(format!("x{idx}")));
                    }
                    tokens.push(Token::Var(idx));
                }
            }
            'y' | 'z' => {
                chars.next();
                if nvars == 3 {
                    tokens.push(Token::Var(if ch == 'y' { 1 } else { 2 }));
                } else {
                    return Err(RingError::UnknownVariable(ch.to_string()));
                }
            }
            other => {
                return Err(RingError::Syntax(format!(
                    "unexpected character {other:?}"
                )));
            }
        }
    }
    Ok(tokens)
}

/// Parses the homogeneous polynomial grammar over the given field.
///
/// Errors on unknown variables, malformed syntax, coefficient overflow,
/// inconsistent term degrees, and the all-zero polynomial (whose degree
/// would be undetermined).
pub fn parse_poly<F: Field>(
    field: &F,
    nvars: usize,
    input: &str,
) -> Result<HomogeneousPoly<F>, RingError> {
    if nvars == 0 || nvars > MAX_NVARS {
        return Err(RingError::TooManyVariables(nvars));
    }
    let tokens = tokenize(nvars, input)?;
    if tokens.is_empty() {
        return Err(RingError::Syntax("empty input".into()));
    }
    let mut pos = 0usize;
    let mut parsed: Vec<(Vec<u8>, F::Elem, usize)> = Vec::new();
    let mut first = true;
    while pos < tokens.len() {
        // Sign: optional for the first term, mandatory separator afterwards.
        let mut negative = false;
        match tokens[pos] {
            Token::Plus => {
                pos += 1;
            }
            Token::Minus => {
                negative = true;
                pos += 1;
            }
            _ if first => {}
            _ => {
                return Err(RingError::Syntax(
                    "expected '+' or '-' between terms".into(),
                ));
            }
        }
        first = false;
        // Factors separated by '*'.
        let mut coeff = field.one();
        let mut expo = vec![0u8; nvars];
        loop {
            match tokens.get(pos) {
                Some(Token::Int(n)) => {
                    pos += 1;
                    coeff = field.mul(&coeff, &field.from_literal(*n));
                }
                Some(Token::Var(i)) => {
                    let i = *i;
                    pos += 1;
                    let mut exponent = 1usize;
                    if let Some(Token::Caret) = tokens.get(pos) {
                        pos += 1;
                        match tokens.get(pos) {
                            Some(Token::Int(e)) if *e >= 0 => {
                                exponent = *e as usize;
                                pos += 1;
                            }
                            _ => {
                                return Err(RingError::Syntax(
                                    "expected a nonnegative exponent after '^'".into(),
                                ));
                            }
                        }
                    }
                    let total = expo[i] as usize + exponent;
                    if total > MAX_DEGREE {
                        return Err(RingError::DegreeTooLarge(total));
                    }
                    expo[i] = total as u8;
                }
                _ => {
                    return Err(RingError::Syntax("expected a factor".into()));
                }
            }
            if let Some(Token::Star) = tokens.get(pos) {
                pos += 1;
                continue;
            }
            break;
        }
        let degree: usize = expo.iter().map(|&e| e as usize).sum();
        if degree > MAX_DEGREE {
            return Err(RingError::DegreeTooLarge(degree));
        }
        if negative {
            coeff = field.neg(&coeff);
        }
        if !field.is_zero(&coeff) {
            parsed.push((expo, coeff, degree));
        }
    }
    if parsed.is_empty() {
        return Err(RingError::ZeroPolynomial);
    }
    let mut degrees: Vec<usize> = parsed.iter().map(|(_, _, d)| *d).collect();
    degrees.sort_unstable();
    degrees.dedup();
    if degrees.len() > 1 {
        return Err(RingError::NonHomogeneous(degrees));
    }
    let degree = degrees[0];
    Ok(HomogeneousPoly::from_terms(
        field.clone(),
        nvars,
        degree,
        parsed.into_iter().map(|(e, c, _)| (e, c)),
    ))
}
