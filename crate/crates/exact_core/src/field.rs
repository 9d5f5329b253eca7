//! The [`Field`] trait and the four concrete coefficient fields.
//!
//! All higher layers are generic over `F: Field`.  Elements are plain data
//! (`u32` residues, `u16` bit patterns, arbitrary-precision rationals) and
//! every operation goes through the field value, which carries whatever
//! precomputed data the representation needs (Barrett constants, log/exp
//! tables).  The trait also exposes overridable elimination kernels so each
//! field can substitute a representation-specific fast path while generic
//! callers stay oblivious.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{gf2_mulmod, gf2_powmod, prime_factors_u32};
use crate::error::FieldError;
use crate::matrix::Rref;
use crate::rng::SplitMix64;
use crate::spec::FieldSpec;

/// An exact field with plain-data elements and overridable linear algebra
/// kernels.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    /// Element representation.
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    /// The serializable description of this field.
    fn spec(&self) -> FieldSpec;

    /// Field characteristic (0 for the rationals).
    fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// `a / b`; `None` when `b` is zero.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// The image of the integer `n` under the canonical ring map `Z -> F`.
    fn from_int(&self, n: i64) -> Self::Elem;

    /// Interpretation of an integer literal appearing in input text.
    ///
    /// Identical to [`Field::from_int`] except over GF(2^e), where literals
    /// denote the bit encoding of an element rather than a multiple of 1.
    fn from_literal(&self, n: i64) -> Self::Elem {
        self.from_int(n)
    }

    /// Canonical text form of an element (inverse of [`Field::parse_elem`]).
    fn elem_string(&self, a: &Self::Elem) -> String;

    /// Parses the canonical text form.
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, FieldError>;

    /// Uniform random element.  Over the rationals this draws an integer
    /// from the documented range `-50..=50`.
    fn sample(&self, rng: &mut SplitMix64) -> Self::Elem;

    /// Uniform random nonzero element.
    fn sample_nonzero(&self, rng: &mut SplitMix64) -> Self::Elem {
        loop {
            let v = self.sample(rng);
            if !self.is_zero(&v) {
                return v;
            }
        }
    }

    /// Rank of a dense row-major matrix.  Fields override this with a
    /// representation-specific kernel.
    fn dense_rank(&self, rows: usize, cols: usize, data: Vec<Self::Elem>) -> usize {
        crate::matrix::generic_dense_rank(self, rows, cols, data)
    }

    /// Reduced row-echelon form of a dense row-major matrix.
    fn dense_rref(&self, rows: usize, cols: usize, data: Vec<Self::Elem>) -> Rref<Self>
    where
        Self: Sized,
    {
        crate::matrix::generic_dense_rref(self, rows, cols, data)
    }

    /// Rank of a matrix given as sorted sparse rows.
    fn sparse_rank(&self, rows: usize, cols: usize, entries: Vec<Vec<(u32, Self::Elem)>>) -> usize {
        crate::sparse::markowitz_rank(self, rows, cols, entries)
    }
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// The rational numbers, `Elem = BigRational`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Rationals {
    pub fn new() -> Self {
        Rationals
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn elem_string(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<BigRational, FieldError> {
        let bad = || FieldError::Parse(format!("invalid rational {s:?}"));
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num_str.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den_str.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(FieldError::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(BigRational::new(num, den))
    }

    fn sample(&self, rng: &mut SplitMix64) -> BigRational {
        self.from_int(rng.next_in_range(-50, 50))
    }

    fn dense_rank(&self, rows: usize, cols: usize, data: Vec<BigRational>) -> usize {
        crate::matrix::rational_dense_rank(rows, cols, &data)
    }

    fn sparse_rank(&self, rows: usize, cols: usize, entries: Vec<Vec<(u32, BigRational)>>) -> usize {
        crate::matrix::rational_sparse_rank(rows, cols, &entries)
    }
}

// ---------------------------------------------------------------------------
// Prime fields GF(p)
// ---------------------------------------------------------------------------

/// GF(p) for a prime `2 <= p < 2^31`, `Elem = u32` residues in `[0, p)`.
///
/// Products are reduced with a Barrett constant `floor(2^64 / p)`, so no
/// division instruction appears on the hot paths.
#[derive(Clone, Debug)]
pub struct PrimeField {
    p: u32,
    barrett: u64,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, FieldError> {
        FieldSpec::prime_field(p as u64)?;
        Ok(PrimeField {
            p,
            barrett: ((1u128 << 64) / p as u128) as u64,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces any `u64` modulo `p` using the Barrett constant.
    #[inline]
    pub fn reduce_u64(&self, x: u64) -> u32 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x - q * self.p as u64;
        while r >= self.p as u64 {
            r -= self.p as u64;
        }
        r as u32
    }

    #[inline]
    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        self.reduce_u64(a as u64 * b as u64)
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField { p: self.p }
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1 % self.p
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.mul_raw(*a, *b)
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // Extended Euclid over i64; p < 2^31 keeps every intermediate in range.
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus is prime, so every nonzero element is a unit");
        Some(t0.rem_euclid(self.p as i64) as u32)
    }

    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    fn elem_string(&self, a: &u32) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<u32, FieldError> {
        let n: i64 = s
            .trim()
            .parse()
            .map_err(|_| FieldError::Parse(format!("invalid GF({}) element {s:?}", self.p)))?;
        Ok(self.from_int(n))
    }

    fn sample(&self, rng: &mut SplitMix64) -> u32 {
        rng.next_below(self.p as u64) as u32
    }

    fn dense_rank(&self, rows: usize, cols: usize, data: Vec<u32>) -> usize {
        crate::matrix::prime_dense_rank(self, rows, cols, data)
    }
}

// ---------------------------------------------------------------------------
// GF(2)
// ---------------------------------------------------------------------------

/// GF(2) with `Elem = u8` in {0, 1}.
///
/// Describes itself as `PrimeField { p: 2 }`; the dedicated type exists so
/// the elimination kernel can pack rows into machine words and eliminate
/// with word-wide XOR.
#[derive(Clone, Copy, Debug, Default)]
pub struct Gf2;

impl Gf2 {
    pub fn new() -> Self {
        Gf2
    }
}

impl Field for Gf2 {
    type Elem = u8;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField { p: 2 }
    }

    fn zero(&self) -> u8 {
        0
    }

    fn one(&self) -> u8 {
        1
    }

    fn is_zero(&self, a: &u8) -> bool {
        *a == 0
    }

    fn add(&self, a: &u8, b: &u8) -> u8 {
        a ^ b
    }

    fn sub(&self, a: &u8, b: &u8) -> u8 {
        a ^ b
    }

    fn neg(&self, a: &u8) -> u8 {
        *a
    }

    fn mul(&self, a: &u8, b: &u8) -> u8 {
        a & b
    }

    fn inv(&self, a: &u8) -> Option<u8> {
        if *a == 0 {
            None
        } else {
            Some(1)
        }
    }

    fn from_int(&self, n: i64) -> u8 {
        n.rem_euclid(2) as u8
    }

    fn elem_string(&self, a: &u8) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<u8, FieldError> {
        let n: i64 = s
            .trim()
            .parse()
            .map_err(|_| FieldError::Parse(format!("invalid GF(2) element {s:?}")))?;
        Ok(self.from_int(n))
    }

    fn sample(&self, rng: &mut SplitMix64) -> u8 {
        (rng.next_u64() & 1) as u8
    }

    fn dense_rank(&self, rows: usize, cols: usize, data: Vec<u8>) -> usize {
        crate::matrix::gf2_dense_rank(rows, cols, &data)
    }
}

// ---------------------------------------------------------------------------
// Binary extensions GF(2^e)
// ---------------------------------------------------------------------------

/// GF(2^e) for `1 <= e <= 16`, `Elem = u16` bit patterns of degree-`< e`
/// polynomial residues.
///
/// Multiplication and inversion go through discrete log/antilog tables built
/// once from a generator of the multiplicative group; addition is XOR.
#[derive(Clone, Debug)]
pub struct BinaryField {
    e: u32,
    modulus: u32,
    /// 2^e - 1.
    order: u32,
    /// `exp[i] = g^i` for `i < 2 * order`, doubled so a sum of two logs
    /// never needs reduction.
    exp: Arc<Vec<u16>>,
    /// `log[a]` defined for `a != 0`.
    log: Arc<Vec<u16>>,
}

impl BinaryField {
    pub fn new(e: u32, modulus: u32) -> Result<Self, FieldError> {
        FieldSpec::binary_ext(e, Some(modulus as u64))?;
        let order = (1u32 << e) - 1;
        let m = modulus as u64;
        // Find a generator: g has order 2^e - 1 iff g^((2^e-1)/q) != 1 for
        // every prime q dividing 2^e - 1.
        let factors = prime_factors_u32(order);
        let gen = (2..(1u32 << e))
            .find(|&g| {
                factors
                    .iter()
                    .all(|&q| gf2_powmod(g, (order / q) as u64, m) != 1)
            })
            .unwrap_or(1); // e = 1: trivial group, generator is 1
        let mut exp = vec![0u16; 2 * order as usize + 1];
        let mut log = vec![0u16; 1usize << e];
        let mut acc = 1u32;
        for i in 0..order as usize {
            exp[i] = acc as u16;
            log[acc as usize] = i as u16;
            acc = gf2_mulmod(acc, gen, m);
        }
        debug_assert_eq!(acc, 1, "generator order must divide 2^e - 1");
        for i in order as usize..exp.len() {
            exp[i] = exp[i - order as usize];
        }
        Ok(BinaryField {
            e,
            modulus,
            order,
            exp: Arc::new(exp),
            log: Arc::new(log),
        })
    }

    /// Field with the default (lexicographically smallest) modulus.
    pub fn with_default_modulus(e: u32) -> Result<Self, FieldError> {
        match FieldSpec::binary_ext(e, None)? {
            FieldSpec::BinaryExt { modulus, .. } => BinaryField::new(e, modulus),
            _ => unreachable!(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Log/antilog table views for the table-driven elimination kernel.
    pub(crate) fn tables(&self) -> (&[u16], &[u16], u32) {
        (&self.exp, &self.log, self.order)
    }
}

impl Field for BinaryField {
    type Elem = u16;

    fn spec(&self) -> FieldSpec {
        FieldSpec::BinaryExt {
            e: self.e,
            modulus: self.modulus,
        }
    }

    fn zero(&self) -> u16 {
        0
    }

    fn one(&self) -> u16 {
        1
    }

    fn is_zero(&self, a: &u16) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u16, b: &u16) -> u16 {
        a ^ b
    }

    #[inline]
    fn sub(&self, a: &u16, b: &u16) -> u16 {
        a ^ b
    }

    fn neg(&self, a: &u16) -> u16 {
        *a
    }

    #[inline]
    fn mul(&self, a: &u16, b: &u16) -> u16 {
        if *a == 0 || *b == 0 {
            0
        } else {
            self.exp[self.log[*a as usize] as usize + self.log[*b as usize] as usize]
        }
    }

    fn inv(&self, a: &u16) -> Option<u16> {
        if *a == 0 {
            None
        } else {
            Some(self.exp[self.order as usize - self.log[*a as usize] as usize])
        }
    }

    fn from_int(&self, n: i64) -> u16 {
        // n * 1 in characteristic 2: the parity of n.
        n.rem_euclid(2) as u16
    }

    fn from_literal(&self, n: i64) -> u16 {
        n.rem_euclid(1i64 << self.e) as u16
    }

    fn elem_string(&self, a: &u16) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<u16, FieldError> {
        let bad = || FieldError::Parse(format!("invalid GF(2^{}) element {s:?}", self.e));
        let n: u64 = s.trim().parse().map_err(|_| bad())?;
        if n >= 1u64 << self.e {
            return Err(bad());
        }
        Ok(n as u16)
    }

    fn sample(&self, rng: &mut SplitMix64) -> u16 {
        rng.next_below(1u64 << self.e) as u16
    }

    fn dense_rank(&self, rows: usize, cols: usize, data: Vec<u16>) -> usize {
        crate::matrix::binary_ext_dense_rank(self, rows, cols, data)
    }
}
