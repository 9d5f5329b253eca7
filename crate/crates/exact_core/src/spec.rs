//! Field descriptions: which exact field a computation runs over.
//!
//! A [`FieldSpec`] is the serializable name of a field.  The text form used
//! in CLI flags and input files is `"q"` for the rationals, `"gf:<p>"` for a
//! prime field, and `"gf2e:<e>"` or `"gf2e:<e>:<modulus>"` for a binary
//! extension field, where `<modulus>` is the integer bit-encoding of an
//! irreducible polynomial over GF(2) (bit `i` is the coefficient of `x^i`).

use std::fmt;
use std::str::FromStr;

use crate::arith::{gf2_default_modulus, gf2_degree, gf2_is_irreducible, is_prime_u64};
use crate::error::FieldError;

/// Serializable description of a supported coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers with arbitrary-precision arithmetic.
    Rationals,
    /// The prime field GF(p), `2 <= p < 2^31`.
    PrimeField { p: u32 },
    /// The binary extension GF(2^e), `1 <= e <= 16`, with an explicit
    /// irreducible modulus in the bit encoding.
    BinaryExt { e: u32, modulus: u32 },
}

impl FieldSpec {
    /// Validated prime-field description.
    pub fn prime_field(p: u64) -> Result<FieldSpec, FieldError> {
        if !(2..1u64 << 31).contains(&p) {
            return Err(FieldError::PrimeOutOfRange(p));
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField { p: p as u32 })
    }

    /// Validated binary-extension description.  With `modulus = None` the
    /// lexicographically smallest irreducible polynomial of degree `e` is
    /// filled in.
    pub fn binary_ext(e: u32, modulus: Option<u64>) -> Result<FieldSpec, FieldError> {
        if !(1..=16).contains(&e) {
            return Err(FieldError::UnsupportedDegree(e));
        }
        let m = match modulus {
            Some(m) => {
                if m == 0 || gf2_degree(m) != e {
                    return Err(FieldError::ModulusDegreeMismatch { e, modulus: m });
                }
                if !gf2_is_irreducible(m, e) {
                    return Err(FieldError::ReducibleModulus { e, modulus: m });
                }
                m
            }
            None => gf2_default_modulus(e),
        };
        Ok(FieldSpec::BinaryExt {
            e,
            modulus: m as u32,
        })
    }

    /// Characteristic of the described field (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField { p } => *p as u64,
            FieldSpec::BinaryExt { .. } => 2,
        }
    }

    /// Number of elements, `None` for the infinite field.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField { p } => Some(*p as u64),
            FieldSpec::BinaryExt { e, .. } => Some(1u64 << e),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField { p } => write!(f, "gf:{p}"),
            FieldSpec::BinaryExt { e, modulus } => write!(f, "gf2e:{e}:{modulus}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, FieldError> {
        if s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("gf:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| FieldError::Parse(format!("invalid prime in field string {s:?}")))?;
            return FieldSpec::prime_field(p);
        }
        if let Some(rest) = s.strip_prefix("gf2e:") {
            let mut parts = rest.split(':');
            let e_str = parts.next().unwrap_or("");
            let e: u32 = e_str
                .parse()
                .map_err(|_| FieldError::Parse(format!("invalid degree in field string {s:?}")))?;
            let modulus = match parts.next() {
                None => None,
                Some(m_str) => Some(m_str.parse::<u64>().map_err(|_| {
                    FieldError::Parse(format!("invalid modulus in field string {s:?}"))
                })?),
            };
            if parts.next().is_some() {
                return Err(FieldError::Parse(format!(
                    "too many components in field string {s:?}"
                )));
            }
            return FieldSpec::binary_ext(e, modulus);
        }
        Err(FieldError::Parse(format!(
            "unrecognized field string {s:?} (expected \"q\", \"gf:<p>\", or \"gf2e:<e>[:<modulus>]\")"
        )))
    }
}
