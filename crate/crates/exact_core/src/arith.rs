//! Integer primality and GF(2) polynomial arithmetic.
//!
//! Polynomials over GF(2) are encoded as integers with bit `i` holding the
//! coefficient of `x^i`, so `19 = 0b10011` is `x^4 + x + 1`.  The encoding
//! makes "lexicographically smallest modulus" the same as "numerically
//! smallest integer", which is how default moduli for binary extension
//! fields are chosen.

/// Deterministic Miller-Rabin primality test, valid for all `u64`.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to
/// be deterministic for every 64-bit integer.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `(a * b) mod m` without overflow.
pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `a^e mod m` by binary exponentiation.
pub fn pow_mod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, a, m);
        }
        a = mul_mod_u64(a, a, m);
        e >>= 1;
    }
    acc
}

/// Prime factors of `n`, ascending, without multiplicity.
pub fn prime_factors_u32(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Degree of a nonzero GF(2) polynomial (position of its top set bit).
pub fn gf2_degree(a: u64) -> u32 {
    debug_assert!(a != 0);
    63 - a.leading_zeros()
}

/// Carry-less product of two GF(2) polynomials of degree < 32.
pub fn gf2_mul(a: u32, b: u32) -> u64 {
    let mut acc = 0u64;
    let mut bb = b as u64;
    let mut shift = 0u32;
    while bb != 0 {
        if bb & 1 == 1 {
            acc ^= (a as u64) << shift;
        }
        bb >>= 1;
        shift += 1;
    }
    acc
}

/// Remainder of `a` modulo the nonzero GF(2) polynomial `m`.
pub fn gf2_rem(mut a: u64, m: u64) -> u64 {
    debug_assert!(m != 0);
    let dm = gf2_degree(m);
    while a != 0 {
        let da = gf2_degree(a);
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

/// Product of `a` and `b` in GF(2)[x] reduced modulo `m`.
pub fn gf2_mulmod(a: u32, b: u32, m: u64) -> u32 {
    gf2_rem(gf2_mul(a, b), m) as u32
}

/// `a^e` in GF(2)[x] modulo `m`.
pub fn gf2_powmod(mut a: u32, mut e: u64, m: u64) -> u32 {
    let mut acc = gf2_rem(1, m) as u32;
    a = gf2_rem(a as u64, m) as u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = gf2_mulmod(acc, a, m);
        }
        a = gf2_mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Tests irreducibility of a GF(2) polynomial of degree `e >= 1`.
///
/// A reducible polynomial of degree `e` has a factor of degree at most
/// `e / 2`, so trial division by every polynomial of degree `1..=e/2`
/// suffices.  With `e <= 16` this is at most 510 divisions.
pub fn gf2_is_irreducible(m: u64, e: u32) -> bool {
    if m == 0 || gf2_degree(m) != e || e == 0 {
        return false;
    }
    for d in 1..=(e / 2) {
        for low in 0..(1u64 << d) {
            let divisor = (1u64 << d) | low;
            if gf2_rem(m, divisor) == 0 {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest irreducible GF(2) polynomial of degree `e`.
///
/// Under the bit encoding, lexicographic order on coefficient strings
/// (highest degree first) coincides with integer order, so this is the
/// smallest integer in `[2^e, 2^(e+1))` passing the irreducibility test.
pub fn gf2_default_modulus(e: u32) -> u64 {
    assert!((1..=16).contains(&e), "supported degrees are 1..=16");
    for cand in (1u64 << e)..(1u64 << (e + 1)) {
        if gf2_is_irreducible(cand, e) {
            return cand;
        }
    }
    unreachable!("an irreducible polynomial of each degree exists");
}
