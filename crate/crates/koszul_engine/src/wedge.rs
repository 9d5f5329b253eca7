//! Bases for exterior powers of the degree-one piece.
//!
//! A basis vector of the `p`-th exterior power of an `n`-dimensional space is
//! a strictly increasing tuple `s_0 < s_1 < ... < s_{p-1}` of variable
//! indices.  Tuples are indexed by their *colexicographic* rank,
//!
//! ```text
//! rank(s) = C(s_0, 1) + C(s_1, 2) + ... + C(s_{p-1}, p),
//! ```
//!
//! which runs over `0 .. C(n, p)` and is independent of `n`.  For example,
//! with `p = 2` the first few tuples are `{0,1}, {0,2}, {1,2}, {0,3}, {1,3},
//! {2,3}, {0,4}, ...`.

use graded_ring::binomial;

/// Number of basis tuples of the `p`-th exterior power in `n` variables.
pub fn wedge_count(n: usize, p: usize) -> usize {
    binomial(n, p)
}

/// Colexicographic rank of a strictly increasing tuple.
pub fn wedge_rank(tuple: &[u8]) -> usize {
    tuple
        .iter()
        .enumerate()
        .map(|(i, &s)| binomial(s as usize, i + 1))
        .sum()
}

/// Inverse of [`wedge_rank`]: the strictly increasing `p`-tuple of the given
/// colexicographic rank.
pub fn wedge_unrank(p: usize, rank: usize) -> Vec<u8> {
    let mut tuple = vec![0u8; p];
    let mut rest = rank;
    for i in (0..p).rev() {
        // Largest s with C(s, i+1) <= rest; the search starts high enough
        // because C(s, i+1) >= s - i grows without bound in s.
        let mut s = i;
        while binomial(s + 1, i + 1) <= rest {
            s += 1;
        }
        tuple[i] = s as u8;
        rest -= binomial(s, i + 1);
    }
    debug_assert_eq!(rest, 0, "rank must decompose exactly");
    tuple
}

/// All `p`-tuples in `n` variables, listed in colexicographic order, so that
/// position in the returned vector equals [`wedge_rank`].
pub fn wedge_tuples(n: usize, p: usize) -> Vec<Vec<u8>> {
    (0..wedge_count(n, p)).map(|r| wedge_unrank(p, r)).collect()
}
