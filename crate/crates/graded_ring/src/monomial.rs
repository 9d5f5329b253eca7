//! Monomial bases of the graded pieces of a polynomial ring.
//!
//! Degree-`d` monomials in `n` variables are ordered lexicographically by
//! exponent vector with `x0 > x1 > ... > x{n-1}`, largest first, so
//! `x0^2 > x0*x1 > x0*x2 > x1^2 > ...`.  Every dense coefficient vector in
//! the workspace is indexed by the rank of its monomial in this order, and
//! [`monomial_rank`] / [`monomial_unrank`] convert between exponent vectors
//! and positions without materializing the whole basis.

/// Binomial coefficient as `usize`, panicking on overflow.
pub fn binomial(n: usize, k: usize) -> usize {
    checked_binomial(n, k).expect("binomial coefficient overflows usize")
}

/// Binomial coefficient, `None` on overflow.
pub fn checked_binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return None;
        }
    }
    Some(acc as usize)
}

/// Number of degree-`d` monomials in `n` variables.
pub fn monomial_count(nvars: usize, d: usize) -> usize {
    checked_monomial_count(nvars, d).expect("monomial basis too large")
}

/// Number of degree-`d` monomials, `None` on overflow.
pub fn checked_monomial_count(nvars: usize, d: usize) -> Option<usize> {
    if nvars == 0 {
        return Some(if d == 0 { 1 } else { 0 });
    }
    checked_binomial(nvars + d - 1, d)
}

/// All degree-`d` exponent vectors in `n` variables, lex descending.
pub fn monomials(nvars: usize, d: usize) -> Vec<Vec<u8>> {
    assert!(d <= u8::MAX as usize, "degree exceeds exponent storage");
    let mut out = Vec::with_capacity(monomial_count(nvars, d));
    let mut current = vec![0u8; nvars];
    descend(&mut out, &mut current, 0, d);
    out
}

fn descend(out: &mut Vec<Vec<u8>>, current: &mut Vec<u8>, var: usize, rem: usize) {
    if var + 1 == current.len() {
        current[var] = rem as u8;
        out.push(current.clone());
        return;
    }
    if current.is_empty() {
        if rem == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for e in (0..=rem).rev() {
        current[var] = e as u8;
        descend(out, current, var + 1, rem - e);
    }
    current[var] = 0;
}

/// Position of an exponent vector in the lex-descending order of its degree.
pub fn monomial_rank(expo: &[u8]) -> usize {
    let nvars = expo.len();
    let mut rem: usize = expo.iter().map(|&e| e as usize).sum();
    let mut rank = 0usize;
    for (i, &e) in expo.iter().enumerate() {
        // Monomials with a larger exponent in slot i come first.
        for v in (e as usize + 1)..=rem {
            rank += monomial_count(nvars - i - 1, rem - v);
        }
        rem -= e as usize;
    }
    rank
}

/// Exponent vector at `rank` in the lex-descending degree-`d` order.
pub fn monomial_unrank(nvars: usize, d: usize, rank: usize) -> Vec<u8> {
    assert!(rank < monomial_count(nvars, d), "rank out of range");
    let mut expo = vec![0u8; nvars];
    let mut rem = d;
    let mut rank = rank;
    for i in 0..nvars {
        if i + 1 == nvars {
            expo[i] = rem as u8;
            break;
        }
        for v in (0..=rem).rev() {
            let block = monomial_count(nvars - i - 1, rem - v);
            if rank < block {
                expo[i] = v as u8;
                rem -= v;
                break;
            }
            rank -= block;
        }
    }
    expo
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_enumeration() {
        for nvars in 1..=5 {
            for d in 0..=6 {
                assert_eq!(monomials(nvars, d).len(), monomial_count(nvars, d));
            }
        }
        assert_eq!(monomial_count(3, 2), 6);
        assert_eq!(monomial_count(4, 3), 20);
        assert_eq!(monomial_count(9, 4), 495);
    }

    #[test]
    fn order_is_lex_descending() {
        let ms = monomials(3, 2);
        let expected: Vec<Vec<u8>> = vec![
            vec![2, 0, 0],
            vec![1, 1, 0],
            vec![1, 0, 1],
            vec![0, 2, 0],
            vec![0, 1, 1],
            vec![0, 0, 2],
        ];
        assert_eq!(ms, expected);
    }

    #[test]
    fn rank_and_unrank_are_inverse() {
        for nvars in 1..=5 {
            for d in 0..=5 {
                for (i, m) in monomials(nvars, d).iter().enumerate() {
                    assert_eq!(monomial_rank(m), i, "{m:?}");
                    assert_eq!(&monomial_unrank(nvars, d, i), m);
                }
            }
        }
    }

    #[test]
    fn binomial_values_and_overflow() {
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(52, 26), 495918532948104);
        assert!(checked_binomial(1000, 500).is_none());
        assert!(checked_monomial_count(32, 255).is_none());
    }
}
