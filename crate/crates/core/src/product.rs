//! Balanced product trees over machine-sized factors.
//!
//! Factors are first packed greedily into `u64`/`i128` chunks so the tree
//! leaves are already near word size, then multiplied pairwise level by level.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Product of signed machine factors, evaluated with a balanced tree.
pub fn product(factors: impl IntoIterator<Item = i64>) -> BigInt {
    let mut leaves = Vec::new();
    let mut acc: i128 = 1;
    for f in factors {
        if f == 0 {
            return BigInt::zero();
        }
        match acc.checked_mul(f as i128) {
            Some(v) if v.unsigned_abs() < (1u128 << 120) => acc = v,
            _ => {
                leaves.push(BigInt::from(acc));
                acc = f as i128;
            }
        }
    }
    if acc != 1 || leaves.is_empty() {
        leaves.push(BigInt::from(acc));
    }
    product_of_bigints(leaves)
}

/// Balanced pairwise reduction of an arbitrary list of big integers.
pub fn product_of_bigints(mut level: Vec<BigInt>) -> BigInt {
    if level.is_empty() {
        return BigInt::one();
    }
    while level.len() > 1 {
        let mut next = Vec::with_capacity(level.len().div_ceil(2));
        let mut it = level.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a * b),
                None => next.push(a),
            }
        }
        level = next;
    }
    level.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_product_is_one() {
        assert_eq!(product(std::iter::empty()), BigInt::one());
    }

    #[test]
    fn matches_left_fold() {
        let factors: Vec<i64> = (1..300).map(|i| if i % 7 == 0 { -i * 1013 } else { i * 977 }).collect();
        let fold = factors.iter().fold(BigInt::one(), |acc, &f| acc * f);
        assert_eq!(product(factors), fold);
    }

    #[test]
    fn zero_factor_short_circuits() {
        assert!(product([5, 0, 7]).is_zero());
    }

    #[test]
    fn large_factors_do_not_overflow_packing() {
        let f = [i64::MAX, i64::MAX, -3];
        let expect = BigInt::from(i64::MAX) * BigInt::from(i64::MAX) * -3;
        assert_eq!(product(f), expect);
    }
}
