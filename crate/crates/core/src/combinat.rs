//! Arbitrary-precision binomial and Catalan helpers shared by the
//! enumeration oracles and the closed-form counting operations.

use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)` as an arbitrary-precision integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Catalan number `C_m = C(2m, m) / (m + 1)`.
pub fn catalan(m: u64) -> BigUint {
    binomial(2 * m, m) / BigUint::from(m + 1)
}

/// First `len` Catalan numbers `C_0 .. C_{len-1}`.
pub fn catalan_table(len: usize) -> Vec<BigUint> {
    (0..len as u64).map(catalan).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(10, 5), BigUint::from(252u32));
        assert_eq!(binomial(3, 7), BigUint::zero());
    }

    #[test]
    fn binomial_matches_pascal() {
        for n in 1..30u64 {
            for k in 1..n {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k)
                );
            }
        }
    }

    #[test]
    fn catalan_sequence() {
        let want = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (m, w) in want.iter().enumerate() {
            assert_eq!(catalan(m as u64), BigUint::from(*w));
        }
    }
}
