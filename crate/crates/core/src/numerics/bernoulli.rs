//! Exact Bernoulli numbers, grown on demand.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn table() -> &'static Mutex<Vec<BigRational>> {
    static TABLE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![BigRational::one()]))
}

/// `B_n` with the convention `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> BigRational {
    bernoulli_upto(n)[n].clone()
}

/// `B_0, …, B_n`.
pub fn bernoulli_upto(n: usize) -> Vec<BigRational> {
    let mut t = table().lock().unwrap_or_else(|e| e.into_inner());
    while t.len() <= n {
        let m = t.len();
        let value = if m == 1 {
            BigRational::new(BigInt::from(-1), BigInt::from(2))
        } else if m % 2 == 1 {
            BigRational::zero()
        } else {
            // sum_{k<m} C(m+1, k) B_k = -(m+1) B_m
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one();
            for (k, b) in t.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * BigRational::from_integer(binom.clone());
                }
                binom = binom * BigInt::from((m + 1 - k) as u64) / BigInt::from((k + 1) as u64);
            }
            -acc / BigRational::from_integer(BigInt::from((m + 1) as u64))
        };
        t.push(value);
    }
    t[..=n].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_values() {
        let b = bernoulli_upto(12);
        assert_eq!(b[0], r(1, 1));
        assert_eq!(b[1], r(-1, 2));
        assert_eq!(b[2], r(1, 6));
        assert_eq!(b[3], r(0, 1));
        assert_eq!(b[4], r(-1, 30));
        assert_eq!(b[6], r(1, 42));
        assert_eq!(b[8], r(-1, 30));
        assert_eq!(b[10], r(5, 66));
        assert_eq!(b[12], r(-691, 2730));
    }

    #[test]
    fn larger_index() {
        // B_30 = 8615841276005 / 14322
        assert_eq!(bernoulli(30), r(8615841276005, 14322));
    }
}
