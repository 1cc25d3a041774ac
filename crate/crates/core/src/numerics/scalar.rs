//! Scalar abstractions shared by the generic algorithms.
//!
//! [`Field`] covers what the finite sums, the convolution series and the
//! averaging accelerator need; [`Real`] adds the transcendental functions.
//! Both are implemented for `f64`, and [`HpReal`]; `Field` is also
//! implemented for exact [`BigRational`] arithmetic.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};

use super::hp::{ratio_to_f64, HpReal};

pub trait Field: Clone + Debug + Num + FromPrimitive + std::ops::Neg<Output = Self> + Send + Sync {
    fn from_ratio(r: &BigRational) -> Self;

    /// Nearest `f64`, for diagnostics and coarse decisions only.
    fn to_f64_lossy(&self) -> f64;

    fn abs_val(&self) -> Self;

    fn from_int(n: i64) -> Self {
        <Self as FromPrimitive>::from_i64(n).expect("integers embed in every field")
    }

    /// `self^n` by repeated squaring.
    fn pow_u(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            n >>= 1;
            if n > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// `1 / (n^k)` for a positive integer `n`.
    fn inv_int_pow(n: u64, k: u32) -> Self {
        Self::one() / Self::from_int(n as i64).pow_u(k)
    }
}

pub trait Real: Field {
    fn ln(&self) -> Self;
    fn exp(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn pi() -> Self;

    fn powf(&self, e: &Self) -> Self {
        (e.clone() * self.ln()).exp()
    }
}

impl Field for f64 {
    fn from_ratio(r: &BigRational) -> Self {
        ratio_to_f64(r)
    }
    fn to_f64_lossy(&self) -> f64 {
        *self
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
}

impl Real for f64 {
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn powf(&self, e: &Self) -> Self {
        f64::powf(*self, *e)
    }
}

impl Field for BigRational {
    fn from_ratio(r: &BigRational) -> Self {
        r.clone()
    }
    fn to_f64_lossy(&self) -> f64 {
        ratio_to_f64(self)
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for HpReal {
    fn from_ratio(r: &BigRational) -> Self {
        HpReal::from_ratio(r)
    }
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64()
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn from_int(n: i64) -> Self {
        HpReal::from_i64(n)
    }
    fn pow_u(&self, n: u32) -> Self {
        self.powi(n as i64)
    }
}

impl Real for HpReal {
    fn ln(&self) -> Self {
        HpReal::ln(self)
    }
    fn exp(&self) -> Self {
        HpReal::exp(self)
    }
    fn sqrt(&self) -> Self {
        HpReal::sqrt(self)
    }
    fn pi() -> Self {
        HpReal::pi()
    }
    fn powf(&self, e: &Self) -> Self {
        HpReal::powf(self, e)
    }
}

/// Convenience: a rational from a numerator and denominator.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn ratio_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// True if `r` is an integer `<= 0`.
pub fn is_nonpositive_integer(r: &BigRational) -> bool {
    r.is_integer() && !r.is_positive()
}

/// The integer value of `r` if it is one and fits in `i64`.
pub fn ratio_as_i64(r: &BigRational) -> Option<i64> {
    if r.is_integer() {
        num_traits::ToPrimitive::to_i64(r.numer())
    } else {
        None
    }
}
