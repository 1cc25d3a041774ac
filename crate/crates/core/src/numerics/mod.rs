//! Arbitrary-precision scalars and the numerical building blocks used by the
//! series evaluators: gamma, zeta tails, finite-difference derivatives,
//! alternating-series acceleration and asymptotic expansions.

pub mod accel;
pub mod asym;
pub mod bernoulli;
pub mod context;
pub mod diff;
pub mod gamma;
pub mod hp;
pub mod scalar;
pub mod tails;
pub mod tseries;

pub use accel::{accelerate_alternating, Accelerated};
pub use context::{PrecisionContext, PrecisionGuard};
pub use diff::{derivative_at, derivative_error_bound};
pub use gamma::gamma;
pub use hp::HpReal;
pub use scalar::{Field, Real};
pub use tails::zeta_tail;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Parses a decimal literal (`3`, `-0.25`, `1.5e-3`, `+2E4`) exactly.
pub fn parse_decimal(s: &str) -> Result<BigRational> {
    let err = || Error::Parse(format!("`{s}` is not a decimal number"));
    let t = s.trim();
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| err())?),
        None => (t, 0),
    };
    let (neg, body) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = match body.find('.') {
        Some(i) => (&body[..i], &body[i + 1..]),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| err())? };
    if neg {
        num = -num;
    }
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(num * ten.pow(scale as u32))
    } else {
        BigRational::new(num, ten.pow((-scale) as u32))
    };
    Ok(value)
}
