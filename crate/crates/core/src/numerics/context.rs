//! Precision bookkeeping shared by every evaluator.
//!
//! A [`PrecisionContext`] fixes the number of requested decimal digits, the
//! guard digits used internally, a cap on summation lengths and the absolute
//! target tolerance. Entering a context sets the thread-local working
//! precision that generic constructors (`Zero`, `One`, `FromPrimitive`) of
//! [`HpReal`](super::HpReal) use.

use std::cell::Cell;

use crate::error::{Error, Result};

pub const DEFAULT_GUARD: u32 = 10;
pub const DEFAULT_MAX_TERMS: u64 = 100_000_000;
/// Digits used when comparing against reference values.
pub const ORACLE_DIGITS: u32 = 50;
/// Digits used for identity verification.
pub const VERIFY_DIGITS: u32 = 30;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

#[derive(Debug, Clone, PartialEq)]
pub struct PrecisionContext {
    pub digits: u32,
    pub guard: u32,
    pub max_terms: u64,
    pub tol: f64,
}

impl PrecisionContext {
    /// Context with default guard, term cap and `tol = 10^-digits`.
    pub fn new(digits: u32) -> Result<Self> {
        Self::with_options(digits, DEFAULT_GUARD, DEFAULT_MAX_TERMS, None)
    }

    pub fn with_options(digits: u32, guard: u32, max_terms: u64, tol: Option<f64>) -> Result<Self> {
        let ctx = PrecisionContext {
            digits,
            guard,
            max_terms,
            tol: tol.unwrap_or_else(|| pow10_neg(digits)),
        };
        ctx.validate()?;
        Ok(ctx)
    }

    pub fn with_tol(mut self, tol: f64) -> Result<Self> {
        self.tol = tol;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.digits < 10 {
            return Err(Error::Context(format!("digits must be at least 10, got {}", self.digits)));
        }
        if self.digits > 300 {
            return Err(Error::Context(format!("digits must be at most 300, got {}", self.digits)));
        }
        if self.guard < 5 {
            return Err(Error::Context(format!("guard must be at least 5, got {}", self.guard)));
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(Error::Context(format!("tol must be a positive finite number, got {}", self.tol)));
        }
        if self.max_terms < 1000 {
            return Err(Error::Context(format!("max_terms must be at least 1000, got {}", self.max_terms)));
        }
        Ok(())
    }

    /// Decimal digits carried internally.
    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Binary precision corresponding to [`working_digits`](Self::working_digits).
    pub fn working_bits(&self) -> usize {
        bits_for_digits(self.working_digits())
    }

    /// Absolute tolerance the internal loops aim for: tighter than `tol` by
    /// half the guard digits so that roundoff and truncation stay invisible.
    pub fn inner_tol(&self) -> f64 {
        (self.tol * 10f64.powi(-(self.guard as i32) / 2)).max(f64::MIN_POSITIVE)
    }

    /// `log10` of [`inner_tol`](Self::inner_tol), without underflow.
    pub fn inner_tol_log10(&self) -> f64 {
        self.tol.log10() - (self.guard / 2) as f64
    }

    /// A context with every digit count multiplied by `factor`.
    pub fn scaled(&self, factor: u32) -> Self {
        PrecisionContext {
            digits: self.digits * factor,
            guard: self.guard * factor,
            max_terms: self.max_terms,
            tol: pow10_neg(self.digits * factor).max(f64::MIN_POSITIVE),
        }
    }

    /// Make this context's working precision current on this thread until
    /// the returned guard is dropped.
    pub fn enter(&self) -> PrecisionGuard {
        PrecisionGuard::set(self.working_bits())
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext::new(VERIFY_DIGITS).expect("default context is valid")
    }
}

/// `10^-n` rounded correctly, so that it prints as `0.0…01`.
fn pow10_neg(n: u32) -> f64 {
    format!("1e-{n}").parse().expect("valid float literal")
}

pub fn bits_for_digits(digits: u32) -> usize {
    (digits as f64 * LOG2_10).ceil() as usize + 8
}

thread_local! {
    static WORKING_BITS: Cell<usize> = const { Cell::new(0) };
}

/// Working precision in bits on this thread.
pub fn working_bits() -> usize {
    let bits = WORKING_BITS.with(|b| b.get());
    if bits == 0 {
        bits_for_digits(VERIFY_DIGITS + DEFAULT_GUARD)
    } else {
        bits
    }
}

/// Restores the previous working precision when dropped.
#[must_use = "the precision reverts as soon as the guard is dropped"]
pub struct PrecisionGuard {
    previous: usize,
}

impl PrecisionGuard {
    pub fn set(bits: usize) -> Self {
        let previous = WORKING_BITS.with(|b| b.replace(bits));
        PrecisionGuard { previous }
    }
}

impl Drop for PrecisionGuard {
    fn drop(&mut self) {
        WORKING_BITS.with(|b| b.set(self.previous));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_digits() {
        assert!(PrecisionContext::new(9).is_err());
        assert!(PrecisionContext::with_options(20, 4, DEFAULT_MAX_TERMS, None).is_err());
        assert!(PrecisionContext::with_options(20, 10, 999, None).is_err());
        assert!(PrecisionContext::new(20).unwrap().with_tol(0.0).is_err());
    }

    #[test]
    fn guard_nests_and_restores() {
        let outer = PrecisionContext::new(20).unwrap();
        let inner = PrecisionContext::new(60).unwrap();
        let _g = outer.enter();
        assert_eq!(working_bits(), outer.working_bits());
        {
            let _h = inner.enter();
            assert_eq!(working_bits(), inner.working_bits());
        }
        assert_eq!(working_bits(), outer.working_bits());
    }
}
