//! Iterated averaging of partial sums of alternating series.

use super::scalar::Field;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Accelerated<F> {
    pub value: F,
    /// Magnitude of the difference to the extrapolation that omits the last
    /// partial sum, doubled.
    pub estimate: f64,
}

/// Repeatedly replaces the sequence by the means of neighbouring entries
/// until a single value is left.
///
/// For an alternating series whose terms have eventually monotone, smooth
/// magnitude the error shrinks geometrically with each extra partial sum, so
/// twice the change caused by the final entry bounds the remaining error.
pub fn accelerate_alternating<F: Field>(partial_sums: &[F]) -> Result<Accelerated<F>> {
    if partial_sums.len() < 4 {
        return Err(Error::Arity(format!(
            "averaging needs at least 4 partial sums, got {}",
            partial_sums.len()
        )));
    }
    let half = F::one() / F::from_int(2);
    let mut row = partial_sums.to_vec();
    // The left edge of the averaging triangle only depends on a prefix of the
    // input, so the entry just above the apex is the extrapolation of all but
    // the last partial sum.
    let mut previous = row[0].clone();
    while row.len() > 1 {
        previous = row[0].clone();
        row = row.windows(2).map(|w| (w[0].clone() + w[1].clone()) * half.clone()).collect();
    }
    let value = row.pop().expect("non-empty");
    let estimate = 2.0 * (value.clone() - previous).abs_val().to_f64_lossy();
    Ok(Accelerated { value, estimate })
}
