//! Plain truncated summation with doubling cutoffs, in `f64`.
//!
//! These are the baseline strategies the benchmark compares: the bare
//! partial sum, the partial sum with a first-order tail, and iterated
//! averaging for alternating outer sums. The high-precision evaluators in
//! the parent module do not use them.

use super::Strategy;
use crate::error::{Error, Result};
use crate::indices::Index;
use crate::numerics::accelerate_alternating;

/// Starting cutoff for the direct and tail-corrected strategies.
pub const START_TERMS: u64 = 10_000;
/// Starting cutoff for averaging, which needs far fewer terms.
pub const START_TERMS_AVERAGED: u64 = 16;

#[derive(Clone, Debug)]
pub struct TruncationRun {
    pub strategy: Strategy,
    pub value: f64,
    pub terms: u64,
    /// Change between the last two cutoffs.
    pub last_change: f64,
    /// Whether the change fell below `tol / 2` before the term cap.
    pub settled: bool,
}

/// `Σ_{m>M} m^{-s}` by Euler–Maclaurin with three correction terms.
pub fn zeta_tail_f64(s: f64, m: u64) -> f64 {
    let x = m as f64;
    let p = x.powf(-s);
    x * p / (s - 1.0) - p / 2.0 + s * p / x / 12.0 - s * (s + 1.0) * (s + 2.0) * p / x.powi(3) / 720.0
}

/// `∫_{M<x₁<…<x_i} Π x_j^{-a_j} dx`, which is
/// `M^{i-Σa} / Π_j (a_j+…+a_i - (i-j+1))`; needs every suffix weight to
/// exceed its length, which holds when the last part is at least 2.
pub fn star_tail_integral(parts: &[u32], m: u64) -> f64 {
    let mut denom = 1.0;
    let mut suffix = 0.0;
    for (len, &a) in parts.iter().rev().enumerate() {
        suffix += a as f64;
        denom *= suffix - (len + 1) as f64;
    }
    (m as f64).powf(parts.len() as f64 - suffix) / denom
}

/// Runs `value_at(M)` for `M = start, 2·start, …` until two successive
/// values differ by less than `tol/2` or the next cutoff exceeds `cap`.
fn doubling(strategy: Strategy, start: u64, tol: f64, cap: u64, mut value_at: impl FnMut(u64) -> f64) -> TruncationRun {
    let mut m = start.min(cap);
    let mut prev = value_at(m);
    let mut change = f64::INFINITY;
    while 2 * m <= cap {
        m *= 2;
        let v = value_at(m);
        change = (v - prev).abs();
        prev = v;
        if change < tol / 2.0 {
            return TruncationRun { strategy, value: v, terms: m, last_change: change, settled: true };
        }
    }
    TruncationRun { strategy, value: prev, terms: m, last_change: change, settled: false }
}

/// Star recursion `f_i(m) = f_i(m-1) + f_{i-1}(m)/m^{k_i}`, advanced lazily.
struct StarRecursion {
    parts: Vec<u32>,
    f: Vec<f64>,
    m: u64,
}

impl StarRecursion {
    fn new(parts: &[u32]) -> Self {
        let mut f = vec![0.0; parts.len() + 1];
        f[0] = 1.0;
        StarRecursion { parts: parts.to_vec(), f, m: 0 }
    }

    /// Advances to `m`, calling `outer(m, term)` with each new outermost term.
    fn advance_to(&mut self, m: u64, mut outer: impl FnMut(u64, f64)) {
        let n = self.parts.len();
        while self.m < m {
            self.m += 1;
            let x = self.m as f64;
            for i in 1..=n {
                let t = self.f[i - 1] * x.powi(-(self.parts[i - 1] as i32));
                if i == n {
                    outer(self.m, t);
                }
                self.f[i] += t;
            }
        }
    }
}

/// `ζ⋆(ix)` by the truncated star recursion.
pub fn mzsv_truncated(ix: &Index, strategy: Strategy, tol: f64, cap: u64) -> Result<TruncationRun> {
    if ix.last() < 2 {
        return Err(Error::domain(format!("inadmissible index {ix}")));
    }
    let mut rec = StarRecursion::new(ix.parts());
    let n = ix.depth();
    let k_n = ix.last() as f64;
    match strategy {
        Strategy::Direct => Ok(doubling(strategy, START_TERMS, tol, cap, |m| {
            rec.advance_to(m, |_, _| {});
            rec.f[n]
        })),
        Strategy::TailCorrected => Ok(doubling(strategy, START_TERMS, tol, cap, |m| {
            rec.advance_to(m, |_, _| {});
            // Split by how many outer variables exceed M; the deepest tails
            // are replaced by their integrals.
            let mut v = rec.f[n] + rec.f[n - 1] * zeta_tail_f64(k_n, m);
            for i in 2..=n {
                v += rec.f[n - i] * star_tail_integral(&ix.parts()[n - i..], m);
            }
            v
        })),
        other => Err(Error::domain(format!("strategy {other} does not apply to non-alternating sums"))),
    }
}

/// Strategies for an alternating series given by its partial sums.
fn alternating_truncated(
    strategy: Strategy,
    tol: f64,
    cap: u64,
    mut extend: impl FnMut(u64, &mut Vec<f64>, &mut Vec<f64>),
) -> Result<TruncationRun> {
    // partial[j] = sum of the first j+1 terms, terms[j] = term j.
    let mut partial = Vec::new();
    let mut terms = Vec::new();
    match strategy {
        Strategy::Direct => Ok(doubling(strategy, START_TERMS, tol, cap, |m| {
            extend(m, &mut partial, &mut terms);
            partial[m as usize - 1]
        })),
        Strategy::TailCorrected => Ok(doubling(strategy, START_TERMS, tol, cap, |m| {
            // Half the first omitted term.
            extend(m + 1, &mut partial, &mut terms);
            partial[m as usize - 1] + terms[m as usize] / 2.0
        })),
        Strategy::AlternatingAccelerated => Ok(doubling(strategy, START_TERMS_AVERAGED, tol, cap, |m| {
            extend(m, &mut partial, &mut terms);
            accelerate_alternating(&partial[..m as usize]).map(|a| a.value).unwrap_or(f64::NAN)
        })),
        other => Err(Error::domain(format!("strategy {other} does not apply to alternating sums"))),
    }
}

/// `ζ⋆₋(ix)` by the truncated star recursion over the outer variable.
pub fn alt_mzsv_truncated(ix: &Index, strategy: Strategy, tol: f64, cap: u64) -> Result<TruncationRun> {
    let mut rec = StarRecursion::new(ix.parts());
    alternating_truncated(strategy, tol, cap, |m, partial, terms| {
        rec.advance_to(m, |j, t| {
            let t = if j % 2 == 1 { t } else { -t };
            let prev = partial.last().copied().unwrap_or(0.0);
            partial.push(prev + t);
            terms.push(t);
        });
    })
}

/// `Σ_{m>=0} (-1)^m/(m+α)^k` by truncation.
pub fn alternating_power_truncated(alpha: f64, k: u32, strategy: Strategy, tol: f64, cap: u64) -> Result<TruncationRun> {
    if alpha <= 0.0 {
        return Err(Error::domain("alternating power sum needs α > 0"));
    }
    alternating_truncated(strategy, tol, cap, |m, partial, terms| {
        while (terms.len() as u64) < m {
            let j = terms.len() as u64;
            let t = (j as f64 + alpha).powi(-(k as i32));
            let t = if j % 2 == 0 { t } else { -t };
            let prev = partial.last().copied().unwrap_or(0.0);
            partial.push(prev + t);
            terms.push(t);
        }
    })
}
