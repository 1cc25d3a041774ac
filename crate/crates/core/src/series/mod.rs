//! Evaluators for ζ, η-type sums, multiple zeta values, multiple zeta-star
//! values, alternating star sums and the weighted product series.
//!
//! * `mzv` uses the convolution of iterated-integral words
//!   ([`convolution`]), `mzsv` sums `mzv` over all coarsenings.
//! * `alt_mzsv` runs the star recursion over the outer variable and
//!   accelerates the alternating outer sum by iterated averaging.
//! * [`nested`] evaluates nested hypergeometric sums with asymptotic tails;
//!   it backs `weighted_product_series` and gives an independent route to
//!   `mzsv` for cross-checks.
//! * [`truncation`] holds the plain truncated recursions (with and without a
//!   first-order tail) used by the benchmark harness.

pub mod convolution;
pub mod nested;
pub mod truncation;
pub mod weighted;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::indices::{admissible, coarsenings, Index};
use crate::numerics::{accelerate_alternating, zeta_tail, HpReal, PrecisionContext};

pub use nested::{Level, NestedOutcome, NestedSum};
pub use weighted::weighted_product_series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Plain truncated sum.
    Direct,
    /// Truncated sum plus a first-order analytic tail.
    TailCorrected,
    /// Iterated averaging of alternating partial sums.
    AlternatingAccelerated,
    /// Hölder convolution of iterated-integral words.
    Convolution,
    /// Exact head plus calibrated asymptotic tail.
    AsymptoticTail,
    /// Finite computation without truncation.
    Exact,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Strategy::Direct => "direct",
            Strategy::TailCorrected => "tail_corrected",
            Strategy::AlternatingAccelerated => "alternating_accelerated",
            Strategy::Convolution => "convolution",
            Strategy::AsymptoticTail => "asymptotic_tail",
            Strategy::Exact => "exact",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct EvalDiagnostics {
    pub terms_used: u64,
    pub tail_correction: HpReal,
    pub error_estimate: f64,
    pub strategy: Strategy,
}

impl EvalDiagnostics {
    pub fn exact(terms_used: u64, ctx: &PrecisionContext) -> Self {
        EvalDiagnostics {
            terms_used,
            tail_correction: HpReal::zero_at(ctx.working_bits()),
            error_estimate: 0.0,
            strategy: Strategy::Exact,
        }
    }

    /// Diagnostics of a sum of evaluations: terms add, errors add.
    pub fn combine(parts: &[&EvalDiagnostics], strategy: Strategy, ctx: &PrecisionContext) -> Self {
        let _g = ctx.enter();
        let mut tail = HpReal::zero_at(ctx.working_bits());
        for p in parts {
            tail += &p.tail_correction;
        }
        EvalDiagnostics {
            terms_used: parts.iter().map(|p| p.terms_used).sum(),
            tail_correction: tail,
            error_estimate: parts.iter().map(|p| p.error_estimate).sum(),
            strategy,
        }
    }
}

/// A value with the diagnostics of the computation that produced it.
#[derive(Clone, Debug)]
pub struct Evaluated {
    pub value: HpReal,
    pub diagnostics: EvalDiagnostics,
}

impl Evaluated {
    /// Error estimate that accounts for the working-precision roundoff.
    pub fn error_bound(&self, ctx: &PrecisionContext) -> f64 {
        let scale = self.value.log10_abs().max(0.0);
        self.diagnostics.error_estimate + 10f64.powf(scale - ctx.working_digits() as f64 + 3.0)
    }
}

/// Roundoff-level error estimate for a value computed without truncation.
fn roundoff(value: &HpReal, ctx: &PrecisionContext) -> f64 {
    let scale = value.log10_abs().max(0.0);
    10f64.powf(scale - ctx.working_digits() as f64 + 3.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Strict,
    AltStrict,
}

type CacheKey = (Kind, Vec<u32>, usize);

fn cache() -> &'static Mutex<HashMap<CacheKey, (HpReal, u64)>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, (HpReal, u64)>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoised convolution value; returns the value and the series length used.
fn cached_strict(kind: Kind, parts: &[u32], ctx: &PrecisionContext) -> (HpReal, u64) {
    let bits = ctx.working_bits();
    let key = (kind, parts.to_vec(), bits);
    if let Some(v) = cache().lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return v.clone();
    }
    let _g = ctx.enter();
    let eps = -(bits as f64) - 8.0;
    let value = match kind {
        Kind::Strict => convolution::mzv_strict::<HpReal>(parts, eps),
        Kind::AltStrict => convolution::alt_mzv_strict::<HpReal>(parts, eps),
    };
    let terms = (bits as u64 + 8) * (parts.iter().sum::<u32>() as u64 + 1);
    cache().lock().unwrap_or_else(|e| e.into_inner()).insert(key, (value.clone(), terms));
    (value, terms)
}

/// `ζ(k) = 1 + Σ_{m>1} m^{-k}` for real `k > 1`.
pub fn zeta(k: &HpReal, ctx: &PrecisionContext) -> Result<Evaluated> {
    let _g = ctx.enter();
    let tail = zeta_tail(k, 1, ctx)?;
    let value = HpReal::from_i64(1) + &tail;
    let error_estimate = roundoff(&value, ctx);
    Ok(Evaluated {
        value,
        diagnostics: EvalDiagnostics { terms_used: 1, tail_correction: tail, error_estimate, strategy: Strategy::TailCorrected },
    })
}

/// `ζ(k)` for an integer argument.
pub fn zeta_int(k: u32, ctx: &PrecisionContext) -> Result<Evaluated> {
    let _g = ctx.enter();
    zeta(&HpReal::from_i64(k as i64), ctx)
}

/// Sums an alternating series given term by term, extending the number of
/// partial sums until the averaging estimate reaches the working tolerance.
pub fn sum_alternating<T>(mut next_term: T, ctx: &PrecisionContext) -> Result<Evaluated>
where
    T: FnMut(u64) -> Result<HpReal>,
{
    let _g = ctx.enter();
    let target = 10f64.powf(ctx.inner_tol_log10());
    let mut n_target = (3.5 * ctx.working_digits() as f64).ceil() as u64 + 32;
    let mut partial = Vec::new();
    let mut acc = HpReal::zero_at(ctx.working_bits());
    let mut last_estimate = f64::INFINITY;
    for _ in 0..4 {
        while (partial.len() as u64) < n_target {
            acc += next_term(partial.len() as u64)?;
            partial.push(acc.clone());
        }
        let a = accelerate_alternating(&partial)?;
        if a.estimate <= target.max(roundoff(&a.value, ctx)) {
            let tail = &a.value - &acc;
            return Ok(Evaluated {
                diagnostics: EvalDiagnostics {
                    terms_used: partial.len() as u64,
                    tail_correction: tail,
                    error_estimate: a.estimate,
                    strategy: Strategy::AlternatingAccelerated,
                },
                value: a.value,
            });
        }
        last_estimate = a.estimate;
        n_target *= 2;
        if n_target > ctx.max_terms {
            break;
        }
    }
    Err(Error::convergence(format!(
        "alternating series did not settle: averaging estimate {last_estimate:e} after {} terms",
        partial.len()
    )))
}

/// `Σ_{m>=0} (-1)^m / (m+1)^k`.
pub fn eta_shifted(k: u32, ctx: &PrecisionContext) -> Result<Evaluated> {
    if k == 0 {
        return Err(Error::domain("eta_shifted requires k >= 1"));
    }
    sum_alternating(
        |m| {
            let t = HpReal::from_u64(m + 1).powi(k as i64).recip();
            Ok(if m % 2 == 0 { t } else { -t })
        },
        ctx,
    )
}

fn check_admissible(ix: &Index) -> Result<()> {
    if !admissible(ix, false) {
        return Err(Error::domain(format!("inadmissible index {ix}: the last part must be at least 2")));
    }
    Ok(())
}

/// `ζ(k₁,…,kₙ) = Σ_{0<m₁<…<mₙ} Π mᵢ^{-kᵢ}`.
pub fn mzv(ix: &Index, ctx: &PrecisionContext) -> Result<Evaluated> {
    check_admissible(ix)?;
    let _g = ctx.enter();
    let (value, terms) = cached_strict(Kind::Strict, ix.parts(), ctx);
    let error_estimate = roundoff(&value, ctx);
    Ok(Evaluated {
        diagnostics: EvalDiagnostics {
            terms_used: terms,
            tail_correction: HpReal::zero_at(ctx.working_bits()),
            error_estimate,
            strategy: Strategy::Convolution,
        },
        value,
    })
}

/// `ζ⋆(k₁,…,kₙ) = Σ_{0<m₁≤…≤mₙ} Π mᵢ^{-kᵢ}`, as the sum of `ζ` over all
/// coarsenings of the index.
pub fn mzsv(ix: &Index, ctx: &PrecisionContext) -> Result<Evaluated> {
    check_admissible(ix)?;
    let _g = ctx.enter();
    let mut value = HpReal::zero_at(ctx.working_bits());
    let mut terms = 0;
    for c in coarsenings(ix) {
        let (v, t) = cached_strict(Kind::Strict, c.parts(), ctx);
        value += v;
        terms += t;
    }
    let error_estimate = roundoff(&value, ctx) * (1u64 << (ix.depth() - 1)) as f64;
    Ok(Evaluated {
        diagnostics: EvalDiagnostics {
            terms_used: terms,
            tail_correction: HpReal::zero_at(ctx.working_bits()),
            error_estimate,
            strategy: Strategy::Convolution,
        },
        value,
    })
}

/// `ζ⋆₋(k₁,…,kₙ) = Σ_{0<m₁≤…≤mₙ} (-1)^{mₙ-1} Π mᵢ^{-kᵢ}`.
///
/// The inner star sums are advanced exactly with the outer variable and the
/// alternating outer series is accelerated by iterated averaging.
pub fn alt_mzsv(ix: &Index, ctx: &PrecisionContext) -> Result<Evaluated> {
    let _g = ctx.enter();
    let parts = ix.parts();
    let n = parts.len();
    // f[i] = inner star sum over the first i parts with variables <= m.
    let mut f = vec![HpReal::zero_at(ctx.working_bits()); n];
    f[0] = HpReal::from_i64(1);
    sum_alternating(
        |index| {
            let m = index + 1;
            let mm = HpReal::from_u64(m);
            for i in 1..n {
                let t = &f[i - 1] / mm.powi(parts[i - 1] as i64);
                f[i] += t;
            }
            let t = &f[n - 1] / mm.powi(parts[n - 1] as i64);
            Ok(if m % 2 == 1 { t } else { -t })
        },
        ctx,
    )
}

/// `ζ⋆₋` as the sum of strict alternating values over coarsenings; an
/// independent route used for cross-checks.
pub fn alt_mzsv_convolution(ix: &Index, ctx: &PrecisionContext) -> Result<Evaluated> {
    let _g = ctx.enter();
    let mut value = HpReal::zero_at(ctx.working_bits());
    let mut terms = 0;
    for c in coarsenings(ix) {
        let (v, t) = cached_strict(Kind::AltStrict, c.parts(), ctx);
        value += v;
        terms += t;
    }
    let error_estimate = roundoff(&value, ctx) * (1u64 << (ix.depth() - 1)) as f64;
    Ok(Evaluated {
        diagnostics: EvalDiagnostics {
            terms_used: terms,
            tail_correction: HpReal::zero_at(ctx.working_bits()),
            error_estimate,
            strategy: Strategy::Convolution,
        },
        value,
    })
}

/// Levels `m^{-k}` from `m = 1` for the nested engine.
fn power_levels(ix: &Index) -> Vec<Level<HpReal>> {
    ix.parts()
        .iter()
        .map(|&k| Level {
            num: vec![HpReal::from_i64(0); k as usize],
            den: vec![HpReal::from_i64(1); k as usize],
            first: HpReal::from_i64(1),
            alternating: false,
        })
        .collect()
}

fn nested_eval(ix: &Index, strict: bool, ctx: &PrecisionContext) -> Result<Evaluated> {
    check_admissible(ix)?;
    let _g = ctx.enter();
    let out = NestedSum { levels: power_levels(ix), start: 1, strict }.evaluate(ctx)?;
    Ok(Evaluated {
        diagnostics: EvalDiagnostics {
            terms_used: out.terms,
            tail_correction: out.tail,
            error_estimate: 10f64.powf(out.error_log10),
            strategy: Strategy::AsymptoticTail,
        },
        value: out.value,
    })
}

/// `ζ⋆` through the nested asymptotic-tail engine.
pub fn mzsv_nested(ix: &Index, ctx: &PrecisionContext) -> Result<Evaluated> {
    nested_eval(ix, false, ctx)
}

/// `ζ` through the nested asymptotic-tail engine.
pub fn mzv_nested(ix: &Index, ctx: &PrecisionContext) -> Result<Evaluated> {
    nested_eval(ix, true, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ix;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    fn assert_close(a: &HpReal, b: &HpReal, digits: f64) {
        let d = (a - b).abs().log10_abs();
        assert!(d < -digits, "{a:?} vs {b:?} differ by 1e{d}");
    }

    #[test]
    fn zeta_values() {
        let ctx = ctx();
        let _g = ctx.enter();
        let z2 = zeta_int(2, &ctx).unwrap().value;
        assert_eq!(z2.to_decimal_string(25), "1.644934066848226436472415");
        let z3 = zeta_int(3, &ctx).unwrap().value;
        assert_eq!(z3.to_decimal_string(25), "1.202056903159594285399738");
        assert!(zeta_int(1, &ctx).is_err());
    }

    #[test]
    fn eta_values() {
        let ctx = ctx();
        let _g = ctx.enter();
        assert_close(&eta_shifted(1, &ctx).unwrap().value, &HpReal::from_i64(2).ln(), 32.0);
        let z3 = zeta_int(3, &ctx).unwrap().value;
        let e3 = eta_shifted(3, &ctx).unwrap().value;
        assert_close(&e3, &(z3 * HpReal::from_i64(3) / HpReal::from_i64(4)), 32.0);
    }

    #[test]
    fn star_values() {
        let ctx = ctx();
        let _g = ctx.enter();
        let z3 = zeta_int(3, &ctx).unwrap().value;
        let s12 = mzsv(&ix![1, 2], &ctx).unwrap();
        assert_close(&s12.value, &(&z3 * HpReal::from_i64(2)), 32.0);
        assert_eq!(s12.value.to_decimal_string(30), "2.40411380631918857079947632302");
        let s12n = mzsv_nested(&ix![1, 2], &ctx).unwrap();
        assert_close(&s12.value, &s12n.value, 32.0);
        assert!(mzsv(&ix![2, 1], &ctx).is_err());
    }

    #[test]
    fn alternating_star_values() {
        let ctx = ctx();
        let _g = ctx.enter();
        assert_close(&alt_mzsv(&ix![1], &ctx).unwrap().value, &HpReal::from_i64(2).ln(), 32.0);
        for ix in [ix![1, 2], ix![2, 1], ix![1, 1, 2], ix![3, 1, 2]] {
            let a = alt_mzsv(&ix, &ctx).unwrap().value;
            let b = alt_mzsv_convolution(&ix, &ctx).unwrap().value;
            assert_close(&a, &b, 32.0);
        }
    }
}
