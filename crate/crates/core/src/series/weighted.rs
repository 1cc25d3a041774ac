//! `2 Σ_{m>=0} σ(m) (m+1)^{-p} Σ_{i=0}^{r} S_m(1^{r-i}) S⋆_m(1^i)`.
//!
//! The inner sums have the generating function
//! `Σ_r t^r Σ_i S_m(1^{r-i}) S⋆_m(1^i) = (1+t)_m (m+1) / (1-t)_{m+1}`,
//! so the whole family in `r` is one hypergeometric sum with coefficients in
//! truncated power series in `t`. The nested engine evaluates it with an
//! exact head and an asymptotic tail; the answer is the `t^r` coefficient.

use super::nested::{Level, NestedSum};
use super::{EvalDiagnostics, Evaluated, Strategy};
use crate::error::{Error, Result};
use crate::finite_sums::OnesSums;
use crate::numerics::asym::Coef;
use crate::numerics::tseries::TSeries;
use crate::numerics::{HpReal, PrecisionContext};

fn hp(n: i64) -> HpReal {
    HpReal::from_i64(n)
}

/// Weighted product series; `alternating = false` uses `σ = 1, p = 2s-1`
/// (needs `s >= 2`), `alternating = true` uses `σ = (-1)^m, p = 2s`.
pub fn weighted_product_series(r: u32, s: u32, alternating: bool, ctx: &PrecisionContext) -> Result<Evaluated> {
    if s == 0 || (!alternating && s < 2) {
        return Err(Error::domain(format!(
            "weighted product series needs s >= {} (got s = {s})",
            if alternating { 1 } else { 2 }
        )));
    }
    let _g = ctx.enter();
    let p = if alternating { 2 * s } else { 2 * s - 1 } as usize;
    let order = r as usize;
    let t = |c: i64, slope: i64| TSeries::affine(hp(c), hp(slope), order);
    let scalar = |c: i64| TSeries::scalar(hp(c));
    // v(m) = (1+t)_m / ((1-t)_{m+1} (m+1)^{p-1})
    let mut num = vec![t(1, 1)];
    let mut den = vec![t(2, -1)];
    num.extend((1..p).map(|_| scalar(1)));
    den.extend((1..p).map(|_| scalar(2)));
    let level = Level { num, den, first: t(1, -1).recip(), alternating };
    let out = NestedSum { levels: vec![level], start: 0, strict: false }.evaluate(ctx)?;
    let value = out.value.coeff(order) * hp(2);
    let tail = out.tail.coeff(order) * hp(2);
    Ok(Evaluated {
        diagnostics: EvalDiagnostics {
            terms_used: out.terms,
            tail_correction: tail,
            error_estimate: 2.0 * 10f64.powf(out.error_log10),
            strategy: Strategy::AsymptoticTail,
        },
        value,
    })
}

/// The alternating case by direct term generation and iterated averaging;
/// an independent route for cross-checks.
pub fn weighted_product_series_averaged(r: u32, s: u32, ctx: &PrecisionContext) -> Result<Evaluated> {
    if s == 0 {
        return Err(Error::domain("weighted product series needs s >= 1"));
    }
    let _g = ctx.enter();
    let r = r as usize;
    let mut sums = OnesSums::<HpReal>::new(r);
    let out = super::sum_alternating(
        |m| {
            while sums.m() < m {
                sums.advance();
            }
            let mut inner = HpReal::zero_at(ctx.working_bits());
            for i in 0..=r {
                inner += sums.strict(r - i) * sums.star(i);
            }
            let t = inner / HpReal::from_u64(m + 1).powi(2 * s as i64) * hp(2);
            Ok(if m % 2 == 0 { t } else { -t })
        },
        ctx,
    )?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ix;
    use crate::series::{mzsv, zeta_int};

    fn close(a: &HpReal, b: &HpReal, digits: f64) {
        let d = (a - b).abs().log10_abs();
        assert!(d < -digits, "{a:?} vs {b:?}: 1e{d}");
    }

    #[test]
    fn first_members() {
        let ctx = PrecisionContext::new(30).unwrap();
        let _g = ctx.enter();
        let w = weighted_product_series(0, 2, false, &ctx).unwrap().value;
        close(&w, &(zeta_int(3, &ctx).unwrap().value * hp(2)), 32.0);
        let w = weighted_product_series(1, 2, false, &ctx).unwrap().value;
        close(&w, &mzsv(&ix![1, 1, 2], &ctx).unwrap().value, 32.0);
        let w = weighted_product_series(0, 1, true, &ctx).unwrap().value;
        close(&w, &zeta_int(2, &ctx).unwrap().value, 32.0);
        let w = weighted_product_series(1, 1, true, &ctx).unwrap().value;
        close(&w, &zeta_int(3, &ctx).unwrap().value, 32.0);
    }

    #[test]
    fn averaging_route_agrees() {
        let ctx = PrecisionContext::new(30).unwrap();
        let _g = ctx.enter();
        for (r, s) in [(0, 1), (2, 1), (3, 2)] {
            let a = weighted_product_series(r, s, true, &ctx).unwrap().value;
            let b = weighted_product_series_averaged(r, s, &ctx).unwrap().value;
            close(&a, &b, 32.0);
        }
    }

    #[test]
    fn rejects_small_s() {
        let ctx = PrecisionContext::new(30).unwrap();
        assert!(weighted_product_series(0, 1, false, &ctx).is_err());
        assert!(weighted_product_series(0, 0, true, &ctx).is_err());
    }
}
