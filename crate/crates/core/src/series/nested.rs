//! Nested sums of hypergeometric weights evaluated to full working precision.
//!
//! The sum `Σ_{m₀ ≤ m₁ ≤ … ≤ m_{L-1}} Π wᵢ(mᵢ)` (or with strict `<`) is split
//! at a cutoff `N`. Every weight is a hypergeometric term, so for `m >= N` it
//! has a gamma-ratio asymptotic expansion, calibrated on its exact value at
//! `N`. Working from the outermost variable inwards, the expansion of each
//! partial tail is multiplied by the next weight and summed again
//! (Euler–Maclaurin, or Boole for alternating signs), which yields all
//! `Uᵢ(N)`. A backward recursion then adds the finitely many terms below `N`
//! exactly. The result is recomputed at `2N`; the change is the error
//! estimate.

use crate::error::{Error, Result};
use crate::numerics::asym::{gamma_ratio_expansion, AsymSeries, Coef};
use crate::numerics::{HpReal, PrecisionContext};

/// One summation variable: `v(m+1)/v(m) = Π (m+num) / Π (m+den)`,
/// `v(start) = first`, and the weight is `(-1)^m v(m)` when `alternating`.
#[derive(Clone, Debug)]
pub struct Level<C> {
    pub num: Vec<C>,
    pub den: Vec<C>,
    pub first: C,
    pub alternating: bool,
}

/// Levels innermost first; all variables start at `start`.
#[derive(Clone, Debug)]
pub struct NestedSum<C> {
    pub levels: Vec<Level<C>>,
    pub start: u64,
    pub strict: bool,
}

#[derive(Clone, Debug)]
pub struct NestedOutcome<C> {
    pub value: C,
    /// Final cutoff `N`.
    pub terms: u64,
    /// Asymptotic tail of the outermost variable at `N`.
    pub tail: C,
    /// `log10` of the estimated absolute error.
    pub error_log10: f64,
}

fn hp(n: i64) -> HpReal {
    HpReal::from_i64(n)
}

fn zero_of<C: Coef>(c: &C) -> C {
    c.clone() - c.clone()
}

fn is_zero<C: Coef>(c: &C) -> bool {
    c.magnitude_log10() == f64::NEG_INFINITY
}

impl<C: Coef> NestedSum<C> {
    /// Largest parameter magnitude, which sets the minimal cutoff.
    fn param_scale(&self) -> f64 {
        self.levels
            .iter()
            .flat_map(|l| l.num.iter().chain(&l.den))
            .map(|c| c.constant_part().to_f64().abs())
            .fold(0.0, f64::max)
    }

    /// `v_i(m)` for `m = start..=n`.
    fn weights(&self, n: u64) -> Result<Vec<Vec<C>>> {
        self.levels
            .iter()
            .map(|level| {
                assert_eq!(level.num.len(), level.den.len(), "weights must be balanced hypergeometric terms");
                let mut out = Vec::with_capacity((n - self.start + 1) as usize);
                let mut v = level.first.clone();
                out.push(v.clone());
                for m in self.start..n {
                    let mm = C::constant(hp(m as i64));
                    let mut ratio_num = C::constant(hp(1));
                    let mut ratio_den = C::constant(hp(1));
                    for (a, b) in level.num.iter().zip(&level.den) {
                        ratio_num = ratio_num * (mm.clone() + a.clone());
                        let d = mm.clone() + b.clone();
                        if d.constant_part().is_zero() {
                            return Err(Error::domain(format!("weight has a pole at m = {m}")));
                        }
                        ratio_den = ratio_den * d;
                    }
                    v = v * ratio_num * ratio_den.recip();
                    out.push(v.clone());
                }
                Ok(out)
            })
            .collect()
    }

    fn evaluate_at(&self, n: u64, k: usize) -> Result<(C, C)> {
        let depth = self.levels.len();
        let v = self.weights(n)?;
        let idx = |m: u64| (m - self.start) as usize;
        let x = hp(n as i64);
        // Outside-in asymptotic tails: U_i(x) = (-1)^{x·alt_i} A_i(x).
        let mut tails: Vec<Option<(AsymSeries<C>, bool)>> = vec![None; depth];
        let mut below: Option<(AsymSeries<C>, bool)> = None;
        for i in (0..depth).rev() {
            let level = &self.levels[i];
            let vn = &v[i][idx(n)];
            let shape = gamma_ratio_expansion(&level.num, &level.den, k);
            let (at_n, _) = shape.eval(&x);
            let scale = if is_zero(vn) { zero_of(vn) } else { vn.clone() * at_n.recip() };
            let mut summand = shape.scale(&scale);
            let mut alt = level.alternating;
            if let Some((outer, outer_alt)) = &below {
                let factor = if self.strict {
                    let shifted = outer.shift_one();
                    if *outer_alt {
                        shifted.scale(&C::constant(hp(-1)))
                    } else {
                        shifted
                    }
                } else {
                    outer.clone()
                };
                summand = summand.mul(&factor);
                alt ^= outer_alt;
            }
            let tail = if alt {
                summand.alternating_tail()
            } else {
                if summand.lambda.constant_part().to_f64() <= 1.0 && !is_zero(&scale) {
                    return Err(Error::convergence(format!(
                        "nested sum diverges: level {i} decays like m^-{}",
                        summand.lambda.constant_part().to_decimal_string(10)
                    )));
                }
                summand.tail()
            };
            tails[i] = Some((tail.clone(), alt));
            below = Some((tail, alt));
        }
        // U_i(N) from the expansions.
        let mut u: Vec<C> = tails
            .iter()
            .map(|t| {
                let (series, alt) = t.as_ref().expect("filled above");
                let (val, _) = series.eval(&x);
                if *alt && n % 2 == 1 {
                    -val
                } else {
                    val
                }
            })
            .collect();
        let outer_tail = u[depth - 1].clone();
        // Backward recursion for m < N.
        let mut next = u.clone(); // U_i(m+1)
        for m in (self.start..n).rev() {
            let mut cur = next.clone();
            for i in (0..depth).rev() {
                let level = &self.levels[i];
                let mut w = v[i][idx(m)].clone();
                if level.alternating && m % 2 == 1 {
                    w = -w;
                }
                let inner = if i + 1 == depth {
                    C::constant(hp(1))
                } else if self.strict {
                    next[i + 1].clone()
                } else {
                    cur[i + 1].clone()
                };
                cur[i] = w * inner + next[i].clone();
            }
            next = cur;
        }
        u.clone_from(&next);
        Ok((u[0].clone(), outer_tail))
    }

    /// Evaluates the sum to the context's working precision.
    pub fn evaluate(&self, ctx: &PrecisionContext) -> Result<NestedOutcome<C>> {
        if self.levels.is_empty() {
            return Err(Error::Arity("a nested sum needs at least one level".into()));
        }
        let _g = ctx.enter();
        let digits = ctx.working_digits() as f64;
        let k = (0.8 * digits).ceil() as usize + 10;
        let mut n = self.start + (2.0 * digits).max(16.0 + 4.0 * self.param_scale()).ceil() as u64;
        let target = ctx.inner_tol_log10();
        let (mut prev, _) = self.evaluate_at(n, k)?;
        let mut last_diff = f64::INFINITY;
        for _ in 0..6 {
            let n2 = 2 * n;
            if n2 - self.start > ctx.max_terms {
                break;
            }
            let (value, tail) = self.evaluate_at(n2, k)?;
            let diff = (value.clone() - prev.clone()).magnitude_log10();
            let floor = value.magnitude_log10().max(0.0) - digits + 2.0;
            if diff <= target.max(floor) {
                return Ok(NestedOutcome { value, terms: n2, tail, error_log10: diff.max(floor) });
            }
            last_diff = diff;
            prev = value;
            n = n2;
        }
        Err(Error::convergence(format!("nested sum did not settle: last change 1e{last_diff:.1} at cutoff {n}")))
    }
}

/// Shorthand for a level with plain-number parameters.
pub fn hp_level(num: Vec<HpReal>, den: Vec<HpReal>, first: HpReal, alternating: bool) -> Level<HpReal> {
    Level { num, den, first, alternating }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    /// Weight `m^{-k}` from `m = 1`.
    fn power_level(k: usize) -> Level<HpReal> {
        hp_level(vec![hp(0); k], vec![hp(1); k], hp(1), false)
    }

    #[test]
    fn single_zeta() {
        let ctx = ctx();
        let _g = ctx.enter();
        let sum = NestedSum { levels: vec![power_level(2)], start: 1, strict: false };
        let out = sum.evaluate(&ctx).unwrap();
        let zeta2 = HpReal::pi() * HpReal::pi() / hp(6);
        assert!((out.value - zeta2).abs().log10_abs() < -33.0);
    }

    #[test]
    fn double_sums() {
        let ctx = ctx();
        let _g = ctx.enter();
        // ζ⋆(1,2) = 2ζ(3) and ζ(1,2) = ζ(3)
        let zeta3 = NestedSum { levels: vec![power_level(3)], start: 1, strict: false }.evaluate(&ctx).unwrap().value;
        let star = NestedSum { levels: vec![power_level(1), power_level(2)], start: 1, strict: false };
        let strict = NestedSum { strict: true, ..star.clone() };
        let s = star.evaluate(&ctx).unwrap().value;
        let t = strict.evaluate(&ctx).unwrap().value;
        assert!((s - &zeta3 * hp(2)).abs().log10_abs() < -33.0);
        assert!((t - zeta3).abs().log10_abs() < -33.0);
    }

    #[test]
    fn alternating_outer_variable() {
        let ctx = ctx();
        let _g = ctx.enter();
        // Σ_{m>=1} (-1)^{m-1}/m = ln 2: alternating weight starts with sign -1 at m=1.
        let level = hp_level(vec![hp(0)], vec![hp(1)], hp(-1), true);
        let out = NestedSum { levels: vec![level], start: 1, strict: false }.evaluate(&ctx).unwrap();
        assert!((out.value - hp(2).ln()).abs().log10_abs() < -33.0);
    }

    #[test]
    fn divergent_sum_is_reported() {
        let ctx = ctx();
        let _g = ctx.enter();
        let sum = NestedSum { levels: vec![power_level(1)], start: 1, strict: false };
        assert!(matches!(sum.evaluate(&ctx), Err(Error::Convergence(_))));
    }
}
