//! Generalized hypergeometric series at `z = ±1`, the nested-sum sides of
//! the two very-well-poised identities, and their one-parameter
//! specializations.
//!
//! Parameters are exact rationals so pole and sign conditions are decided
//! without rounding; decimal input such as `0.7` converts exactly.

pub mod conditions;
pub mod specialized;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use conditions::{kr_conditions_i, kr_conditions_ii, ConditionEntry, ConditionReport};
pub use specialized::{specialized_lhs, specialized_rhs, Case};

use crate::error::{Error, Result};
use crate::numerics::gamma::{gamma_rational, recip_gamma_rational};
use crate::numerics::scalar::{is_nonpositive_integer, ratio_as_i64};
use crate::numerics::{HpReal, PrecisionContext};
use crate::series::{sum_alternating, EvalDiagnostics, Evaluated, Level, NestedSum, Strategy};

/// Parameters `s, a, b₁…b_{s+1}, c₁…c_{s+1}` of the `-1` identity.
#[derive(Clone, Debug, PartialEq)]
pub struct KrParamsI {
    pub s: u32,
    pub a: BigRational,
    pub b: Vec<BigRational>,
    pub c: Vec<BigRational>,
}

impl KrParamsI {
    pub fn new(s: u32, a: BigRational, b: Vec<BigRational>, c: Vec<BigRational>) -> Result<Self> {
        if s == 0 {
            return Err(Error::domain("s must be positive"));
        }
        if b.len() != s as usize + 1 || c.len() != s as usize + 1 {
            return Err(Error::Arity(format!("s = {s} needs {} values of b and of c", s + 1)));
        }
        Ok(KrParamsI { s, a, b, c })
    }

    /// Upper and lower parameters of the `₂ₛ₊₄F₂ₛ₊₃` series.
    pub fn series_parameters(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        let two = BigRational::from_integer(2.into());
        let one = BigRational::one();
        let mut upper = vec![self.a.clone(), &self.a / &two + &one];
        let mut lower = vec![&self.a / &two];
        for (b, c) in self.b.iter().zip(&self.c) {
            upper.push(b.clone());
            upper.push(c.clone());
            lower.push(&one + &self.a - b);
            lower.push(&one + &self.a - c);
        }
        (upper, lower)
    }
}

/// Parameters `s, a, c₀, b₁…b_s, c₁…c_s` of the `+1` identity.
#[derive(Clone, Debug, PartialEq)]
pub struct KrParamsII {
    pub s: u32,
    pub a: BigRational,
    pub c0: BigRational,
    pub b: Vec<BigRational>,
    pub c: Vec<BigRational>,
}

impl KrParamsII {
    pub fn new(s: u32, a: BigRational, c0: BigRational, b: Vec<BigRational>, c: Vec<BigRational>) -> Result<Self> {
        if s == 0 {
            return Err(Error::domain("s must be positive"));
        }
        if b.len() != s as usize || c.len() != s as usize {
            return Err(Error::Arity(format!("s = {s} needs {s} values of b and of c")));
        }
        Ok(KrParamsII { s, a, c0, b, c })
    }

    /// Upper and lower parameters of the `₂ₛ₊₃F₂ₛ₊₂` series.
    pub fn series_parameters(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        let two = BigRational::from_integer(2.into());
        let one = BigRational::one();
        let mut upper = vec![self.a.clone(), &self.a / &two + &one, self.c0.clone()];
        let mut lower = vec![&self.a / &two, &one + &self.a - &self.c0];
        for (b, c) in self.b.iter().zip(&self.c) {
            upper.push(b.clone());
            upper.push(c.clone());
            lower.push(&one + &self.a - b);
            lower.push(&one + &self.a - c);
        }
        (upper, lower)
    }
}

fn hp(r: &BigRational) -> HpReal {
    HpReal::from_ratio(r)
}

fn hps(v: &[BigRational]) -> Vec<HpReal> {
    v.iter().map(hp).collect()
}

fn sum(v: &[BigRational]) -> BigRational {
    v.iter().fold(BigRational::zero(), |acc, x| acc + x)
}

fn check_pfq_shape(upper: &[BigRational], lower: &[BigRational], z: i32) -> Result<()> {
    if z != 1 && z != -1 {
        return Err(Error::domain(format!("z must be +1 or -1, got {z}")));
    }
    if upper.len() != lower.len() + 1 {
        return Err(Error::Arity(format!(
            "need one more upper than lower parameter, got {} and {}",
            upper.len(),
            lower.len()
        )));
    }
    if let Some(b) = lower.iter().find(|b| is_nonpositive_integer(b)) {
        return Err(Error::domain(format!("lower parameter {b} is a non-positive integer")));
    }
    Ok(())
}

/// Number of terms of a terminating series, if an upper parameter is a
/// non-positive integer.
fn terminating_length(upper: &[BigRational]) -> Option<u64> {
    upper
        .iter()
        .filter(|a| is_nonpositive_integer(a))
        .filter_map(|a| ratio_as_i64(a))
        .map(|n| (-n) as u64 + 1)
        .min()
}

/// `ₚ₊₁Fₚ(upper; lower; z)` for `z = ±1`.
pub fn pfq(upper: &[BigRational], lower: &[BigRational], z: i32, ctx: &PrecisionContext) -> Result<Evaluated> {
    check_pfq_shape(upper, lower, z)?;
    let _g = ctx.enter();
    if let Some(len) = terminating_length(upper) {
        let mut term = BigRational::one();
        let mut total = BigRational::zero();
        let zq = BigRational::from_integer(z.into());
        for m in 0..len {
            total += &term;
            let mm = BigRational::from_integer(m.into());
            for a in upper {
                term *= &mm + a;
            }
            for b in lower {
                term /= &mm + b;
            }
            term = term * &zq / (&mm + BigRational::one());
        }
        return Ok(Evaluated { value: hp(&total), diagnostics: EvalDiagnostics::exact(len, ctx) });
    }
    // Absolute convergence at z = 1 needs a positive margin; at z = -1 the
    // terms only have to vanish, which needs a margin above -1.
    let margin = sum(lower) - sum(upper);
    let bound = if z == 1 { BigRational::zero() } else { -BigRational::one() };
    if margin <= bound {
        return Err(Error::convergence(format!(
            "series at z = {z} needs sum(lower) - sum(upper) > {bound}; the margin is {}",
            crate::numerics::hp::ratio_to_f64(&margin)
        )));
    }
    let mut den = hps(lower);
    den.push(HpReal::from_i64(1));
    let level = Level { num: hps(upper), den, first: HpReal::from_i64(1), alternating: z == -1 };
    let out = NestedSum { levels: vec![level], start: 0, strict: false }.evaluate(ctx)?;
    Ok(Evaluated {
        value: out.value,
        diagnostics: EvalDiagnostics {
            terms_used: out.terms,
            tail_correction: out.tail,
            error_estimate: 10f64.powf(out.error_log10),
            strategy: Strategy::AsymptoticTail,
        },
    })
}

/// The `z = -1` series by iterated averaging of its partial sums; an
/// independent route used for cross-checks.
pub fn pfq_averaged(upper: &[BigRational], lower: &[BigRational], ctx: &PrecisionContext) -> Result<Evaluated> {
    check_pfq_shape(upper, lower, -1)?;
    let _g = ctx.enter();
    let up = hps(upper);
    let low = hps(lower);
    let mut term = HpReal::from_i64(1);
    sum_alternating(
        |m| {
            let current = term.clone();
            let mm = HpReal::from_u64(m);
            let mut num = HpReal::from_i64(-1);
            let mut den = &mm + HpReal::from_i64(1);
            for a in &up {
                num *= &mm + a;
            }
            for b in &low {
                den *= &mm + b;
            }
            term = &term * num / den;
            Ok(current)
        },
        ctx,
    )
}

/// `Γ(1+a-b)Γ(1+a-c) / (Γ(1+a)Γ(1+a-b-c))`.
fn gamma_prefactor(a: &BigRational, b: &BigRational, c: &BigRational, ctx: &PrecisionContext) -> Result<HpReal> {
    let one = BigRational::one();
    let a1 = &one + a;
    let num = gamma_rational(&(&a1 - b), ctx)? * gamma_rational(&(&a1 - c), ctx)?;
    Ok(num * recip_gamma_rational(&a1, ctx)? * recip_gamma_rational(&(&a1 - b - c), ctx)?)
}

/// One variable `m_j` of the nested side: a hypergeometric weight in `m_j`
/// and, for `j >= 1`, the kernel `(e)_{l}/l!` in `l = m_j - m_{j-1}`.
struct NestedLevel {
    num: Vec<BigRational>,
    den: Vec<BigRational>,
    kernel: Option<BigRational>,
}

/// Nested side `Σ_{0<=m₁<=…<=m_s} Π_j w_j(m_j) K_j(m_j - m_{j-1})`.
fn nested_side(levels: &[NestedLevel], prefactor: HpReal, ctx: &PrecisionContext) -> Result<Evaluated> {
    let fast = levels.iter().all(|l| l.kernel.as_ref().map_or(true, |e| e.is_one()));
    let engine_levels: Vec<Level<HpReal>> = levels
        .iter()
        .map(|l| Level { num: hps(&l.num), den: hps(&l.den), first: HpReal::from_i64(1), alternating: false })
        .collect();
    let (value, terms, tail, error) = if fast {
        let out = NestedSum { levels: engine_levels, start: 0, strict: false }.evaluate(ctx)?;
        (out.value, out.terms, out.tail, 10f64.powf(out.error_log10))
    } else {
        box_truncation(levels, ctx)?
    };
    let scale = prefactor.abs().to_f64().max(1.0);
    Ok(Evaluated {
        value: &prefactor * value,
        diagnostics: EvalDiagnostics {
            terms_used: terms,
            tail_correction: &prefactor * tail,
            error_estimate: error * scale,
            strategy: if fast { Strategy::AsymptoticTail } else { Strategy::Direct },
        },
    })
}

/// `v(0..=n)` with `v(0) = 1` and `v(m+1)/v(m) = Π(m+num)/Π(m+den)`.
fn hyper_terms(num: &[HpReal], den: &[HpReal], n: usize) -> Vec<HpReal> {
    let mut out = Vec::with_capacity(n + 1);
    let mut v = HpReal::from_i64(1);
    out.push(v.clone());
    for m in 0..n {
        let mm = HpReal::from_u64(m as u64);
        let mut ratio = HpReal::from_i64(1);
        for a in num {
            ratio *= &mm + a;
        }
        for b in den {
            ratio /= &mm + b;
        }
        v = v * ratio;
        out.push(v.clone());
    }
    out
}

/// All `m_j <= L`, with `L` doubling until two boxes agree to the tolerance.
fn box_truncation(levels: &[NestedLevel], ctx: &PrecisionContext) -> Result<(HpReal, u64, HpReal, f64)> {
    let _g = ctx.enter();
    let box_sum = |l: usize| -> HpReal {
        let weights: Vec<Vec<HpReal>> = levels.iter().map(|lv| hyper_terms(&hps(&lv.num), &hps(&lv.den), l)).collect();
        let kernels: Vec<Option<Vec<HpReal>>> = levels
            .iter()
            .map(|lv| lv.kernel.as_ref().map(|e| hyper_terms(&[hp(e)], &[HpReal::from_i64(1)], l)))
            .collect();
        // u[m] = Σ over the outer variables given m_j = m.
        let depth = levels.len();
        let mut u: Vec<HpReal> = weights[depth - 1].clone();
        for j in (0..depth - 1).rev() {
            let kernel = kernels[j + 1].as_ref();
            u = (0..=l)
                .map(|m| {
                    let mut acc = HpReal::zero_at(ctx.working_bits());
                    for (m2, outer) in u.iter().enumerate().skip(m) {
                        match kernel {
                            Some(k) => acc += &k[m2 - m] * outer,
                            None => acc += outer,
                        }
                    }
                    &weights[j][m] * acc
                })
                .collect();
        }
        u.into_iter().fold(HpReal::zero_at(ctx.working_bits()), |acc, x| acc + x)
    };
    let tol = ctx.inner_tol();
    let mut l = 64usize;
    let mut prev = box_sum(l);
    let mut change = f64::INFINITY;
    while l < 2048 {
        l *= 2;
        let v = box_sum(l);
        change = (&v - &prev).abs().to_f64();
        if change < tol {
            let tail = &v - &prev;
            return Ok((v, l as u64, tail, change));
        }
        prev = v;
    }
    Err(Error::convergence(format!(
        "box truncation did not settle: change {change:e} at box size {l}, tolerance {tol:e}"
    )))
}

/// Nested side of the `-1` identity.
pub fn kr_rhs_i(p: &KrParamsI, ctx: &PrecisionContext) -> Result<Evaluated> {
    let report = kr_conditions_i(p);
    if !report.overall {
        return Err(Error::Precondition(Box::new(report)));
    }
    let _g = ctx.enter();
    let one = BigRational::one();
    let a1 = &one + &p.a;
    let s = p.s as usize;
    let e = |j: usize| &a1 - &p.b[j] - &p.c[j];
    let levels: Vec<NestedLevel> = (0..s)
        .map(|j| {
            let mut num = vec![p.b[j + 1].clone(), p.c[j + 1].clone()];
            let mut den = vec![&a1 - &p.b[j], &a1 - &p.c[j]];
            let kernel = if j == 0 {
                num.push(e(0));
                den.push(one.clone());
                None
            } else {
                Some(e(j))
            };
            NestedLevel { num, den, kernel }
        })
        .collect();
    let prefactor = gamma_prefactor(&p.a, &p.b[s], &p.c[s], ctx)?;
    nested_side(&levels, prefactor, ctx)
}

/// Nested side of the `+1` identity.
pub fn kr_rhs_ii(p: &KrParamsII, ctx: &PrecisionContext) -> Result<Evaluated> {
    let report = kr_conditions_ii(p);
    if !report.overall {
        return Err(Error::Precondition(Box::new(report)));
    }
    let _g = ctx.enter();
    let one = BigRational::one();
    let a1 = &one + &p.a;
    let s = p.s as usize;
    let levels: Vec<NestedLevel> = (0..s)
        .map(|j| {
            if j == 0 {
                NestedLevel {
                    num: vec![p.b[0].clone(), p.c[0].clone()],
                    den: vec![one.clone(), &a1 - &p.c0],
                    kernel: None,
                }
            } else {
                NestedLevel {
                    num: vec![p.b[j].clone(), p.c[j].clone()],
                    den: vec![&a1 - &p.b[j - 1], &a1 - &p.c[j - 1]],
                    kernel: Some(&a1 - &p.b[j - 1] - &p.c[j - 1]),
                }
            }
        })
        .collect();
    let prefactor = gamma_prefactor(&p.a, &p.b[s - 1], &p.c[s - 1], ctx)?;
    nested_side(&levels, prefactor, ctx)
}

/// Series side of the `-1` identity.
pub fn kr_lhs_i(p: &KrParamsI, ctx: &PrecisionContext) -> Result<Evaluated> {
    let (upper, lower) = p.series_parameters();
    pfq(&upper, &lower, -1, ctx)
}

/// Series side of the `+1` identity.
pub fn kr_lhs_ii(p: &KrParamsII, ctx: &PrecisionContext) -> Result<Evaluated> {
    let (upper, lower) = p.series_parameters();
    pfq(&upper, &lower, 1, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::scalar::{ratio, ratio_int};

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| ratio_int(x)).collect()
    }

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    fn close(a: &HpReal, b: &HpReal, digits: f64) {
        let d = (a - b).abs().log10_abs();
        assert!(d < -digits, "{a:?} vs {b:?}: 1e{d}");
    }

    #[test]
    fn terminating_and_classical_values() {
        let ctx = ctx();
        let _g = ctx.enter();
        assert_eq!(pfq(&q(&[-2, 1]), &q(&[1]), -1, &ctx).unwrap().value.to_decimal_string(20), "4");
        assert_eq!(pfq(&q(&[-1, 1]), &q(&[2]), -1, &ctx).unwrap().value.to_decimal_string(20), "1.5");
        let ln2 = pfq(&q(&[1, 1]), &q(&[2]), -1, &ctx).unwrap().value;
        close(&ln2, &HpReal::from_i64(2).ln(), 32.0);
        // ₂F₁(1,1;3;1) = 2
        close(&pfq(&q(&[1, 1]), &q(&[3]), 1, &ctx).unwrap().value, &HpReal::from_i64(2), 32.0);
    }

    #[test]
    fn shape_and_margin_errors() {
        let ctx = ctx();
        assert!(matches!(pfq(&q(&[1, 1]), &q(&[2]), 1, &ctx), Err(Error::Convergence(_))));
        assert!(matches!(pfq(&q(&[1]), &q(&[2]), 1, &ctx), Err(Error::Arity(_))));
        assert!(matches!(pfq(&q(&[1, 1]), &q(&[0]), 1, &ctx), Err(Error::Domain(_))));
        assert!(matches!(pfq(&q(&[1, 1]), &q(&[3]), 2, &ctx), Err(Error::Domain(_))));
    }

    #[test]
    fn averaging_agrees_with_engine() {
        let ctx = ctx();
        let _g = ctx.enter();
        let upper = vec![ratio(11, 5), ratio(21, 10), ratio(7, 10), ratio(7, 10), ratio(7, 10), ratio(7, 10)];
        let lower = vec![ratio(11, 10), ratio(5, 2), ratio(5, 2), ratio(5, 2), ratio(5, 2)];
        let a = pfq(&upper, &lower, -1, &ctx).unwrap().value;
        let b = pfq_averaged(&upper, &lower, &ctx).unwrap().value;
        close(&a, &b, 30.0);
    }

    #[test]
    fn nested_sides_match_series() {
        let ctx = ctx();
        let _g = ctx.enter();
        let p = KrParamsI::new(1, ratio_int(2), q(&[1, 1]), q(&[1, 1])).unwrap();
        let pi2_12 = HpReal::pi() * HpReal::pi() / HpReal::from_i64(12);
        close(&kr_rhs_i(&p, &ctx).unwrap().value, &pi2_12, 32.0);
        close(&kr_lhs_i(&p, &ctx).unwrap().value, &pi2_12, 32.0);
        let p = KrParamsII::new(2, ratio_int(2), ratio_int(1), q(&[1, 1]), q(&[1, 1])).unwrap();
        let zeta3 = crate::series::zeta_int(3, &ctx).unwrap().value;
        close(&kr_rhs_ii(&p, &ctx).unwrap().value, &zeta3, 32.0);
        close(&kr_lhs_ii(&p, &ctx).unwrap().value, &zeta3, 32.0);
    }

    #[test]
    fn failed_hypotheses_are_reported() {
        let ctx = ctx();
        let p = KrParamsI::new(1, ratio_int(0), q(&[1, 1]), q(&[1, 1])).unwrap();
        assert!(matches!(kr_rhs_i(&p, &ctx), Err(Error::Precondition(_))));
    }

    #[test]
    fn box_truncation_handles_general_kernels() {
        // s = 2 with e₂ = 1+a-b₂-c₂ != 1 forces the general path; the
        // series side gives the reference.
        let ctx = PrecisionContext::with_options(10, 5, 100_000_000, Some(1e-6)).unwrap();
        let _g = ctx.enter();
        let p = KrParamsI::new(2, ratio(5, 1), q(&[1, 1, 1]), vec![ratio_int(1), ratio(3, 2), ratio_int(1)]).unwrap();
        assert!(kr_conditions_i(&p).overall);
        let rhs = kr_rhs_i(&p, &ctx).unwrap();
        assert_eq!(rhs.diagnostics.strategy, Strategy::Direct);
        let lhs = kr_lhs_i(&p, &ctx).unwrap();
        assert!((rhs.value - lhs.value).abs().to_f64() < 1e-6);
    }
}
