//! The four one-parameter specializations: series sides and nested sides
//! at a real parameter `α`, and the parameter sets they come from.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{KrParamsI, KrParamsII};
use crate::error::{Error, Result};
use crate::numerics::gamma::gamma_rational;
use crate::numerics::scalar::{ratio, ratio_int};
use crate::numerics::{HpReal, PrecisionContext};
use crate::series::{sum_alternating, EvalDiagnostics, Evaluated, Level, NestedSum, Strategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    A1,
    A2,
    A3,
    A4,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::A1, Case::A2, Case::A3, Case::A4];

    /// Checks the admissible range of `(α, s)`.
    pub fn check(self, alpha: &BigRational, s: u32) -> Result<()> {
        let two = ratio_int(2);
        let (ok_alpha, alpha_rule) = match self {
            Case::A1 | Case::A2 => (alpha.is_positive(), "α > 0"),
            Case::A3 => (alpha < &two, "α < 2"),
            Case::A4 => (alpha < &ratio(3, 2), "α < 3/2"),
        };
        let min_s = match self {
            Case::A1 | Case::A4 => 1,
            Case::A2 | Case::A3 => 2,
        };
        if !ok_alpha {
            return Err(Error::domain(format!("{self} needs {alpha_rule}")));
        }
        if s < min_s {
            return Err(Error::domain(format!("{self} needs s >= {min_s}")));
        }
        Ok(())
    }

    /// Parameters of the `-1` identity for A1 and A4.
    pub fn params_i(self, alpha: &BigRational, s: u32) -> Result<KrParamsI> {
        self.check(alpha, s)?;
        let n = s as usize + 1;
        let one = BigRational::one();
        match self {
            Case::A1 => {
                let mut b = vec![alpha.clone(); n];
                b[0] = one;
                KrParamsI::new(s, alpha * ratio_int(2), b, vec![alpha.clone(); n])
            }
            Case::A4 => {
                let mut b = vec![one.clone(); n];
                b[0] = alpha.clone();
                KrParamsI::new(s, ratio_int(2), b, vec![one; n])
            }
            _ => Err(Error::domain(format!("{self} specializes the +1 identity"))),
        }
    }

    /// Parameters of the `+1` identity for A2 and A3.
    pub fn params_ii(self, alpha: &BigRational, s: u32) -> Result<KrParamsII> {
        self.check(alpha, s)?;
        let n = s as usize;
        match self {
            Case::A2 => KrParamsII::new(s, alpha * ratio_int(2), BigRational::one(), vec![alpha.clone(); n], vec![alpha.clone(); n]),
            Case::A3 => KrParamsII::new(s, ratio_int(2), alpha.clone(), vec![ratio_int(1); n], vec![ratio_int(1); n]),
            _ => Err(Error::domain(format!("{self} specializes the -1 identity"))),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::A1 => "A1",
            Case::A2 => "A2",
            Case::A3 => "A3",
            Case::A4 => "A4",
        };
        f.write_str(s)
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A1" => Ok(Case::A1),
            "A2" => Ok(Case::A2),
            "A3" => Ok(Case::A3),
            "A4" => Ok(Case::A4),
            _ => Err(Error::Parse(format!("unknown case `{s}` (expected A1..A4)"))),
        }
    }
}

fn hp(r: &BigRational) -> HpReal {
    HpReal::from_ratio(r)
}

fn int(n: i64) -> HpReal {
    HpReal::from_i64(n)
}

fn run(levels: Vec<Level<HpReal>>, factor: HpReal, ctx: &PrecisionContext) -> Result<Evaluated> {
    let out = NestedSum { levels, start: 0, strict: false }.evaluate(ctx)?;
    let scale = factor.abs().to_f64().max(1.0);
    Ok(Evaluated {
        value: &factor * out.value,
        diagnostics: EvalDiagnostics {
            terms_used: out.terms,
            tail_correction: &factor * out.tail,
            error_estimate: 10f64.powf(out.error_log10) * scale,
            strategy: Strategy::AsymptoticTail,
        },
    })
}

/// `(m+α)^{-k}` from `m = 0`.
fn shifted_power(alpha: &HpReal, k: u32) -> Level<HpReal> {
    Level {
        num: vec![alpha.clone(); k as usize],
        den: vec![alpha + int(1); k as usize],
        first: alpha.powi(k as i64).recip(),
        alternating: false,
    }
}

/// `(α)_m / (2-α)_{m+1}` as a term sequence, advanced one `m` at a time.
struct RatioTerms {
    alpha: HpReal,
    value: HpReal,
    m: u64,
}

impl RatioTerms {
    fn new(alpha: &HpReal) -> Self {
        RatioTerms { alpha: alpha.clone(), value: (int(2) - alpha).recip(), m: 0 }
    }

    fn advance(&mut self) {
        let mm = HpReal::from_u64(self.m);
        self.value = &self.value * (&mm + &self.alpha) / (&mm + int(3) - &self.alpha);
        self.m += 1;
    }
}

/// Series side of a specialization.
pub fn specialized_lhs(case: Case, alpha: &BigRational, s: u32, ctx: &PrecisionContext) -> Result<Evaluated> {
    case.check(alpha, s)?;
    let _g = ctx.enter();
    let a = hp(alpha);
    match case {
        Case::A1 => sum_alternating(
            |m| {
                let t = (HpReal::from_u64(m) + &a).powi(2 * s as i64).recip();
                Ok(if m % 2 == 0 { t } else { -t })
            },
            ctx,
        ),
        Case::A2 => run(vec![shifted_power(&a, 2 * s - 1)], int(1), ctx),
        Case::A3 => {
            let q = (2 * s - 2) as usize;
            let mut num = vec![a.clone()];
            let mut den = vec![int(3) - &a];
            num.extend((0..q).map(|_| int(1)));
            den.extend((0..q).map(|_| int(2)));
            let level = Level { num, den, first: (int(2) - &a).recip(), alternating: false };
            run(vec![level], int(1), ctx)
        }
        Case::A4 => {
            let mut terms = RatioTerms::new(&a);
            sum_alternating(
                |m| {
                    while terms.m < m {
                        terms.advance();
                    }
                    let t = &terms.value / HpReal::from_u64(m + 1).powi(2 * s as i64 - 1);
                    Ok(if m % 2 == 0 { t } else { -t })
                },
                ctx,
            )
        }
    }
}

/// Nested side of a specialization.
pub fn specialized_rhs(case: Case, alpha: &BigRational, s: u32, ctx: &PrecisionContext) -> Result<Evaluated> {
    case.check(alpha, s)?;
    let _g = ctx.enter();
    let a = hp(alpha);
    let half = int(1) / int(2);
    let outer_shifted = |n: u32| (1..n).map(|_| shifted_power(&a, 2)).collect::<Vec<_>>();
    let outer_plain = |n: u32| (1..n).map(|_| shifted_power(&int(1), 2)).collect::<Vec<_>>();
    let gamma_factor = || -> Result<HpReal> {
        let g = gamma_rational(alpha, ctx)?;
        Ok(&g * &g / (gamma_rational(&(alpha * ratio_int(2)), ctx)? * int(2)))
    };
    match case {
        Case::A1 => {
            // (α)_m² / (m! (2α)_m (m+α))
            let first = Level {
                num: vec![a.clone(), a.clone(), a.clone()],
                den: vec![int(1), &a * int(2), &a + int(1)],
                first: a.recip(),
                alternating: false,
            };
            let mut levels = vec![first];
            levels.extend(outer_shifted(s));
            run(levels, gamma_factor()?, ctx)
        }
        Case::A2 => {
            let first = Level { num: vec![a.clone(), a.clone()], den: vec![int(1), &a * int(2)], first: int(1), alternating: false };
            let mut levels = vec![first];
            levels.extend(outer_shifted(s));
            run(levels, gamma_factor()?, ctx)
        }
        Case::A3 => {
            // m! / (2-α)_{m+1}
            let first = Level { num: vec![int(1)], den: vec![int(3) - &a], first: (int(2) - &a).recip(), alternating: false };
            let mut levels = vec![first];
            levels.extend(outer_plain(s));
            run(levels, half, ctx)
        }
        Case::A4 => {
            // 1 / ((m+2-α)(m+1))
            let first = Level {
                num: vec![int(2) - &a, int(1)],
                den: vec![int(3) - &a, int(2)],
                first: (int(2) - &a).recip(),
                alternating: false,
            };
            let mut levels = vec![first];
            levels.extend(outer_plain(s));
            run(levels, half, ctx)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::{kr_conditions_i, kr_conditions_ii};

    fn close(a: &HpReal, b: &HpReal, digits: f64) {
        let d = (a - b).abs().log10_abs();
        assert!(d < -digits, "{a:?} vs {b:?}: 1e{d}");
    }

    #[test]
    fn documented_values() {
        let ctx = PrecisionContext::new(30).unwrap();
        let _g = ctx.enter();
        let one = ratio_int(1);
        let pi2_12 = HpReal::pi() * HpReal::pi() / int(12);
        close(&specialized_lhs(Case::A1, &one, 1, &ctx).unwrap().value, &pi2_12, 32.0);
        close(&specialized_rhs(Case::A1, &one, 1, &ctx).unwrap().value, &pi2_12, 32.0);
        let zeta3 = crate::series::zeta_int(3, &ctx).unwrap().value;
        close(&specialized_lhs(Case::A2, &one, 2, &ctx).unwrap().value, &zeta3, 32.0);
        close(&specialized_lhs(Case::A3, &one, 2, &ctx).unwrap().value, &zeta3, 32.0);
    }

    #[test]
    fn both_sides_agree_off_the_integer_point() {
        let ctx = PrecisionContext::new(30).unwrap();
        let _g = ctx.enter();
        for case in Case::ALL {
            for alpha in [ratio(3, 5), ratio(13, 10)] {
                let s = 2;
                if case.check(&alpha, s).is_err() {
                    continue;
                }
                let l = specialized_lhs(case, &alpha, s, &ctx).unwrap().value;
                let r = specialized_rhs(case, &alpha, s, &ctx).unwrap().value;
                close(&l, &r, 30.0);
            }
        }
    }

    #[test]
    fn ranges_and_parameter_sets() {
        assert!(Case::A2.check(&ratio_int(1), 1).is_err());
        assert!(Case::A4.check(&ratio(3, 2), 1).is_err());
        assert!(Case::A1.check(&ratio_int(0), 1).is_err());
        assert_eq!("a3".parse::<Case>().unwrap(), Case::A3);
        for alpha in [ratio(3, 5), ratio_int(1), ratio(13, 10)] {
            for s in 1..=3 {
                assert!(kr_conditions_i(&Case::A1.params_i(&alpha, s).unwrap()).overall);
                assert!(kr_conditions_i(&Case::A4.params_i(&alpha, s).unwrap()).overall);
            }
            for s in 2..=3 {
                assert!(kr_conditions_ii(&Case::A2.params_ii(&alpha, s).unwrap()).overall);
                assert!(kr_conditions_ii(&Case::A3.params_ii(&alpha, s).unwrap()).overall);
            }
        }
    }
}
