use mzsv_core::hypergeom::{
    kr_conditions_i, kr_conditions_ii, kr_lhs_i, kr_lhs_ii, kr_rhs_i, kr_rhs_ii, pfq, specialized_lhs, specialized_rhs, Case,
    KrParamsI, KrParamsII,
};
use mzsv_core::numerics::scalar::ratio;
use mzsv_core::{Error, HpReal, PrecisionContext};
use num_rational::BigRational;
use proptest::prelude::*;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(30).unwrap()
}

fn alphas() -> [BigRational; 3] {
    [ratio(3, 5), ratio(1, 1), ratio(13, 10)]
}

#[test]
fn both_sides_agree_on_specializations() {
    let ctx = ctx();
    let _g = ctx.enter();
    for alpha in alphas() {
        for s in 1..=3 {
            for case in [Case::A1, Case::A4] {
                if let Ok(p) = case.params_i(&alpha, s) {
                    assert!(kr_conditions_i(&p).overall);
                    let d = (kr_lhs_i(&p, &ctx).unwrap().value - kr_rhs_i(&p, &ctx).unwrap().value).abs().to_f64();
                    assert!(d <= 10.0 * ctx.tol, "{case} α={alpha} s={s}: {d}");
                }
            }
            for case in [Case::A2, Case::A3] {
                if let Ok(p) = case.params_ii(&alpha, s) {
                    assert!(kr_conditions_ii(&p).overall);
                    let d = (kr_lhs_ii(&p, &ctx).unwrap().value - kr_rhs_ii(&p, &ctx).unwrap().value).abs().to_f64();
                    assert!(d <= 10.0 * ctx.tol, "{case} α={alpha} s={s}: {d}");
                }
            }
            for case in Case::ALL {
                if case.check(&alpha, s).is_ok() {
                    let l = specialized_lhs(case, &alpha, s, &ctx).unwrap().value;
                    let r = specialized_rhs(case, &alpha, s, &ctx).unwrap().value;
                    assert!((l - r).abs().to_f64() <= 10.0 * ctx.tol, "{case} α={alpha} s={s}");
                }
            }
        }
    }
}

#[test]
fn violated_hypotheses_are_reported() {
    let ctx = ctx();
    let ones = || vec![ratio(1, 1); 2];
    let p = KrParamsI::new(1, ratio(0, 1), ones(), ones()).unwrap();
    assert!(matches!(kr_rhs_i(&p, &ctx), Err(Error::Precondition(_))));
    let p = KrParamsII::new(2, ratio(2, 1), ratio(7, 2), ones(), ones()).unwrap();
    assert!(matches!(kr_rhs_ii(&p, &ctx), Err(Error::Precondition(_))));
}

fn exact_terminating(upper: &[BigRational], lower: &[BigRational], z: i64, len: u64) -> BigRational {
    let mut term = ratio(1, 1);
    let mut total = ratio(0, 1);
    for m in 0..len {
        total += &term;
        let mm = ratio(m as i64, 1);
        let num: BigRational = upper.iter().map(|a| &mm + a).product();
        let den: BigRational = lower.iter().map(|b| &mm + b).product();
        term = term * num / den * ratio(z, 1) / (&mm + ratio(1, 1));
    }
    total
}

fn rational() -> impl Strategy<Value = BigRational> {
    (1i64..40, 1i64..8).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn terminating_series_are_exact(n in 1i64..8, rest in prop::collection::vec(rational(), 1..3), lower in prop::collection::vec(rational(), 2..4), z in prop::sample::select(vec![1i64, -1])) {
        let mut upper = vec![ratio(-n, 1)];
        upper.extend(rest);
        let lower: Vec<BigRational> = lower.into_iter().take(upper.len() - 1).collect();
        prop_assume!(lower.len() + 1 == upper.len());
        let ctx = ctx();
        let _g = ctx.enter();
        let got = pfq(&upper, &lower, z as i32, &ctx).unwrap().value;
        let want = HpReal::from_ratio(&exact_terminating(&upper, &lower, z, n as u64 + 1));
        prop_assert_eq!(got.to_decimal_string(25), want.to_decimal_string(25));
    }

    #[test]
    fn margins_are_monotone_in_a(s in 1u32..=3, a in rational(), bump in rational(), bc in prop::collection::vec(rational(), 8)) {
        let n = s as usize + 1;
        let b: Vec<BigRational> = bc[..n].to_vec();
        let c: Vec<BigRational> = bc[4..4 + n].to_vec();
        let lo = kr_conditions_i(&KrParamsI::new(s, a.clone(), b.clone(), c.clone()).unwrap());
        let hi = kr_conditions_i(&KrParamsI::new(s, &a + &bump, b.clone(), c.clone()).unwrap());
        for (x, y) in lo.entries.iter().zip(&hi.entries) {
            if !x.description.contains("not in Z") {
                prop_assert!(!x.satisfied || y.satisfied, "{} turned false", x.description);
            }
        }
        let c0 = bc[7].clone();
        let lo = kr_conditions_ii(&KrParamsII::new(s, a.clone(), c0.clone(), b[..s as usize].to_vec(), c[..s as usize].to_vec()).unwrap());
        let hi = kr_conditions_ii(&KrParamsII::new(s, &a + &bump, c0, b[..s as usize].to_vec(), c[..s as usize].to_vec()).unwrap());
        for (x, y) in lo.entries.iter().zip(&hi.entries) {
            if !x.description.contains("not in Z") {
                prop_assert!(!x.satisfied || y.satisfied, "{} turned false", x.description);
            }
        }
    }
}
