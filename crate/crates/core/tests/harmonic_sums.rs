use mzsv_core::finite_sums::{dr_inv_pochhammer_2minus_at1, dr_ratio_at1, dr_ratio_composition_form, dr_ratio_product_form, pochhammer, star_sum, strict_sum};
use mzsv_core::numerics::{derivative_at, HpReal, PrecisionContext};
use num_rational::BigRational;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn harmonic_numbers() {
    let mut h = q(0, 1);
    for m in 1..=1000u64 {
        h += q(1, m as i64);
        if m % 97 == 0 || m == 1000 {
            assert_eq!(strict_sum::<BigRational>(&[1], m), h, "m = {m}");
        }
    }
}

#[test]
fn boundary_term_of_single_parts() {
    for k in 1..=4u32 {
        for m in 0..=100u64 {
            let diff = star_sum::<BigRational>(&[k], m) - strict_sum::<BigRational>(&[k], m);
            let want = q(1, (m as i64 + 1).pow(k));
            assert_eq!(diff, want, "k={k}, m={m}");
        }
    }
}

#[test]
fn closed_forms_agree_exactly() {
    for m in 0..=15 {
        for r in 0..=5 {
            assert_eq!(dr_ratio_product_form::<BigRational>(m, r), dr_ratio_composition_form::<BigRational>(m, r), "m={m}, r={r}");
        }
    }
}

fn factorial(r: u32) -> HpReal {
    (1..=r as i64).fold(HpReal::from_i64(1), |acc, k| acc * HpReal::from_i64(k))
}

#[test]
fn closed_forms_match_the_difference_oracle() {
    let ctx = PrecisionContext::new(50).unwrap();
    let _g = ctx.enter();
    let one = HpReal::from_i64(1);
    let two = HpReal::from_i64(2);
    let bound = 10f64.powi(-(ctx.digits as i32) + 10);
    for m in 0..=20u64 {
        for r in 0..=4u32 {
            let inv = derivative_at(|x, _| Ok(pochhammer(&(&two - x), m + 1).recip()), &one, r, &ctx).unwrap() / factorial(r);
            let closed = HpReal::from_ratio(&dr_inv_pochhammer_2minus_at1::<BigRational>(m, r));
            let rel = ((&inv - &closed).abs() / closed.abs()).to_f64();
            assert!(rel <= bound, "inverse Pochhammer m={m} r={r}: {rel}");

            let ratio_d = derivative_at(|x, _| Ok(pochhammer(x, m) / pochhammer(&(&two - x), m + 1)), &one, r, &ctx).unwrap() / factorial(r);
            let closed = HpReal::from_ratio(&dr_ratio_at1::<BigRational>(m, r, 0.0).unwrap());
            let rel = ((&ratio_d - &closed).abs() / closed.abs().max_value(HpReal::from_i64(1))).to_f64();
            assert!(rel <= bound, "ratio m={m} r={r}: {rel}");
        }
    }
}

proptest! {
    #[test]
    fn star_sums_grow_and_strict_sums_start_late(parts in prop::collection::vec(1u32..=3, 1..=4), m in 0u64..12) {
        let a = star_sum::<BigRational>(&parts, m);
        let b = star_sum::<BigRational>(&parts, m + 1);
        prop_assert!(a <= b);
        if (m as usize) < parts.len() {
            prop_assert_eq!(strict_sum::<BigRational>(&parts, m), q(0, 1));
        }
    }
}
