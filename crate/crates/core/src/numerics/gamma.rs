//! The gamma function via Spouge's approximation.

use std::cell::RefCell;
use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::context::{PrecisionContext, PrecisionGuard};
use super::hp::HpReal;
use super::scalar::is_nonpositive_integer;
use crate::error::{Error, Result};

const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// Smallest Spouge parameter `a` whose relative error bound
/// `a^{-1/2} (2π)^{-(a+1/2)}` is below `10^-digits`.
fn spouge_parameter(digits: u32) -> u32 {
    let target = -(digits as f64) * std::f64::consts::LN_10;
    let mut a = 2u32;
    while -0.5 * (a as f64).ln() - (a as f64 + 0.5) * LN_2PI >= target {
        a += 1;
    }
    a
}

/// Bits lost to cancellation in the alternating coefficient sum.
fn cancellation_bits(a: u32) -> usize {
    let mut worst: f64 = 0.0;
    let mut log2_fact = 0.0;
    for k in 1..a {
        if k > 1 {
            log2_fact += ((k - 1) as f64).log2();
        }
        let ak = (a - k) as f64;
        let l = (k as f64 - 0.5) * ak.log2() + ak * std::f64::consts::LOG2_E - log2_fact;
        worst = worst.max(l);
    }
    worst.ceil() as usize + 16
}

thread_local! {
    static COEFFS: RefCell<HashMap<(u32, usize), std::rc::Rc<Vec<HpReal>>>> = RefCell::new(HashMap::new());
}

/// `c_0, …, c_{a-1}` at `bits` of precision.
fn spouge_coefficients(a: u32, bits: usize) -> std::rc::Rc<Vec<HpReal>> {
    if let Some(c) = COEFFS.with(|m| m.borrow().get(&(a, bits)).cloned()) {
        return c;
    }
    let _g = PrecisionGuard::set(bits);
    let mut c = Vec::with_capacity(a as usize);
    let two_pi = HpReal::pi() * HpReal::from_i64(2);
    c.push(two_pi.sqrt());
    let half = HpReal::from_i64(1) / HpReal::from_i64(2);
    let mut fact = HpReal::from_i64(1); // (k-1)!
    for k in 1..a {
        if k > 1 {
            fact = fact * HpReal::from_i64((k - 1) as i64);
        }
        let ak = HpReal::from_i64((a - k) as i64);
        let e = HpReal::from_i64(k as i64) - &half;
        let mag = ak.powf(&e) * ak.exp() / &fact;
        c.push(if k % 2 == 1 { mag } else { -mag });
    }
    let c = std::rc::Rc::new(c);
    COEFFS.with(|m| m.borrow_mut().insert((a, bits), c.clone()));
    c
}

/// `Γ(z + 1)` for `z >= 0`, evaluated at `bits`.
fn gamma_shifted(z: &HpReal, digits: u32, bits: usize) -> HpReal {
    let a = spouge_parameter(digits + 2);
    let work = bits + cancellation_bits(a);
    let c = spouge_coefficients(a, work);
    let _g = PrecisionGuard::set(work);
    let z = z.with_bits(work);
    let mut series = c[0].clone();
    for (k, ck) in c.iter().enumerate().skip(1) {
        series += ck / (&z + HpReal::from_i64(k as i64));
    }
    let za = &z + HpReal::from_i64(a as i64);
    let half = HpReal::from_i64(1) / HpReal::from_i64(2);
    let power = za.powf(&(&z + &half));
    (power * (-za).exp() * series).with_bits(bits)
}

/// `Γ(x)` for `x > 0` with relative error below `10^-(digits+guard)`.
pub fn gamma(x: &HpReal, ctx: &PrecisionContext) -> Result<HpReal> {
    if x.is_negative() || x.is_zero() {
        return Err(Error::domain(format!("gamma requires x > 0, got {}", x.to_decimal_string(20))));
    }
    let bits = ctx.working_bits();
    let _g = PrecisionGuard::set(bits + 32);
    let x = x.with_bits(bits + 32);
    let one = HpReal::from_i64(1);
    let value = if x.cmp_value(&one) == std::cmp::Ordering::Less {
        gamma_shifted(&x, ctx.working_digits() + 10, bits + 32) / &x
    } else {
        gamma_shifted(&(&x - &one), ctx.working_digits() + 10, bits + 32)
    };
    Ok(value.with_bits(bits))
}

/// `Γ(r)` for any rational `r` that is not a pole.
pub fn gamma_rational(r: &BigRational, ctx: &PrecisionContext) -> Result<HpReal> {
    if is_nonpositive_integer(r) {
        return Err(Error::domain(format!("gamma has a pole at {r}")));
    }
    let bits = ctx.working_bits();
    let _g = PrecisionGuard::set(bits);
    if r.is_positive() {
        return gamma(&HpReal::from_ratio(r), ctx);
    }
    // Shift into the right half-line: Γ(r) = Γ(r+n) / ((r)(r+1)…(r+n-1)).
    let n = (-r).floor().to_integer().to_i64().unwrap_or(i64::MAX).saturating_add(1);
    let shifted = r + BigRational::from_integer(n.into());
    let mut denom = BigRational::one();
    for i in 0..n {
        denom *= r + BigRational::from_integer(i.into());
    }
    Ok(gamma(&HpReal::from_ratio(&shifted), ctx)? / HpReal::from_ratio(&denom))
}

/// `1/Γ(r)`, which vanishes at the poles.
pub fn recip_gamma_rational(r: &BigRational, ctx: &PrecisionContext) -> Result<HpReal> {
    let _g = ctx.enter();
    if is_nonpositive_integer(r) {
        return Ok(HpReal::zero_at(ctx.working_bits()));
    }
    Ok(gamma_rational(r, ctx)?.recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::scalar::ratio;

    #[test]
    fn integer_and_half_integer_values() {
        let ctx = PrecisionContext::new(40).unwrap();
        let _g = ctx.enter();
        let g5 = gamma(&HpReal::from_i64(5), &ctx).unwrap();
        assert_eq!(g5.to_decimal_string(40), "24");
        let g1 = gamma(&HpReal::from_i64(1), &ctx).unwrap();
        assert_eq!(g1.to_decimal_string(40), "1");
        let half = HpReal::parse("0.5").unwrap();
        let gh = gamma(&half, &ctx).unwrap();
        assert_eq!(gh.to_decimal_string(35), "1.7724538509055160272981674833411452");
    }

    #[test]
    fn rejects_non_positive() {
        let ctx = PrecisionContext::new(20).unwrap();
        let _g = ctx.enter();
        assert!(matches!(gamma(&HpReal::from_i64(0), &ctx), Err(Error::Domain(_))));
        assert!(matches!(gamma(&HpReal::from_i64(-2), &ctx), Err(Error::Domain(_))));
    }

    #[test]
    fn negative_rational_arguments() {
        let ctx = PrecisionContext::new(30).unwrap();
        let _g = ctx.enter();
        // Γ(-1/2) = -2√π
        let v = gamma_rational(&ratio(-1, 2), &ctx).unwrap();
        assert_eq!(v.to_decimal_string(25), "-3.544907701811032054596335");
        assert!(recip_gamma_rational(&ratio(-3, 1), &ctx).unwrap().is_zero());
        assert!(gamma_rational(&ratio(0, 1), &ctx).is_err());
    }
}
