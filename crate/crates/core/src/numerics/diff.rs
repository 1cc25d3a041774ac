//! Finite-difference differentiation used as an independent oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::context::PrecisionContext;
use super::hp::HpReal;
use crate::error::Result;

/// Exact weights of the `order`-th derivative at 0 on the given nodes.
pub fn fornberg_weights(nodes: &[BigRational], order: usize) -> Vec<BigRational> {
    let n = nodes.len();
    let mut c = vec![vec![BigRational::zero(); order + 1]; n];
    c[0][0] = BigRational::one();
    let mut c1 = BigRational::one();
    let mut c4 = nodes[0].clone();
    for i in 1..n {
        let mn = i.min(order);
        let mut c2 = BigRational::one();
        let c5 = c4.clone();
        c4 = nodes[i].clone();
        for j in 0..i {
            let c3 = &nodes[i] - &nodes[j];
            c2 *= &c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    let kk = BigRational::from_integer(BigInt::from(k));
                    c[i][k] = &c1 * (kk * &c[i - 1][k - 1] - &c5 * &c[i - 1][k]) / &c2;
                }
                c[i][0] = -&c1 * &c5 * &c[i - 1][0] / &c2;
            }
            for k in (1..=mn).rev() {
                let kk = BigRational::from_integer(BigInt::from(k));
                c[j][k] = (&c4 * &c[j][k] - kk * &c[j][k - 1]) / &c3;
            }
            c[j][0] = &c4 * &c[j][0] / &c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[order].clone()).collect()
}

/// Half-width of the central stencil giving accuracy order `2(r+2)`.
fn half_width(r: u32) -> i64 {
    let r = r as i64;
    (3 * r + 2 + r % 2 + 1) / 2
}

/// `r`-th derivative of `f` at `x0` by central differences.
///
/// The stencil has accuracy order `2(r+2)` and step `10^{-digits/(r+2)}`;
/// `f` is evaluated at three times the context's digits and guard so the
/// subtractive cancellation stays far below `10^{-digits}`. The result is
/// expected to be within [`derivative_error_bound`].
pub fn derivative_at<F>(f: F, x0: &HpReal, r: u32, ctx: &PrecisionContext) -> Result<HpReal>
where
    F: Fn(&HpReal, &PrecisionContext) -> Result<HpReal>,
{
    let wide = ctx.scaled(3);
    if r == 0 {
        let _g = wide.enter();
        let v = f(&x0.at_working(), &wide)?;
        return Ok(v.with_bits(ctx.working_bits()));
    }
    let n = half_width(r);
    let nodes: Vec<BigRational> = (-n..=n).map(|j| BigRational::from_integer(j.into())).collect();
    let weights = fornberg_weights(&nodes, r as usize);
    let step_exp = (ctx.digits / (r + 2)).max(1) as i32;
    let _g = wide.enter();
    let h = HpReal::from_ratio(&BigRational::new(BigInt::one(), BigInt::from(10).pow(step_exp as u32)));
    let x0 = x0.at_working();
    let mut acc = HpReal::zero_at(wide.working_bits());
    for (j, w) in (-n..=n).zip(&weights) {
        if w.is_zero() {
            continue;
        }
        let x = &x0 + &h * HpReal::from_i64(j);
        acc += HpReal::from_ratio(w) * f(&x, &wide)?;
    }
    let value = acc / h.powi(r as i64);
    Ok(value.with_bits(ctx.working_bits()))
}

/// The accuracy promised by [`derivative_at`]: `10^{-digits+5} max(1, |v|)`.
pub fn derivative_error_bound(value: &HpReal, ctx: &PrecisionContext) -> f64 {
    let scale = value.log10_abs().max(0.0);
    10f64.powf(-(ctx.digits as f64) + 5.0 + scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::scalar::ratio;

    #[test]
    fn classic_weights() {
        let nodes: Vec<_> = (-1..=1).map(|j| ratio(j, 1)).collect();
        assert_eq!(fornberg_weights(&nodes, 1), vec![ratio(-1, 2), ratio(0, 1), ratio(1, 2)]);
        assert_eq!(fornberg_weights(&nodes, 2), vec![ratio(1, 1), ratio(-2, 1), ratio(1, 1)]);
        let nodes: Vec<_> = (-2..=2).map(|j| ratio(j, 1)).collect();
        assert_eq!(
            fornberg_weights(&nodes, 1),
            vec![ratio(1, 12), ratio(-2, 3), ratio(0, 1), ratio(2, 3), ratio(-1, 12)]
        );
    }

    #[test]
    fn polynomial_derivatives() {
        let ctx = PrecisionContext::new(20).unwrap();
        let _g = ctx.enter();
        let one = HpReal::from_i64(1);
        let sq = |x: &HpReal, _: &PrecisionContext| Ok(x * x);
        let d = derivative_at(sq, &one, 1, &ctx).unwrap();
        assert!((d - HpReal::from_i64(2)).abs().log10_abs() < -15.0);
        // (x)_2 = x(x+1), derivative 2x+1
        let poch = |x: &HpReal, _: &PrecisionContext| Ok(x * (x + HpReal::from_i64(1)));
        let d = derivative_at(poch, &one, 1, &ctx).unwrap();
        assert!((d - HpReal::from_i64(3)).abs().log10_abs() < -15.0);
        let cube = |x: &HpReal, _: &PrecisionContext| Ok(x * x * x);
        let d3 = derivative_at(cube, &HpReal::from_i64(2), 3, &ctx).unwrap();
        assert!((d3 - HpReal::from_i64(6)).abs().log10_abs() < -15.0);
    }
}
