//! Euler–Maclaurin tails of `Σ m^{-s}`.

use super::bernoulli::bernoulli;
use super::context::PrecisionContext;
use super::hp::HpReal;
use crate::error::{Error, Result};

/// `n^{-s}` with an integer fast path.
pub(crate) fn inv_pow(n: u64, s: &HpReal, s_int: Option<i64>) -> HpReal {
    let base = HpReal::from_u64(n);
    match s_int {
        Some(k) => base.powi(k).recip(),
        None => base.powf(&-s),
    }
}

fn as_small_int(s: &HpReal) -> Option<i64> {
    if s.is_integer() && s.to_f64().abs() < 1e6 {
        Some(s.to_f64() as i64)
    } else {
        None
    }
}

/// `Σ_{m>M} m^{-s}` for real `s > 1`.
///
/// Terms are summed directly up to a cutoff large enough for the
/// Euler–Maclaurin remainder to reach the working tolerance, then the
/// expansion `M^{1-s}/(s-1) - M^{-s}/2 + Σ_j B_{2j}/(2j)! (s)_{2j-1} M^{1-s-2j}`
/// is added, stopping at the first term below tolerance. If the asymptotic
/// terms start growing first the cutoff is doubled.
pub fn zeta_tail(s: &HpReal, m: u64, ctx: &PrecisionContext) -> Result<HpReal> {
    let _g = ctx.enter();
    let s = s.at_working();
    let one = HpReal::from_i64(1);
    if s.cmp_value(&one) != std::cmp::Ordering::Greater {
        return Err(Error::domain(format!("zeta_tail requires s > 1, got {}", s.to_decimal_string(20))));
    }
    if m == 0 {
        return Err(Error::domain("zeta_tail requires M >= 1"));
    }
    let s_int = as_small_int(&s);
    let tol_log10 = ctx.inner_tol_log10() - 2.0;
    let s_f = s.to_f64();
    let mut cutoff = m.max((0.4 * ctx.working_digits() as f64 + s_f.abs() + 10.0).ceil() as u64);
    loop {
        if cutoff - m > ctx.max_terms {
            return Err(Error::convergence(format!(
                "zeta_tail direct segment would exceed max_terms ({})",
                ctx.max_terms
            )));
        }
        let mut direct = HpReal::zero_at(ctx.working_bits());
        for n in (m + 1..=cutoff).rev() {
            direct += inv_pow(n, &s, s_int);
        }
        if let Some(tail) = em_tail(&s, s_int, cutoff, tol_log10) {
            return Ok(direct + tail);
        }
        cutoff *= 2;
    }
}

/// Euler–Maclaurin value of `Σ_{n>M} n^{-s}`, or `None` if the expansion
/// cannot reach `10^tol_log10` at this `M`.
fn em_tail(s: &HpReal, s_int: Option<i64>, m: u64, tol_log10: f64) -> Option<HpReal> {
    let one = HpReal::from_i64(1);
    let mm = HpReal::from_u64(m);
    let m_pow = match s_int {
        Some(k) => mm.powi(k).recip(),
        None => mm.powf(&-s),
    }; // M^{-s}
    let inv_m2 = (&mm * &mm).recip();
    let mut total = &m_pow * &mm / (s - &one) - &m_pow / HpReal::from_i64(2);
    // term_j = B_{2j}/(2j)! * (s)_{2j-1} * M^{1-s-2j}
    let max_j = (4 * m as usize + 8).min(600);
    let mut poch = s.clone(); // (s)_{2j-1}
    let mut fact = HpReal::from_i64(2); // (2j)!
    let mut power = &m_pow / &mm; // M^{-s-1}
    let mut prev = f64::INFINITY;
    for j in 1..max_j {
        if j > 1 {
            let a = s + HpReal::from_i64(2 * j as i64 - 3);
            let b = s + HpReal::from_i64(2 * j as i64 - 2);
            poch = poch * a * b;
            fact = fact * HpReal::from_i64((2 * j - 1) as i64) * HpReal::from_i64((2 * j) as i64);
            power = power * &inv_m2;
        }
        let b2j = HpReal::from_ratio(&bernoulli(2 * j));
        let term = b2j / &fact * &poch * &power;
        let mag = term.log10_abs();
        if mag > prev {
            return None;
        }
        total += term;
        if mag < tol_log10 {
            return Some(total);
        }
        prev = mag;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_two_tail_from_one() {
        let ctx = PrecisionContext::new(30).unwrap();
        let _g = ctx.enter();
        let t = zeta_tail(&HpReal::from_i64(2), 1, &ctx).unwrap();
        // π²/6 - 1
        assert_eq!(t.to_decimal_string(25), "0.6449340668482264364724152");
    }

    #[test]
    fn large_cutoff() {
        let ctx = PrecisionContext::new(20).unwrap();
        let _g = ctx.enter();
        let t = zeta_tail(&HpReal::from_i64(2), 1_000_000, &ctx).unwrap();
        // 1/M - 1/(2M^2) + 1/(6M^3)
        assert_eq!(t.to_decimal_string(20), "0.00000099999950000016666667");
    }

    #[test]
    fn real_exponent_and_domain() {
        let ctx = PrecisionContext::new(20).unwrap();
        let _g = ctx.enter();
        assert!(zeta_tail(&HpReal::from_i64(1), 5, &ctx).is_err());
        let s = HpReal::parse("2.5").unwrap();
        let a = zeta_tail(&s, 3, &ctx).unwrap();
        let b = zeta_tail(&s, 40, &ctx).unwrap();
        let mut direct = HpReal::zero_at(ctx.working_bits());
        for n in 4..=40u64 {
            direct += inv_pow(n, &s, None);
        }
        assert!((a - b - direct).abs().log10_abs() < -25.0);
    }
}
