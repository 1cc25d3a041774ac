//! Truncated power series in an auxiliary variable `t`, used as the
//! coefficient ring when a whole family of sums is expanded at once.

use std::ops::{Add, Mul, Neg, Sub};

use super::asym::Coef;
use super::hp::HpReal;

/// `Σ_{i<=order} c_i t^i`. Exact scalars carry `order = usize::MAX`, so
/// they never truncate the series they meet.
#[derive(Clone, Debug)]
pub struct TSeries {
    pub coeffs: Vec<HpReal>,
    pub order: usize,
}

impl TSeries {
    pub fn scalar(x: HpReal) -> Self {
        TSeries { coeffs: vec![x], order: usize::MAX }
    }

    /// `c + t` truncated at `order`.
    pub fn affine(c: HpReal, slope: HpReal, order: usize) -> Self {
        let mut coeffs = vec![c];
        if order >= 1 {
            coeffs.push(slope);
        }
        TSeries { coeffs, order }
    }

    /// Coefficient of `t^i`.
    pub fn coeff(&self, i: usize) -> HpReal {
        self.coeffs.get(i).cloned().unwrap_or_else(|| HpReal::zero_at(self.coeffs[0].precision_bits()))
    }

    fn truncated(mut self) -> Self {
        if self.order != usize::MAX && self.coeffs.len() > self.order + 1 {
            self.coeffs.truncate(self.order + 1);
        }
        self
    }
}

impl Add for TSeries {
    type Output = TSeries;
    fn add(self, rhs: TSeries) -> TSeries {
        let order = self.order.min(rhs.order);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        TSeries { coeffs, order }.truncated()
    }
}

impl Neg for TSeries {
    type Output = TSeries;
    fn neg(self) -> TSeries {
        TSeries { coeffs: self.coeffs.into_iter().map(|c| -c).collect(), order: self.order }
    }
}

impl Sub for TSeries {
    type Output = TSeries;
    fn sub(self, rhs: TSeries) -> TSeries {
        self + (-rhs)
    }
}

impl Mul for TSeries {
    type Output = TSeries;
    fn mul(self, rhs: TSeries) -> TSeries {
        let order = self.order.min(rhs.order);
        let full = self.coeffs.len() + rhs.coeffs.len() - 1;
        let n = if order == usize::MAX { full } else { full.min(order + 1) };
        let coeffs = (0..n)
            .map(|k| {
                let mut acc: Option<HpReal> = None;
                for i in 0..=k {
                    if let (Some(a), Some(b)) = (self.coeffs.get(i), rhs.coeffs.get(k - i)) {
                        let p = a * b;
                        acc = Some(match acc {
                            Some(s) => s + p,
                            None => p,
                        });
                    }
                }
                acc.expect("every coefficient has a contributing pair")
            })
            .collect();
        TSeries { coeffs, order }
    }
}

impl Coef for TSeries {
    fn constant(x: HpReal) -> Self {
        TSeries::scalar(x)
    }

    fn scale(&self, k: &HpReal) -> Self {
        TSeries { coeffs: self.coeffs.iter().map(|c| c * k).collect(), order: self.order }
    }

    fn recip(&self) -> Self {
        // b_0 = 1/a_0, b_n = -(Σ_{i=1}^n a_i b_{n-i}) / a_0
        let n = if self.order == usize::MAX { self.coeffs.len() } else { self.order + 1 };
        let inv0 = self.coeffs[0].recip();
        let mut b = vec![inv0.clone()];
        for k in 1..n {
            let mut acc = HpReal::zero_at(inv0.precision_bits());
            for i in 1..=k {
                if let Some(a) = self.coeffs.get(i) {
                    acc += a * &b[k - i];
                }
            }
            b.push(-(acc * &inv0));
        }
        if self.order == usize::MAX && self.coeffs.len() > 1 {
            panic!("reciprocal of an untruncated non-constant series");
        }
        TSeries { coeffs: b, order: self.order }
    }

    fn exp(&self) -> Self {
        // exp(c0) * Σ_k u^k / k! with u nilpotent
        let head = self.coeffs[0].exp();
        let mut u = self.clone();
        u.coeffs[0] = HpReal::zero_at(head.precision_bits());
        let n = if self.order == usize::MAX { 1 } else { self.order + 1 };
        let mut term = TSeries::scalar(HpReal::from_i64(1).with_bits(head.precision_bits()));
        let mut acc = term.clone();
        for k in 1..n {
            term = (term * u.clone()).scale(&(HpReal::from_i64(1) / HpReal::from_i64(k as i64)));
            acc = acc + term.clone();
        }
        let mut out = acc.scale(&head);
        if self.order != usize::MAX {
            out.order = self.order;
        }
        out.truncated()
    }

    fn magnitude_log10(&self) -> f64 {
        self.coeffs.iter().map(|c| c.log10_abs()).fold(f64::NEG_INFINITY, f64::max)
    }

    fn constant_part(&self) -> HpReal {
        self.coeffs[0].clone()
    }
}
