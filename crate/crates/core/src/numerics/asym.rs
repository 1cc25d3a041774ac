//! Formal asymptotic series `x^{-λ} Σ_k c_k x^{-k}` and the operations the
//! tail engine needs: products, unit shifts, tails of plain and alternating
//! sums, and expansions of gamma-function ratios.
//!
//! Coefficients live in any [`Coef`] ring, so the same code handles plain
//! numbers and truncated power series in an auxiliary variable.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::bernoulli::bernoulli;
use super::hp::HpReal;

pub trait Coef: Clone + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {
    fn constant(x: HpReal) -> Self;
    fn scale(&self, k: &HpReal) -> Self;
    fn recip(&self) -> Self;
    fn exp(&self) -> Self;
    /// `x^{-e}` for a positive real `x` given through `ln x`.
    fn inv_power(ln_x: &HpReal, e: &Self) -> Self {
        (e.scale(&-ln_x)).exp()
    }
    /// Largest `log10` magnitude among the components.
    fn magnitude_log10(&self) -> f64;
    /// The plain-number part, for convergence decisions.
    fn constant_part(&self) -> HpReal;
}

impl Coef for HpReal {
    fn constant(x: HpReal) -> Self {
        x
    }
    fn scale(&self, k: &HpReal) -> Self {
        self * k
    }
    fn recip(&self) -> Self {
        HpReal::recip(self)
    }
    fn exp(&self) -> Self {
        HpReal::exp(self)
    }
    fn magnitude_log10(&self) -> f64 {
        self.log10_abs()
    }
    fn constant_part(&self) -> HpReal {
        self.clone()
    }
}

fn hp_int(n: i64) -> HpReal {
    HpReal::from_i64(n)
}

fn hp_ratio(r: &BigRational) -> HpReal {
    HpReal::from_ratio(r)
}

/// `x^{-λ} Σ_{k<K} c_k x^{-k}`.
#[derive(Clone, Debug)]
pub struct AsymSeries<C> {
    pub lambda: C,
    pub coeffs: Vec<C>,
}

impl<C: Coef> AsymSeries<C> {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &C) -> Self {
        AsymSeries { lambda: self.lambda.clone(), coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.len().min(other.len());
        let coeffs = (0..n)
            .map(|k| {
                let mut acc = self.coeffs[0].clone() * other.coeffs[k].clone();
                for i in 1..=k {
                    acc = acc + self.coeffs[i].clone() * other.coeffs[k - i].clone();
                }
                acc
            })
            .collect();
        AsymSeries { lambda: self.lambda.clone() + other.lambda.clone(), coeffs }
    }

    /// `f(x+1)` expanded at `x`: `(1 + 1/x)^{-(λ+k)} = Σ_j (-1)^j (λ+k)_j / j! x^{-j}`.
    pub fn shift_one(&self) -> Self {
        let n = self.len();
        let mut out: Vec<Option<C>> = vec![None; n];
        for (k, ck) in self.coeffs.iter().enumerate() {
            let mu = self.lambda.clone() + C::constant(hp_int(k as i64));
            let mut binom = ck.clone();
            for j in 0..n - k {
                if j > 0 {
                    let factor = (mu.clone() + C::constant(hp_int(j as i64 - 1))).scale(&(hp_int(-1) / hp_int(j as i64)));
                    binom = binom * factor;
                }
                add_into(&mut out[k + j], binom.clone());
            }
        }
        AsymSeries { lambda: self.lambda.clone(), coeffs: finish(out) }
    }

    /// `Σ_{y >= x} f(y)` by the Euler–Maclaurin formula; valid when the
    /// constant part of `λ` exceeds one.
    pub fn tail(&self) -> Self {
        let n = self.len();
        let mut out: Vec<Option<C>> = vec![None; n];
        let half = hp_int(1) / hp_int(2);
        let jmax = n / 2 + 1;
        let bern: Vec<HpReal> = (1..=jmax)
            .map(|j| {
                let b = bernoulli(2 * j);
                hp_ratio(&(b / BigRational::from_integer(factorial(2 * j))))
            })
            .collect();
        for (k, ck) in self.coeffs.iter().enumerate() {
            let p = self.lambda.clone() + C::constant(hp_int(k as i64));
            // x^{1-p}/(p-1)
            add_into(&mut out[k], ck.clone() * (p.clone() - C::constant(hp_int(1))).recip());
            if k + 1 < n {
                add_into(&mut out[k + 1], ck.scale(&half));
            }
            // B_{2j}/(2j)! (p)_{2j-1} x^{1-p-2j}
            let mut poch = p.clone();
            let mut j = 1;
            while k + 2 * j < n {
                if j > 1 {
                    let a = p.clone() + C::constant(hp_int(2 * j as i64 - 3));
                    let b = p.clone() + C::constant(hp_int(2 * j as i64 - 2));
                    poch = poch * a * b;
                }
                add_into(&mut out[k + 2 * j], (ck.clone() * poch.clone()).scale(&bern[j - 1]));
                j += 1;
            }
        }
        AsymSeries { lambda: self.lambda.clone() - C::constant(hp_int(1)), coeffs: finish(out) }
    }

    /// `g` with `Σ_{y >= x} (-1)^y f(y) = (-1)^x g(x)`, by Boole summation:
    /// `g = Σ_i a_i f^{(i)}` with `a_0 = 1/2`, `a_{2n-1} = -(2^{2n}-1) B_{2n}/(2n)!`.
    pub fn alternating_tail(&self) -> Self {
        let n = self.len();
        let mut out: Vec<Option<C>> = vec![None; n];
        let coeff: Vec<HpReal> = (0..n)
            .map(|i| {
                if i == 0 {
                    hp_int(1) / hp_int(2)
                } else if i % 2 == 0 {
                    hp_int(0)
                } else {
                    let m = i + 1;
                    let two_pow = (BigInt::from(1) << m) - 1;
                    let v = -(bernoulli(m) * BigRational::from_integer(two_pow))
                        / BigRational::from_integer(factorial(m));
                    hp_ratio(&v)
                }
            })
            .collect();
        for (k, ck) in self.coeffs.iter().enumerate() {
            let p = self.lambda.clone() + C::constant(hp_int(k as i64));
            // f^{(i)} of x^{-p} is (-1)^i (p)_i x^{-p-i}
            let mut deriv = ck.clone();
            for i in 0..n - k {
                if i > 0 {
                    deriv = -(deriv * (p.clone() + C::constant(hp_int(i as i64 - 1))));
                }
                if i % 2 == 1 || i == 0 {
                    add_into(&mut out[k + i], deriv.scale(&coeff[i]));
                }
            }
        }
        AsymSeries { lambda: self.lambda.clone(), coeffs: finish(out) }
    }

    /// Value at `x` together with `log10` of the relative size of the last
    /// retained term, a proxy for the truncation error.
    pub fn eval(&self, x: &HpReal) -> (C, f64) {
        let inv = x.recip();
        let mut acc = self.coeffs[self.len() - 1].clone();
        for c in self.coeffs[..self.len() - 1].iter().rev() {
            acc = acc.scale(&inv) + c.clone();
        }
        let ln_x = x.ln();
        let lead = self.coeffs[0].magnitude_log10();
        let last = self.coeffs[self.len() - 1].magnitude_log10() - (self.len() - 1) as f64 * x.log10_abs();
        let rel = if lead.is_finite() { last - lead } else { f64::NEG_INFINITY };
        (acc * C::inv_power(&ln_x, &self.lambda), rel)
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::from(1), |a, b| a * BigInt::from(b))
}

fn add_into<C: Coef>(slot: &mut Option<C>, v: C) {
    *slot = Some(match slot.take() {
        Some(s) => s + v,
        None => v,
    });
}

fn finish<C: Coef>(out: Vec<Option<C>>) -> Vec<C> {
    let zero = out.iter().flatten().next().map(|c| c.clone() - c.clone());
    out.into_iter().map(|c| c.or_else(|| zero.clone()).expect("series has a coefficient")).collect()
}

/// Bernoulli polynomial `B_n(a)` with coefficients in `C`.
fn bernoulli_poly<C: Coef>(n: usize, a: &C, bern: &[HpReal], binom: &[Vec<HpReal>]) -> C {
    // Horner in a: B_n(a) = Σ_j C(n,j) B_j a^{n-j}
    let mut acc = C::constant(bern[0].clone());
    for j in 1..=n {
        acc = acc * a.clone() + C::constant(&binom[n][j] * &bern[j]);
    }
    acc
}

/// Normalised expansion of `Π Γ(x+a_i) / Π Γ(x+b_j)` (equal counts): the
/// returned series equals the ratio up to a constant factor.
pub fn gamma_ratio_expansion<C: Coef>(num: &[C], den: &[C], terms: usize) -> AsymSeries<C> {
    assert_eq!(num.len(), den.len(), "gamma ratio needs matching parameter counts");
    assert!(terms >= 1);
    let sample = num.first().or(den.first()).cloned().unwrap_or_else(|| C::constant(hp_int(0)));
    let zero = sample.clone() - sample.clone();
    let one = zero.clone() + C::constant(hp_int(1));
    let mut lambda = zero.clone();
    for b in den {
        lambda = lambda + b.clone();
    }
    for a in num {
        lambda = lambda - a.clone();
    }
    let bern: Vec<HpReal> = (0..=terms + 1).map(|j| hp_ratio(&bernoulli(j))).collect();
    let binom: Vec<Vec<HpReal>> = (0..=terms + 1)
        .map(|n| {
            let mut row = Vec::with_capacity(n + 1);
            let mut c = BigInt::from(1);
            for j in 0..=n {
                row.push(HpReal::from_bigint(&c));
                c = c * BigInt::from((n - j) as u64) / BigInt::from((j + 1) as u64);
            }
            row
        })
        .collect();
    // l_k = (-1)^{k+1} / (k(k+1)) [Σ B_{k+1}(a_i) - Σ B_{k+1}(b_j)]
    let mut l = vec![zero.clone(); terms];
    for (k, lk) in l.iter_mut().enumerate().skip(1) {
        let mut acc = zero.clone();
        for a in num {
            acc = acc + bernoulli_poly(k + 1, a, &bern, &binom);
        }
        for b in den {
            acc = acc - bernoulli_poly(k + 1, b, &bern, &binom);
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        *lk = acc.scale(&(hp_int(sign) / hp_int((k * (k + 1)) as i64)));
    }
    // exp of the series: n E_n = Σ_k k l_k E_{n-k}
    let mut e = vec![one];
    for n in 1..terms {
        let mut acc = zero.clone();
        for k in 1..=n {
            acc = acc + (l[k].clone() * e[n - k].clone()).scale(&hp_int(k as i64));
        }
        e.push(acc.scale(&(hp_int(1) / hp_int(n as i64))));
    }
    AsymSeries { lambda, coeffs: e }
}
