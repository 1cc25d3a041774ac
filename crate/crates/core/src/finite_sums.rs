//! Pochhammer symbols, finite multiple harmonic sums and the closed forms of
//! their derivatives at `α = 1`.
//!
//! Everything here is generic over [`Field`], so the same code yields exact
//! rationals, `f64` estimates and high-precision values. For [`HpReal`]
//! results, enter a [`PrecisionContext`] first.
//!
//! [`HpReal`]: crate::numerics::HpReal
//! [`PrecisionContext`]: crate::numerics::PrecisionContext

use crate::error::{Error, Result};
use crate::indices::compositions;
use crate::numerics::Field;

/// `(a)_m = a(a+1)…(a+m-1)`, with `(a)_0 = 1`.
pub fn pochhammer<F: Field>(a: &F, m: u64) -> F {
    let mut acc = F::one();
    for i in 0..m {
        acc = acc * (a.clone() + F::from_int(i as i64));
    }
    acc
}

/// `S_m(k₁,…,kₙ) = Σ_{0 <= m₁ < … < mₙ < m} Π (mᵢ+1)^{-kᵢ}`; the empty index gives 1.
pub fn strict_sum<F: Field>(parts: &[u32], m: u64) -> F {
    let n = parts.len();
    // a[i] = A_i(j): sum over the first i parts with all variables below j.
    let mut a = vec![F::zero(); n + 1];
    a[0] = F::one();
    for j in 0..m {
        // A_i(j+1) = A_i(j) + (j+1)^{-k_i} A_{i-1}(j); update from the top so
        // A_{i-1}(j) is still the old value.
        for i in (1..=n).rev() {
            let t = a[i - 1].clone() * F::inv_int_pow(j + 1, parts[i - 1]);
            a[i] = a[i].clone() + t;
        }
    }
    a[n].clone()
}

/// `S⋆_m(k₁,…,kₙ) = Σ_{0 <= m₁ <= … <= mₙ <= m} Π (mᵢ+1)^{-kᵢ}`; the empty index gives 1.
pub fn star_sum<F: Field>(parts: &[u32], m: u64) -> F {
    let n = parts.len();
    // b[i] = B_i(j): variables at most j.
    let mut b = vec![F::zero(); n + 1];
    b[0] = F::one();
    for j in 0..=m {
        // B_i(j) = B_i(j-1) + (j+1)^{-k_i} B_{i-1}(j); bottom-up so B_{i-1}(j) is new.
        for i in 1..=n {
            let t = b[i - 1].clone() * F::inv_int_pow(j + 1, parts[i - 1]);
            b[i] = b[i].clone() + t;
        }
    }
    b[n].clone()
}

/// `S_m(1^j)` and `S⋆_m(1^j)` for `j = 0..=r`, advanced one `m` at a time.
#[derive(Clone, Debug)]
pub struct OnesSums<F> {
    m: u64,
    strict: Vec<F>,
    star: Vec<F>,
}

impl<F: Field> OnesSums<F> {
    /// State at `m = 0`.
    pub fn new(r: usize) -> Self {
        let mut strict = vec![F::zero(); r + 1];
        strict[0] = F::one();
        // S⋆_0(1^j) = 1 for every j: only m₁ = … = m_j = 0.
        let star = vec![F::one(); r + 1];
        OnesSums { m: 0, strict, star }
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn strict(&self, j: usize) -> &F {
        &self.strict[j]
    }

    pub fn star(&self, j: usize) -> &F {
        &self.star[j]
    }

    /// Moves from `m` to `m + 1`.
    pub fn advance(&mut self) {
        let w = F::one() / F::from_int(self.m as i64 + 1); // 1/(m+1) for the strict step
        for i in (1..self.strict.len()).rev() {
            let t = self.strict[i - 1].clone() * w.clone();
            self.strict[i] = self.strict[i].clone() + t;
        }
        self.m += 1;
        let w = F::one() / F::from_int(self.m as i64 + 1);
        for i in 1..self.star.len() {
            let t = self.star[i - 1].clone() * w.clone();
            self.star[i] = self.star[i].clone() + t;
        }
    }
}

fn factorial<F: Field>(n: u64) -> F {
    (1..=n).fold(F::one(), |acc, k| acc * F::from_int(k as i64))
}

/// `d/dα (α)_m` at `α = 1`, i.e. `m! · S_m(1)`.
pub fn d1_pochhammer_at1<F: Field>(m: u64) -> F {
    factorial::<F>(m) * strict_sum::<F>(&[1], m)
}

/// `d/dα 1/(2α)_m` at `α = 1`: `-2/(m+1)! · (S⋆_m(1) - 1)`.
pub fn d1_inv_pochhammer2a_at1<F: Field>(m: u64) -> F {
    let h = star_sum::<F>(&[1], m) - F::one();
    -(F::from_int(2) * h) / factorial::<F>(m + 1)
}

/// `(1/r!) d^r/dα^r [1/(2-α)_{m+1}]` at `α = 1`, i.e. `S⋆_m(1^r)/(m+1)!`.
pub fn dr_inv_pochhammer_2minus_at1<F: Field>(m: u64, r: u32) -> F {
    let ones = vec![1u32; r as usize];
    star_sum::<F>(&ones, m) / factorial::<F>(m + 1)
}

/// First closed form of `(1/r!) d^r/dα^r [(α)_m/(2-α)_{m+1}]` at `α = 1`:
/// `(1/(m+1)) Σ_{i=0}^r S_m(1^{r-i}) S⋆_m(1^i)`.
pub fn dr_ratio_product_form<F: Field>(m: u64, r: u32) -> F {
    let mut acc = F::zero();
    for i in 0..=r as usize {
        let strict = strict_sum::<F>(&vec![1; r as usize - i], m);
        let star = star_sum::<F>(&vec![1; i], m);
        acc = acc + strict * star;
    }
    acc / F::from_int(m as i64 + 1)
}

/// Second closed form: `Σ_i 2^i Σ_{k₁+…+k_{i+1}=r+1} S_m(k₁,…,k_i)/(m+1)^{k_{i+1}}`.
/// Terms with `i > m` vanish because a strict sum of depth `i` needs `m >= i`.
pub fn dr_ratio_composition_form<F: Field>(m: u64, r: u32) -> F {
    let mut acc = F::zero();
    for i in 0..=(r as u64).min(m) as u32 {
        let mut inner = F::zero();
        for comp in compositions(r + 1, i + 1).expect("1 <= i+1 <= r+1") {
            let (head, last) = comp.split_at(i as usize);
            inner = inner + strict_sum::<F>(head, m) * F::inv_int_pow(m + 1, last[0]);
        }
        acc = acc + F::from_int(1 << i) * inner;
    }
    acc
}

/// `(1/r!) d^r/dα^r [(α)_m/(2-α)_{m+1}]` at `α = 1`, computed by both closed
/// forms. They must agree to relative accuracy `rel_tol` (use `0.0` for exact
/// scalars); the product form is returned.
pub fn dr_ratio_at1<F: Field>(m: u64, r: u32, rel_tol: f64) -> Result<F> {
    let a = dr_ratio_product_form::<F>(m, r);
    let b = dr_ratio_composition_form::<F>(m, r);
    let diff = (a.clone() - b.clone()).abs_val().to_f64_lossy();
    let scale = a.abs_val().to_f64_lossy().max(1.0);
    if diff > rel_tol * scale || (rel_tol == 0.0 && a != b) {
        return Err(Error::Consistency(format!(
            "closed forms of the order-{r} derivative disagree at m={m}: {a:?} vs {b:?}"
        )));
    }
    Ok(a)
}
