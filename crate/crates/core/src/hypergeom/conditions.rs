//! Hypothesis checks for the two very-well-poised identities, in exact
//! rational arithmetic.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{KrParamsI, KrParamsII};
use crate::numerics::scalar::{is_nonpositive_integer, ratio_int};

#[derive(Clone, Debug, PartialEq)]
pub struct ConditionEntry {
    pub description: String,
    pub lhs_value: BigRational,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConditionReport {
    pub entries: Vec<ConditionEntry>,
    pub overall: bool,
}

impl ConditionReport {
    fn new(entries: Vec<ConditionEntry>) -> Self {
        let overall = entries.iter().all(|e| e.satisfied);
        ConditionReport { entries, overall }
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionEntry> {
        self.entries.iter().filter(|e| !e.satisfied)
    }

    /// One line naming every failed condition.
    pub fn summary(&self) -> String {
        if self.overall {
            return format!("all {} conditions hold", self.entries.len());
        }
        let failed: Vec<String> = self
            .failures()
            .map(|e| format!("{} (value {})", e.description, decimal(&e.lhs_value)))
            .collect();
        format!("{} of {} conditions fail: {}", failed.len(), self.entries.len(), failed.join("; "))
    }
}

fn decimal(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{:.6}", crate::numerics::hp::ratio_to_f64(r))
    }
}

fn not_pole(description: String, value: BigRational) -> ConditionEntry {
    let satisfied = !is_nonpositive_integer(&value);
    ConditionEntry { description, lhs_value: value, satisfied }
}

fn positive(description: String, value: BigRational) -> ConditionEntry {
    let satisfied = value.is_positive();
    ConditionEntry { description, lhs_value: value, satisfied }
}

/// Every choice vector over `{1,2}` for the free slots, in binary-counter order.
fn choices(free: usize) -> impl Iterator<Item = Vec<i64>> {
    (0u64..1 << free).map(move |mask| (0..free).map(|j| 1 + (mask >> j & 1) as i64).collect())
}

fn render_choice(first: usize, a: &[i64]) -> String {
    let items: Vec<String> = a.iter().enumerate().map(|(j, v)| format!("A{}={v}", first + j)).collect();
    items.join(",")
}

/// Hypotheses of the `-1` identity; `e_i = 1+a-b_i-c_i`.
pub fn kr_conditions_i(p: &KrParamsI) -> ConditionReport {
    let s = p.s as usize;
    let one = BigRational::one();
    let a1 = &p.a + &one;
    let mut entries = Vec::new();
    for i in 0..=s {
        entries.push(not_pole(format!("1+a-b{} not in Z<=0", i + 1), &a1 - &p.b[i]));
        entries.push(not_pole(format!("1+a-c{} not in Z<=0", i + 1), &a1 - &p.c[i]));
    }
    let total: BigRational = p.b.iter().chain(&p.c).fold(BigRational::zero(), |acc, x| acc + x);
    entries.push(positive(
        "(2s+1)(a+1) - 2*sum(b+c) > 0".into(),
        ratio_int(2 * s as i64 + 1) * &a1 - ratio_int(2) * total,
    ));
    let e: Vec<BigRational> = (0..=s).map(|i| &a1 - &p.b[i] - &p.c[i]).collect();
    // r = 2..s+1 (1-based); free choices A_r..A_s, A_{s+1} = 1.
    for r in 2..=s + 1 {
        for a in choices(s + 1 - r) {
            let mut sum = e[s].clone();
            for (j, &ai) in a.iter().enumerate() {
                sum += ratio_int(ai) * &e[r - 1 + j];
            }
            let desc = if a.is_empty() {
                format!("r={r}: 1+a-b{0}-c{0} > 0", s + 1)
            } else {
                format!("r={r} [{}]: sum A_i(1+a-b_i-c_i) > 0", render_choice(r, &a))
            };
            entries.push(positive(desc, sum));
        }
    }
    ConditionReport::new(entries)
}

/// Hypotheses of the `+1` identity.
pub fn kr_conditions_ii(p: &KrParamsII) -> ConditionReport {
    let s = p.s as usize;
    let one = BigRational::one();
    let a1 = &p.a + &one;
    let mut entries = Vec::new();
    for i in 0..s {
        entries.push(not_pole(format!("1+a-b{} not in Z<=0", i + 1), &a1 - &p.b[i]));
    }
    entries.push(not_pole("1+a-c0 not in Z<=0".into(), &a1 - &p.c0));
    for i in 0..s {
        entries.push(not_pole(format!("1+a-c{} not in Z<=0", i + 1), &a1 - &p.c[i]));
    }
    let total: BigRational = p.b.iter().chain(&p.c).fold(BigRational::zero(), |acc, x| acc + x);
    entries.push(positive(
        "2s(a+1) - 2c0 - 2*sum(b+c) > 0".into(),
        ratio_int(2 * s as i64) * &a1 - ratio_int(2) * &p.c0 - ratio_int(2) * total,
    ));
    let e: Vec<BigRational> = (0..s).map(|i| &a1 - &p.b[i] - &p.c[i]).collect();
    // r = 2..s; free choices A_r..A_{s-1}, A_s = 1.
    for r in 2..=s {
        for a in choices(s - r) {
            let mut sum = e[s - 1].clone();
            for (j, &ai) in a.iter().enumerate() {
                sum += ratio_int(ai) * &e[r - 1 + j];
            }
            let desc = if a.is_empty() {
                format!("r={r}: 1+a-b{0}-c{0} > 0", s)
            } else {
                format!("r={r} [{}]: sum A_i(1+a-b_i-c_i) > 0", render_choice(r, &a))
            };
            entries.push(positive(desc, sum));
        }
    }
    // c0 inequality; free choices A_2..A_{s-1}, A_s = 1 (empty sum when s = 1).
    let base = &a1 - &p.c0 - &p.b[0] - &p.c[0];
    if s == 1 {
        entries.push(positive("1+a-c0-b1-c1 > 0".into(), base));
    } else {
        for a in choices(s - 2) {
            let mut sum = &base + &e[s - 1];
            for (j, &ai) in a.iter().enumerate() {
                sum += ratio_int(ai) * &e[1 + j];
            }
            let desc = if a.is_empty() {
                "1+a-c0-b1-c1 + sum A_i(1+a-b_i-c_i) > 0".to_string()
            } else {
                format!("[{}]: 1+a-c0-b1-c1 + sum A_i(1+a-b_i-c_i) > 0", render_choice(2, &a))
            };
            entries.push(positive(desc, sum));
        }
    }
    ConditionReport::new(entries)
}
