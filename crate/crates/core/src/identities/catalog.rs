//! The registered identities: schemas, default grids and both sides.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::params::{ParamSpec, Params};
use super::{Block, IdentityDescriptor};
use crate::error::Result;
use crate::finite_sums::{dr_inv_pochhammer_2minus_at1, dr_ratio_at1, pochhammer};
use crate::hypergeom::{kr_lhs_i, kr_lhs_ii, kr_rhs_i, kr_rhs_ii, specialized_lhs, specialized_rhs, Case, KrParamsI, KrParamsII};
use crate::indices::{compositions, Index};
use crate::numerics::gamma::gamma;
use crate::numerics::scalar::{ratio, ratio_int};
use crate::numerics::{derivative_at, derivative_error_bound, HpReal, PrecisionContext};
use crate::series::{alt_mzsv, mzsv, mzv, weighted_product_series, zeta_int, EvalDiagnostics, Evaluated, Strategy};

fn exact(value: HpReal, ctx: &PrecisionContext) -> Evaluated {
    Evaluated { value, diagnostics: EvalDiagnostics::exact(0, ctx) }
}

/// `Σ c_j v_j` with errors and tails scaled by `|c_j|`.
fn lin(terms: Vec<(BigRational, Evaluated)>, ctx: &PrecisionContext) -> Evaluated {
    let mut value = HpReal::zero_at(ctx.working_bits());
    let mut tail = HpReal::zero_at(ctx.working_bits());
    let mut error = 0.0;
    let mut used = 0;
    let strategy = terms.first().map_or(Strategy::Exact, |(_, e)| e.diagnostics.strategy);
    for (c, e) in &terms {
        let ch = HpReal::from_ratio(c);
        value += &ch * &e.value;
        tail += &ch * &e.diagnostics.tail_correction;
        error += ch.abs().to_f64() * e.diagnostics.error_estimate;
        used += e.diagnostics.terms_used;
    }
    Evaluated {
        value,
        diagnostics: EvalDiagnostics { terms_used: used, tail_correction: tail, error_estimate: error, strategy },
    }
}

fn scaled(c: BigRational, e: Evaluated, ctx: &PrecisionContext) -> Evaluated {
    lin(vec![(c, e)], ctx)
}

fn rep(k: u32, n: u32) -> Vec<u32> {
    vec![k; n as usize]
}

fn cat(pieces: &[&[u32]]) -> Vec<u32> {
    pieces.concat()
}

fn star(parts: Vec<u32>, ctx: &PrecisionContext) -> Result<Evaluated> {
    mzsv(&Index::new(parts)?, ctx)
}

fn strict(parts: Vec<u32>, ctx: &PrecisionContext) -> Result<Evaluated> {
    mzv(&Index::new(parts)?, ctx)
}

fn alt_star(parts: Vec<u32>, ctx: &PrecisionContext) -> Result<Evaluated> {
    alt_mzsv(&Index::new(parts)?, ctx)
}

fn pow2(n: u32) -> BigRational {
    BigRational::from_integer(BigInt::one() << n)
}

// ---- known identities for ζ(2s) and ζ(2s+1) ----

fn remark1_even_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let s = p.uint("s")?;
    let c = ratio_int(2) * (BigRational::one() - pow2(2 * s - 1).recip());
    Ok(scaled(c, zeta_int(2 * s, ctx)?, ctx))
}

fn remark1_even_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    star(rep(2, p.uint("s")?), ctx)
}

fn remark1_odd_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let s = p.uint("s")?;
    Ok(scaled(ratio_int(2), zeta_int(2 * s + 1, ctx)?, ctx))
}

fn remark1_odd_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let s = p.uint("s")?;
    star(cat(&[&[1], &rep(2, s)]), ctx)
}

// ---- one-parameter specializations ----

fn spec_side(case: Case, lhs: bool, p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let alpha = p.real("alpha")?;
    let s = p.uint("s")?;
    if lhs {
        specialized_lhs(case, &alpha, s, ctx)
    } else {
        specialized_rhs(case, &alpha, s, ctx)
    }
}

fn a1_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    spec_side(Case::A1, true, p, ctx)
}
fn a1_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    spec_side(Case::A1, false, p, ctx)
}
fn a2_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    spec_side(Case::A2, true, p, ctx)
}
fn a2_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    spec_side(Case::A2, false, p, ctx)
}
fn a3_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    spec_side(Case::A3, true, p, ctx)
}
fn a3_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    spec_side(Case::A3, false, p, ctx)
}
fn a4_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    spec_side(Case::A4, true, p, ctx)
}
fn a4_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    spec_side(Case::A4, false, p, ctx)
}

/// `d/dα [Γ(α)²/(2Γ(2α))]` at `α = 1` by finite differences.
fn a1_prefactor_lhs(_: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let f = |x: &HpReal, c: &PrecisionContext| -> Result<HpReal> {
        let g = gamma(x, c)?;
        Ok(&g * &g / (gamma(&(x * HpReal::from_i64(2)), c)? * HpReal::from_i64(2)))
    };
    let value = derivative_at(f, &HpReal::from_i64(1), 1, ctx)?;
    let error_estimate = derivative_error_bound(&value, ctx);
    Ok(Evaluated {
        diagnostics: EvalDiagnostics { error_estimate, strategy: Strategy::Direct, ..EvalDiagnostics::exact(0, ctx) },
        value,
    })
}

fn a1_prefactor_rhs(_: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    Ok(exact(HpReal::from_i64(-1), ctx))
}

// ---- sums of ζ⋆ over 2's with one 3 inserted ----

fn eq1_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let s = p.uint("s")?;
    let c = ratio_int(4 * s as i64) * (BigRational::one() - pow2(2 * s).recip());
    Ok(scaled(c, zeta_int(2 * s + 1, ctx)?, ctx))
}

fn eq1_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let s = p.uint("s")?;
    let mut terms = vec![(ratio_int(1), star(cat(&[&[3], &rep(2, s - 1)]), ctx)?)];
    for i in 1..=s {
        terms.push((ratio_int(2), star(cat(&[&rep(2, i - 1), &[3], &rep(2, s - i)]), ctx)?));
    }
    Ok(lin(terms, ctx))
}

fn a2_cyclic_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let s = p.uint("s")?;
    Ok(scaled(ratio_int(2 * s as i64 - 1), zeta_int(2 * s, ctx)?, ctx))
}

fn a2_cyclic_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let s = p.uint("s")?;
    let mut terms = vec![(ratio_int(1), star(rep(2, s), ctx)?)];
    for i in 0..s.saturating_sub(1) {
        terms.push((ratio_int(1), star(cat(&[&[1], &rep(2, i), &[3], &rep(2, s - 2 - i)]), ctx)?));
    }
    Ok(lin(terms, ctx))
}

// ---- derivative closed forms against the finite-difference oracle ----

fn factorial(r: u32) -> BigRational {
    BigRational::from_integer((1..=r as u64).fold(BigInt::one(), |acc, k| acc * k))
}

fn oracle(f: impl Fn(&HpReal) -> HpReal, r: u32, ctx: &PrecisionContext) -> Result<Evaluated> {
    let d = derivative_at(|x: &HpReal, _: &PrecisionContext| Ok(f(x)), &HpReal::from_i64(1), r, ctx)?;
    let value = d / HpReal::from_ratio(&factorial(r));
    let error_estimate = derivative_error_bound(&value, ctx);
    Ok(Evaluated {
        diagnostics: EvalDiagnostics { error_estimate, strategy: Strategy::Direct, ..EvalDiagnostics::exact(0, ctx) },
        value,
    })
}

fn eq2_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let (m, r) = (p.uint("m")? as u64, p.uint("r")?);
    let v: BigRational = dr_inv_pochhammer_2minus_at1(m, r);
    Ok(Evaluated { value: HpReal::from_ratio(&v), diagnostics: EvalDiagnostics::exact(m, ctx) })
}

fn eq2_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let (m, r) = (p.uint("m")? as u64, p.uint("r")?);
    oracle(|x| pochhammer(&(HpReal::from_i64(2) - x), m + 1).recip(), r, ctx)
}

fn eq5_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let (m, r) = (p.uint("m")? as u64, p.uint("r")?);
    let v: BigRational = dr_ratio_at1(m, r, 0.0)?;
    Ok(Evaluated { value: HpReal::from_ratio(&v), diagnostics: EvalDiagnostics::exact(m, ctx) })
}

fn eq5_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let (m, r) = (p.uint("m")? as u64, p.uint("r")?);
    oracle(|x| pochhammer(x, m) / pochhammer(&(HpReal::from_i64(2) - x), m + 1), r, ctx)
}

// ---- weighted product series and their expansions ----

fn ones_then_twos(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let (r, s) = (p.uint("r")?, p.uint("s")?);
    star(cat(&[&rep(1, r + 1), &rep(2, s - 1)]), ctx)
}

fn head_then_twos(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let (r, s) = (p.uint("r")?, p.uint("s")?);
    star(cat(&[&[r + 2], &rep(2, s - 1)]), ctx)
}

fn wps_plain(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    weighted_product_series(p.uint("r")?, p.uint("s")?, false, ctx)
}

fn wps_alternating(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    weighted_product_series(p.uint("r")?, p.uint("s")?, true, ctx)
}

/// The displayed expansions for `r = 0..3`, with last part based at `base`.
fn expansion_table(r: u32, base: u32) -> Vec<(i64, Vec<u32>)> {
    let b = base;
    match r {
        0 => vec![(2, vec![b])],
        1 => vec![(4, vec![1, b]), (-2, vec![b + 1])],
        2 => vec![(8, vec![1, 1, b]), (-4, vec![2, b]), (-4, vec![1, b + 1]), (2, vec![b + 2])],
        _ => vec![
            (16, vec![1, 1, 1, b]),
            (-8, vec![2, 1, b]),
            (-8, vec![1, 2, b]),
            (-8, vec![1, 1, b + 1]),
            (4, vec![3, b]),
            (4, vec![2, b + 1]),
            (4, vec![1, b + 2]),
            (-2, vec![b + 3]),
        ],
    }
}

fn expansion(r: u32, alternating: bool, p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let s = p.uint("s")?;
    let base = if alternating { 2 * s } else { 2 * s - 1 };
    let mut terms = Vec::new();
    for (c, parts) in expansion_table(r, base) {
        let v = if alternating { alt_star(parts, ctx)? } else { star(parts, ctx)? };
        terms.push((ratio_int(c), v));
    }
    Ok(lin(terms, ctx))
}

fn with_r(p: &Params, r: u32) -> Params {
    p.clone().with("r", super::params::ParamValue::Int(r as i64))
}

macro_rules! expansion_sides {
    ($($lhs:ident, $rhs:ident, $r:expr, $alt:expr, $lhs_body:ident;)*) => {$(
        fn $lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
            $lhs_body(&with_r(p, $r), ctx)
        }
        fn $rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
            expansion($r, $alt, p, ctx)
        }
    )*};
}

expansion_sides! {
    eq3_r0_lhs, eq3_r0_rhs, 0, false, ones_then_twos;
    eq3_r1_lhs, eq3_r1_rhs, 1, false, ones_then_twos;
    eq3_r2_lhs, eq3_r2_rhs, 2, false, ones_then_twos;
    eq3_r3_lhs, eq3_r3_rhs, 3, false, ones_then_twos;
    eq4_r0_lhs, eq4_r0_rhs, 0, true, head_then_twos;
    eq4_r1_lhs, eq4_r1_rhs, 1, true, head_then_twos;
    eq4_r2_lhs, eq4_r2_rhs, 2, true, head_then_twos;
    eq4_r3_lhs, eq4_r3_rhs, 3, true, head_then_twos;
}

/// `Σ_{i=0}^r sign_i 2^{i+1} Σ_{k ∈ comp(r+1, i+1)} f(k₁,…,k_i, k_{i+1}+shift)`.
fn composition_sum(
    r: u32,
    shift: u32,
    signed: bool,
    ctx: &PrecisionContext,
    f: impl Fn(Vec<u32>, &PrecisionContext) -> Result<Evaluated>,
) -> Result<Evaluated> {
    let mut terms = Vec::new();
    for i in 0..=r {
        let mut c = pow2(i + 1);
        if signed && (r - i) % 2 == 1 {
            c = -c;
        }
        for mut k in compositions(r + 1, i + 1)? {
            *k.last_mut().expect("nonempty composition") += shift;
            terms.push((c.clone(), f(k, ctx)?));
        }
    }
    Ok(lin(terms, ctx))
}

fn addendum_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let (r, s) = (p.uint("r")?, p.uint("s")?);
    composition_sum(r, 2 * s - 2, false, ctx, strict)
}

fn two_one_eq3_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let (r, s) = (p.uint("r")?, p.uint("s")?);
    composition_sum(r, 2 * s - 2, true, ctx, star)
}

fn two_one_eq4_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    let (r, s) = (p.uint("r")?, p.uint("s")?);
    composition_sum(r, 2 * s - 1, true, ctx, alt_star)
}

// ---- very-well-poised identities ----

/// Generic sets use `a = 11/5` and every `b_i = c_i = α` (and `c0 = α`).
fn theorem_a_i_params(p: &Params) -> Result<KrParamsI> {
    let alpha = p.real("alpha")?;
    let s = p.uint("s")?;
    match p.label("case")? {
        "generic" => {
            let n = s as usize + 1;
            KrParamsI::new(s, ratio(11, 5), vec![alpha.clone(); n], vec![alpha; n])
        }
        other => other.parse::<Case>()?.params_i(&alpha, s),
    }
}

fn theorem_a_ii_params(p: &Params) -> Result<KrParamsII> {
    let alpha = p.real("alpha")?;
    let s = p.uint("s")?;
    match p.label("case")? {
        "generic" => {
            let n = s as usize;
            KrParamsII::new(s, ratio(11, 5), alpha.clone(), vec![alpha.clone(); n], vec![alpha; n])
        }
        other => other.parse::<Case>()?.params_ii(&alpha, s),
    }
}

fn theorem_a_i_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    kr_lhs_i(&theorem_a_i_params(p)?, ctx)
}
fn theorem_a_i_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    kr_rhs_i(&theorem_a_i_params(p)?, ctx)
}
fn theorem_a_ii_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    kr_lhs_ii(&theorem_a_ii_params(p)?, ctx)
}
fn theorem_a_ii_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Evaluated> {
    kr_rhs_ii(&theorem_a_ii_params(p)?, ctx)
}

// ---- the registry ----

const ALPHAS: &str = "0.6,1,1.3";

fn entry(
    id: &'static str,
    anchor: &'static str,
    params_schema: Vec<ParamSpec>,
    default_grid: Vec<Block>,
    lhs: super::Side,
    rhs: super::Side,
) -> IdentityDescriptor {
    IdentityDescriptor { id, anchor, params_schema, default_grid, lhs, rhs }
}

pub(super) fn build() -> Vec<IdentityDescriptor> {
    let s = |lo, hi| ParamSpec::int("s", lo, hi);
    let r = |hi| ParamSpec::int("r", 0, hi);
    let alpha = |gt, lt| ParamSpec::real("alpha", gt, lt);
    let positive = Some((0, 1));
    let mr = || vec![ParamSpec::int("m", 0, 40), ParamSpec::int("r", 0, 8)];
    let mr_grid = || vec![vec![("m", "0..15"), ("r", "0..4")]];
    let eq3_exp = |id, anchor, lhs, rhs| entry(id, anchor, vec![s(2, 8)], vec![vec![("s", "2..3")]], lhs, rhs);
    let eq4_exp = |id, anchor, lhs, rhs| entry(id, anchor, vec![s(1, 8)], vec![vec![("s", "1..2")]], lhs, rhs);
    vec![
        entry(
            "remark1_even",
            "known identity: 2(1-2^(1-2s))ζ(2s) = ζ⋆(2^s)",
            vec![s(1, 12)],
            vec![vec![("s", "1..5")]],
            remark1_even_lhs,
            remark1_even_rhs,
        ),
        entry(
            "remark1_odd",
            "known identity: 2ζ(2s+1) = ζ⋆(1,2^s)",
            vec![s(1, 12)],
            vec![vec![("s", "1..5")]],
            remark1_odd_lhs,
            remark1_odd_rhs,
        ),
        entry(
            "a1_specialized",
            "A1 specialization: Σ(-1)^m/(m+α)^(2s) as a nested sum",
            vec![alpha(positive, None), s(1, 6)],
            vec![vec![("alpha", ALPHAS), ("s", "1..3")]],
            a1_lhs,
            a1_rhs,
        ),
        entry(
            "a1_prefactor_derivative",
            "A1 specialization: d/dα Γ(α)²/(2Γ(2α)) at α=1 is -1",
            vec![],
            vec![vec![]],
            a1_prefactor_lhs,
            a1_prefactor_rhs,
        ),
        entry(
            "eq1",
            "4s(1-2^(-2s))ζ(2s+1) = ζ⋆(3,2^(s-1)) + 2Σ ζ⋆(2^(i-1),3,2^(s-i))",
            vec![s(1, 8)],
            vec![vec![("s", "1..4")]],
            eq1_lhs,
            eq1_rhs,
        ),
        entry(
            "a2_specialized",
            "A2 specialization: ζ(2s-1; α) as a nested sum",
            vec![alpha(positive, None), s(2, 6)],
            vec![vec![("alpha", ALPHAS), ("s", "2..3")]],
            a2_lhs,
            a2_rhs,
        ),
        entry(
            "a2_cyclic",
            "A2 cyclic sum example: (2s-1)ζ(2s) = ζ⋆(2^s) + Σ ζ⋆(1,2^i,3,2^(s-2-i))",
            vec![s(1, 8)],
            vec![vec![("s", "2..5")]],
            a2_cyclic_lhs,
            a2_cyclic_rhs,
        ),
        entry(
            "a3_specialized",
            "A3 specialization: Σ (α)_m/((2-α)_(m+1)(m+1)^(2s-2)) as a nested sum",
            vec![alpha(None, Some((2, 1))), s(2, 6)],
            vec![vec![("alpha", ALPHAS), ("s", "2..3")]],
            a3_lhs,
            a3_rhs,
        ),
        entry(
            "eq2_check",
            "A3 derivative: (1/r!) d^r/dα^r 1/(2-α)_(m+1) at α=1 = S⋆_m(1^r)/(m+1)!",
            mr(),
            mr_grid(),
            eq2_lhs,
            eq2_rhs,
        ),
        entry(
            "eq3",
            "A3 derivative: ζ⋆(1^(r+1),2^(s-1)) = weighted product series",
            vec![r(6), s(2, 6)],
            vec![vec![("r", "0..3"), ("s", "2..3")]],
            ones_then_twos,
            wps_plain,
        ),
        eq3_exp("eq3_expansion_r0", "A3 expansion: ζ⋆(1,2^(s-1)) = 2ζ(2s-1)", eq3_r0_lhs, eq3_r0_rhs),
        eq3_exp("eq3_expansion_r1", "A3 expansion: ζ⋆(1,1,2^(s-1)) = 4ζ⋆(1,2s-1) - 2ζ(2s)", eq3_r1_lhs, eq3_r1_rhs),
        eq3_exp("eq3_expansion_r2", "A3 expansion: ζ⋆(1^3,2^(s-1)) in depth <= 3 ζ⋆", eq3_r2_lhs, eq3_r2_rhs),
        eq3_exp("eq3_expansion_r3", "A3 expansion: ζ⋆(1^4,2^(s-1)) in depth <= 4 ζ⋆", eq3_r3_lhs, eq3_r3_rhs),
        entry(
            "a4_specialized",
            "A4 specialization: Σ(-1)^m (α)_m/((2-α)_(m+1)(m+1)^(2s-1)) as a nested sum",
            vec![alpha(None, Some((3, 2))), s(1, 6)],
            vec![vec![("alpha", ALPHAS), ("s", "1..3")]],
            a4_lhs,
            a4_rhs,
        ),
        entry(
            "eq4",
            "A4 derivative: ζ⋆(r+2,2^(s-1)) = alternating weighted product series",
            vec![r(6), s(1, 6)],
            vec![vec![("r", "0..3"), ("s", "1..2")]],
            head_then_twos,
            wps_alternating,
        ),
        eq4_exp("eq4_expansion_r0", "A4 expansion: ζ⋆(2^s) = 2ζ⋆₋(2s)", eq4_r0_lhs, eq4_r0_rhs),
        eq4_exp("eq4_expansion_r1", "A4 expansion: ζ⋆(3,2^(s-1)) = 4ζ⋆₋(1,2s) - 2ζ⋆₋(2s+1)", eq4_r1_lhs, eq4_r1_rhs),
        eq4_exp("eq4_expansion_r2", "A4 expansion: ζ⋆(4,2^(s-1)) in depth <= 3 ζ⋆₋", eq4_r2_lhs, eq4_r2_rhs),
        eq4_exp("eq4_expansion_r3", "A4 expansion: ζ⋆(5,2^(s-1)) in depth <= 4 ζ⋆₋", eq4_r3_lhs, eq4_r3_rhs),
        entry(
            "eq5_check",
            "A4 derivative: both closed forms of (1/r!) d^r/dα^r (α)_m/(2-α)_(m+1) at α=1",
            mr(),
            mr_grid(),
            eq5_lhs,
            eq5_rhs,
        ),
        entry(
            "addendum_mzv_form",
            "Addendum: weighted product series = Σ 2^(i+1) ζ(k_1,…,k_i,k_(i+1)+2s-2)",
            vec![r(6), s(2, 6)],
            vec![vec![("r", "0..4"), ("s", "2..3")]],
            wps_plain,
            addendum_rhs,
        ),
        entry(
            "two_one_eq3",
            "Addendum: two-one formula for ζ⋆(1^(r+1),2^(s-1))",
            vec![r(6), s(2, 6)],
            vec![vec![("r", "0..4"), ("s", "2..3")]],
            ones_then_twos,
            two_one_eq3_rhs,
        ),
        entry(
            "two_one_eq4",
            "Addendum: two-one type formula for ζ⋆(r+2,2^(s-1)) in ζ⋆₋",
            vec![r(6), s(1, 6)],
            vec![vec![("r", "0..4"), ("s", "1..2")]],
            head_then_twos,
            two_one_eq4_rhs,
        ),
        entry(
            "theoremA_i",
            "Theorem A (i): very-well-poised (2s+4)F(2s+3) at z=-1 = nested sum",
            vec![ParamSpec::label("case", &["a1", "a4", "generic"]), alpha(positive, Some((3, 2))), s(1, 4)],
            vec![
                vec![("case", "a1"), ("alpha", ALPHAS), ("s", "1..2")],
                vec![("case", "a4"), ("alpha", ALPHAS), ("s", "1..2")],
                vec![("case", "generic"), ("alpha", "0.7"), ("s", "1")],
            ],
            theorem_a_i_lhs,
            theorem_a_i_rhs,
        ),
        entry(
            "theoremA_ii",
            "Theorem A (ii): very-well-poised (2s+3)F(2s+2) at z=1 = nested sum",
            vec![ParamSpec::label("case", &["a2", "a3", "generic"]), alpha(positive, Some((2, 1))), s(1, 4)],
            vec![
                vec![("case", "a2"), ("alpha", ALPHAS), ("s", "2..3")],
                vec![("case", "a3"), ("alpha", ALPHAS), ("s", "2..3")],
                vec![("case", "generic"), ("alpha", "0.7"), ("s", "1")],
            ],
            theorem_a_ii_lhs,
            theorem_a_ii_rhs,
        ),
    ]
}
