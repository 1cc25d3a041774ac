//! Values frozen from an independent 50-digit computation (closed forms in
//! single zeta values, and a generic hypergeometric summation routine).

use mzsv_core::hypergeom::{kr_lhs_i, kr_lhs_ii, kr_rhs_i, kr_rhs_ii, pfq, specialized_lhs, Case, KrParamsI, KrParamsII};
use mzsv_core::numerics::gamma::gamma_rational;
use mzsv_core::numerics::parse_decimal;
use mzsv_core::series::{alt_mzsv, mzsv, mzv, zeta};
use mzsv_core::{parse_index, HpReal, PrecisionContext};
use num_rational::BigRational;

const DIGITS: f64 = 36.0;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(40).unwrap()
}

fn q(s: &str) -> BigRational {
    parse_decimal(s).unwrap()
}

fn qs(v: &[&str]) -> Vec<BigRational> {
    v.iter().map(|s| q(s)).collect()
}

fn assert_matches(name: &str, got: &HpReal, expected: &str, digits: f64) {
    let want = HpReal::parse(expected).unwrap();
    let err = (got - &want).abs().log10_abs();
    assert!(err < -digits, "{name}: got {got}, want {expected} (error 1e{err:.1})");
}

#[test]
fn single_zeta_and_gamma() {
    let ctx = ctx();
    let _g = ctx.enter();
    let z = |s: &str| zeta(&HpReal::from_ratio(&q(s)), &ctx).unwrap().value;
    assert_matches("zeta(2.5)", &z("2.5"), "1.341487257250917179756769693348612136623", DIGITS);
    assert_matches("zeta(7)", &z("7"), "1.0083492773819228268397975498497967596", DIGITS);
    let g = |s: &str| gamma_rational(&q(s), &ctx).unwrap();
    assert_matches("gamma(0.3)", &g("0.3"), "2.991568987687590628312516515904917791113", DIGITS);
    assert_matches("gamma(6.1)", &g("6.1"), "142.4519440656787551292328369143472668059", DIGITS - 3.0);
}

#[test]
fn multiple_zeta_values() {
    let ctx = ctx();
    let _g = ctx.enter();
    let cases = [
        ("2,3", "0.2288103976033537597687461489416887919325"),
        ("3,2", "0.7115661975505724320969738060864026120926"),
        ("1,4", "0.09655115998944373446564553142894276403201"),
        ("1,1,2", "1.082323233711138191516003696541167902775"),
    ];
    for (ix, want) in cases {
        assert_matches(&format!("mzv({ix})"), &mzv(&parse_index(ix).unwrap(), &ctx).unwrap().value, want, DIGITS);
    }
    let stars = [
        ("2,3", "1.26573815274672368610011163539872295999"),
        ("1,4", "1.133478915132813660797011017885976932089"),
    ];
    for (ix, want) in stars {
        assert_matches(&format!("mzsv({ix})"), &mzsv(&parse_index(ix).unwrap(), &ctx).unwrap().value, want, DIGITS);
    }
}

#[test]
fn alternating_star_values() {
    let ctx = ctx();
    let _g = ctx.enter();
    let cases = [
        ("1,1", "0.5822405264650125059026563201596801087442"),
        ("1,2", "0.7512855644747464283748363509446562442281"),
    ];
    for (ix, want) in cases {
        assert_matches(&format!("alt_mzsv({ix})"), &alt_mzsv(&parse_index(ix).unwrap(), &ctx).unwrap().value, want, DIGITS);
    }
}

#[test]
fn hypergeometric_series_at_unit_argument() {
    let ctx = ctx();
    let _g = ctx.enter();
    let v = pfq(&qs(&["0.3", "0.6"]), &qs(&["1.7"]), 1, &ctx).unwrap().value;
    assert_matches("2F1(.3,.6;1.7;1)", &v, "1.253246439852046887823771243053688097372", DIGITS);
    let v = pfq(&qs(&["0.9", "0.4"]), &qs(&["1.5"]), -1, &ctx).unwrap().value;
    assert_matches("2F1(.9,.4;1.5;-1)", &v, "0.8383115412809047100331171088352621834152", DIGITS);
    let v = pfq(&qs(&["0.5", "0.5", "0.5"]), &qs(&["1.5", "1.5"]), 1, &ctx).unwrap().value;
    assert_matches("3F2(1/2^3;3/2^2;1)", &v, "1.088793045151801065250344449118806973669", DIGITS);
}

#[test]
fn very_well_poised_generic_sets() {
    let ctx = ctx();
    let _g = ctx.enter();
    let seven = || qs(&["0.7", "0.7"]);
    let p = KrParamsI::new(1, q("2.2"), seven(), seven()).unwrap();
    let want = "0.9769580305101456133229510831125019859793";
    assert_matches("6F5 at -1", &kr_lhs_i(&p, &ctx).unwrap().value, want, DIGITS);
    assert_matches("nested (i)", &kr_rhs_i(&p, &ctx).unwrap().value, want, DIGITS);
    let p = KrParamsII::new(1, q("2.2"), q("0.7"), qs(&["0.7"]), qs(&["0.7"])).unwrap();
    let want = "1.141134521408727014452458604235560282379";
    assert_matches("5F4 at 1", &kr_lhs_ii(&p, &ctx).unwrap().value, want, DIGITS);
    assert_matches("nested (ii)", &kr_rhs_ii(&p, &ctx).unwrap().value, want, DIGITS);
}

#[test]
fn alternating_power_sum() {
    let ctx = ctx();
    let _g = ctx.enter();
    let v = specialized_lhs(Case::A1, &q("1.3"), 2, &ctx).unwrap().value;
    assert_matches("Σ(-1)^m/(m+1.3)^4", &v, "0.3207552769267455509402887254067692195704", DIGITS);
}
