use mzsv_core::identities::{find, list_identities, verify, verify_suite, Grid, ParamValue, Params};
use mzsv_core::{HpReal, PrecisionContext};

fn ctx() -> PrecisionContext {
    PrecisionContext::new(30).unwrap()
}

fn rs(r: i64, s: i64) -> Params {
    Params::new().with("r", ParamValue::Int(r)).with("s", ParamValue::Int(s))
}

fn rhs_of(id: &str, p: &Params, ctx: &PrecisionContext) -> HpReal {
    (find(id).unwrap().rhs)(p, ctx).unwrap().value
}

#[test]
fn right_hand_sides_of_the_two_star_expansions_coincide() {
    let ctx = ctx();
    let _g = ctx.enter();
    for r in 0..=3 {
        for s in [2, 3] {
            let p = rs(r, s);
            let base = rhs_of("eq3", &p, &ctx);
            for other in ["two_one_eq3", "addendum_mzv_form"] {
                let d = (&base - rhs_of(other, &p, &ctx)).abs().to_f64();
                assert!(d <= 10.0 * ctx.tol, "{other} r={r} s={s}: {d}");
            }
        }
        for s in [1, 2] {
            let p = rs(r, s);
            let d = (rhs_of("eq4", &p, &ctx) - rhs_of("two_one_eq4", &p, &ctx)).abs().to_f64();
            assert!(d <= 10.0 * ctx.tol, "two_one_eq4 r={r} s={s}: {d}");
        }
    }
}

#[test]
fn expansion_tables_agree_with_the_general_form() {
    let ctx = ctx();
    let _g = ctx.enter();
    for r in 0..=3 {
        for (family, ss) in [("eq3", [2, 3]), ("eq4", [1, 2])] {
            for s in ss {
                let general = rhs_of(family, &rs(r, s), &ctx);
                let table = rhs_of(&format!("{family}_expansion_r{r}"), &Params::new().with("s", ParamValue::Int(s)), &ctx);
                assert!((general - table).abs().to_f64() <= 10.0 * ctx.tol, "{family} r={r} s={s}");
            }
        }
    }
}

#[test]
fn verification_is_deterministic() {
    let ctx = ctx();
    let mut grid = Grid::new();
    grid.insert("s".into(), vec![ParamValue::Int(2), ParamValue::Int(3)]);
    let run = || {
        verify_suite(Some("eq1"), &grid, &ctx)
            .unwrap()
            .into_iter()
            .map(|r| (r.params.to_string(), r.lhs.unwrap().value.to_decimal_string(30), r.pass))
            .collect::<Vec<_>>()
    };
    let first = run();
    assert_eq!(first.len(), 2);
    assert_eq!(first, run());
}

#[test]
fn every_default_point_is_valid_and_passes() {
    let ctx = PrecisionContext::new(20).unwrap();
    let mut total = 0;
    for d in list_identities() {
        for p in d.grid(&Grid::new()) {
            let r = verify(d.id, &p, &ctx).unwrap();
            assert!(r.pass, "{} {}: diff {:?}", d.id, p, r.abs_diff.map(|x| x.to_f64()));
            total += 1;
        }
    }
    assert!(total > 250, "{total}");
}
