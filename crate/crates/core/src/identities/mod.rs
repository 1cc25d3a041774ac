//! Registry of identities with their parameter schemas, default grids and
//! both sides, plus the verification runner.

mod catalog;
pub mod params;

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::{HpReal, PrecisionContext};
use crate::series::Evaluated;
pub use params::{parse_values, validate, ParamKind, ParamSpec, ParamValue, Params};

/// Evaluator of one side of an identity.
pub type Side = fn(&Params, &PrecisionContext) -> Result<Evaluated>;

/// A cartesian block of the default grid: `(name, values)` axes, where
/// values use the `parse_values` syntax. The first axis varies slowest.
pub type Block = Vec<(&'static str, &'static str)>;

pub struct IdentityDescriptor {
    pub id: &'static str,
    pub anchor: &'static str,
    pub params_schema: Vec<ParamSpec>,
    pub default_grid: Vec<Block>,
    pub lhs: Side,
    pub rhs: Side,
}

impl IdentityDescriptor {
    pub fn schema_text(&self) -> String {
        let items: Vec<String> = self.params_schema.iter().map(|p| p.to_string()).collect();
        format!("[{}]", items.join(", "))
    }

    pub fn grid_text(&self) -> String {
        let blocks: Vec<String> = self
            .default_grid
            .iter()
            .map(|b| {
                if b.is_empty() {
                    "()".to_string()
                } else {
                    b.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
                }
            })
            .collect();
        blocks.join(" | ")
    }

    /// Grid points of the default grid with `overrides` substituted for
    /// the axes they name; points outside the schema are dropped.
    pub fn grid(&self, overrides: &Grid) -> Vec<Params> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for block in &self.default_grid {
            let mut points = vec![Params::new()];
            for (name, text) in block {
                let values = match overrides.get(*name) {
                    Some(v) => v.clone(),
                    None => parse_values(text).expect("registry grids are well formed"),
                };
                points = points
                    .into_iter()
                    .flat_map(|p| values.iter().map(move |v| p.clone().with(name, v.clone())))
                    .collect();
            }
            for p in points {
                if validate(&self.params_schema, &p).is_ok() && seen.insert(p.clone()) {
                    out.push(p);
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityDescriptor").field("id", &self.id).field("anchor", &self.anchor).finish()
    }
}

/// Per-axis value overrides for [`verify_suite`].
pub type Grid = BTreeMap<String, Vec<ParamValue>>;

pub fn list_identities() -> &'static [IdentityDescriptor] {
    static REGISTRY: OnceLock<Vec<IdentityDescriptor>> = OnceLock::new();
    REGISTRY.get_or_init(catalog::build)
}

pub fn find(id: &str) -> Result<&'static IdentityDescriptor> {
    list_identities().iter().find(|d| d.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

#[derive(Clone, Debug)]
pub struct VerificationResult {
    pub id: String,
    pub params: Params,
    pub lhs: Option<Evaluated>,
    pub rhs: Option<Evaluated>,
    pub abs_diff: Option<HpReal>,
    pub tolerance: f64,
    pub pass: bool,
    /// Evaluation failure of either side, if any.
    pub error: Option<Error>,
    pub elapsed: Duration,
}

impl VerificationResult {
    /// `|LHS - RHS| / max(1, |RHS|)`, when both sides evaluated.
    pub fn relative_diff(&self) -> Option<f64> {
        let d = self.abs_diff.as_ref()?.log10_abs();
        let scale = self.rhs.as_ref()?.value.log10_abs().max(0.0);
        Some(10f64.powf(d - scale))
    }
}

/// Evaluates both sides of identity `id` at `params`.
///
/// Fails on an unknown id or out-of-schema parameters; a side that fails to
/// evaluate yields `Err` as well (the suite runner records it instead).
pub fn verify(id: &str, params: &Params, ctx: &PrecisionContext) -> Result<VerificationResult> {
    let d = find(id)?;
    validate(&d.params_schema, params)?;
    let r = run_one(d, params, ctx);
    match r.error {
        Some(e) => Err(e),
        None => Ok(r),
    }
}

fn run_one(d: &IdentityDescriptor, params: &Params, ctx: &PrecisionContext) -> VerificationResult {
    let start = Instant::now();
    let _g = ctx.enter();
    let mut result = VerificationResult {
        id: d.id.to_string(),
        params: params.clone(),
        lhs: None,
        rhs: None,
        abs_diff: None,
        tolerance: ctx.tol,
        pass: false,
        error: None,
        elapsed: Duration::ZERO,
    };
    match ((d.lhs)(params, ctx), (d.rhs)(params, ctx)) {
        (Ok(l), Ok(r)) => {
            let diff = (&l.value - &r.value).abs();
            let estimates = l.error_bound(ctx) + r.error_bound(ctx);
            result.tolerance = ctx.tol.max(10.0 * estimates);
            result.pass = diff.to_f64() <= result.tolerance;
            result.abs_diff = Some(diff);
            result.lhs = Some(l);
            result.rhs = Some(r);
        }
        (l, r) => {
            result.error = l.as_ref().err().or(r.as_ref().err()).cloned();
            result.lhs = l.ok();
            result.rhs = r.ok();
        }
    }
    result.elapsed = start.elapsed();
    result
}

/// Runs every identity whose id matches the glob `filter` (all when `None`)
/// over its default grid with `overrides` applied. Results come in registry
/// then grid order; a failing point does not stop the run.
pub fn verify_suite(filter: Option<&str>, overrides: &Grid, ctx: &PrecisionContext) -> Result<Vec<VerificationResult>> {
    let pattern = match filter {
        Some(f) => Some(glob::Pattern::new(f).map_err(|e| Error::Configuration(format!("bad filter `{f}`: {e}")))?),
        None => None,
    };
    let selected: Vec<&IdentityDescriptor> =
        list_identities().iter().filter(|d| pattern.as_ref().is_none_or(|p| p.matches(d.id))).collect();
    if selected.is_empty() {
        return Err(Error::Configuration(format!("no identity matches `{}`", filter.unwrap_or(""))));
    }
    let jobs: Vec<(&IdentityDescriptor, Params)> =
        selected.iter().flat_map(|d| d.grid(overrides).into_iter().map(move |p| (*d, p))).collect();
    if jobs.is_empty() {
        return Err(Error::Configuration("the parameter grid is empty for every selected identity".into()));
    }
    Ok(jobs.par_iter().map(|(d, p)| run_one(d, p, ctx)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    fn s(n: i64) -> Params {
        Params::new().with("s", ParamValue::Int(n))
    }

    #[test]
    fn registry_shape() {
        let ids: Vec<&str> = list_identities().iter().map(|d| d.id).collect();
        assert_eq!(ids.len(), 26);
        assert_eq!(ids[0], "remark1_even");
        assert_eq!(ids[25], "theoremA_ii");
        let unique: HashSet<_> = ids.iter().collect();
        assert_eq!(unique.len(), 26);
        for d in list_identities() {
            assert!(!d.grid(&Grid::new()).is_empty(), "{} has an empty default grid", d.id);
        }
        assert!(matches!(find("bogus"), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn eq1_collapses_at_s1() {
        let r = verify("eq1", &s(1), &ctx()).unwrap();
        assert!(r.pass);
        let lhs = r.lhs.unwrap().value.to_f64();
        assert!((lhs - 3.606_170_709_478_783).abs() < 1e-12);
    }

    #[test]
    fn documented_points() {
        assert!(verify("a2_cyclic", &s(2), &ctx()).unwrap().pass);
        let p = Params::new().with("r", ParamValue::Int(1)).with("s", ParamValue::Int(2));
        assert!(verify("two_one_eq3", &p, &ctx()).unwrap().pass);
        assert!(verify("eq1", &s(0), &ctx()).is_err());
    }

    #[test]
    fn suite_filters_and_overrides() {
        let mut grid = Grid::new();
        grid.insert("s".into(), parse_values("1..3").unwrap());
        let results = verify_suite(Some("remark1_*"), &grid, &ctx()).unwrap();
        assert_eq!(results.len(), 6);
        assert!(results.iter().all(|r| r.pass));
        assert_eq!(results[0].id, "remark1_even");
        assert_eq!(results[3].id, "remark1_odd");
        assert!(matches!(verify_suite(Some("nonexistent"), &Grid::new(), &ctx()), Err(Error::Configuration(_))));
    }

    #[test]
    fn grid_drops_out_of_schema_points() {
        let mut grid = Grid::new();
        grid.insert("s".into(), parse_values("1..3").unwrap());
        let d = find("a2_specialized").unwrap();
        assert_eq!(d.grid(&grid).len(), 6);
        assert_eq!(find("theoremA_i").unwrap().grid(&Grid::new()).len(), 13);
    }
}
