//! The truncation benchmark: plain partial sums, tail-corrected sums and
//! averaging on a fixed set of workloads, against a high-precision reference.

use std::time::Instant;

use mzsv_core::hypergeom::{specialized_lhs, Case};
use mzsv_core::numerics::scalar::ratio;
use mzsv_core::series::truncation::{alt_mzsv_truncated, alternating_power_truncated, mzsv_truncated, TruncationRun};
use mzsv_core::series::{alt_mzsv, mzsv, Strategy};
use mzsv_core::{ix, Index, PrecisionContext, Result};

/// Largest cutoff any strategy may reach.
pub const TERM_CAP: u64 = 1 << 24;

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub workload: String,
    pub strategy: Strategy,
    pub terms: u64,
    pub elapsed_ms: f64,
    pub abs_err: f64,
    /// Whether the achieved error is within the tolerance.
    pub met: bool,
}

enum Workload {
    Star(Index),
    AltStar(Index),
    /// `Σ_{m>=0} (-1)^m/(m+α)^{2s}` with `α = num/den`.
    A1Lhs { num: i64, den: i64, s: u32 },
}

impl Workload {
    fn name(&self) -> String {
        match self {
            Workload::Star(ix) => format!("mzsv({ix})"),
            Workload::AltStar(ix) => format!("alt_mzsv({ix})"),
            Workload::A1Lhs { num, den, s } => format!("a1_lhs(alpha={},s={s})", *num as f64 / *den as f64),
        }
    }

    fn strategies(&self) -> &'static [Strategy] {
        match self {
            Workload::Star(_) => &[Strategy::Direct, Strategy::TailCorrected],
            _ => &[Strategy::Direct, Strategy::TailCorrected, Strategy::AlternatingAccelerated],
        }
    }

    fn reference(&self, ctx: &PrecisionContext) -> Result<f64> {
        let wide = ctx.scaled(2);
        let _g = wide.enter();
        let v = match self {
            Workload::Star(ix) => mzsv(ix, &wide)?,
            Workload::AltStar(ix) => alt_mzsv(ix, &wide)?,
            Workload::A1Lhs { num, den, s } => specialized_lhs(Case::A1, &ratio(*num, *den), *s, &wide)?,
        };
        Ok(v.value.to_f64())
    }

    fn run(&self, strategy: Strategy, tol: f64) -> Result<TruncationRun> {
        match self {
            Workload::Star(ix) => mzsv_truncated(ix, strategy, tol, TERM_CAP),
            Workload::AltStar(ix) => alt_mzsv_truncated(ix, strategy, tol, TERM_CAP),
            Workload::A1Lhs { num, den, s } => {
                alternating_power_truncated(*num as f64 / *den as f64, 2 * s, strategy, tol, TERM_CAP)
            }
        }
    }
}

fn workloads() -> Vec<Workload> {
    vec![
        Workload::Star(ix![1, 2]),
        Workload::Star(ix![2, 2, 2]),
        Workload::AltStar(ix![1, 2]),
        Workload::A1Lhs { num: 13, den: 10, s: 2 },
    ]
}

/// Runs every applicable strategy on every workload.
pub fn truncation_suite(tol: f64, ctx: &PrecisionContext) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for w in workloads() {
        let reference = w.reference(ctx)?;
        for &strategy in w.strategies() {
            let start = Instant::now();
            let run = w.run(strategy, tol)?;
            let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            let abs_err = (run.value - reference).abs();
            rows.push(BenchRow { workload: w.name(), strategy, terms: run.terms, elapsed_ms, abs_err, met: abs_err <= tol });
        }
    }
    Ok(rows)
}

pub fn write_csv<W: std::io::Write>(rows: &[BenchRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["workload", "strategy", "terms", "elapsed_ms", "abs_err"])?;
    for r in rows {
        w.write_record([
            r.workload.clone(),
            r.strategy.to_string(),
            r.terms.to_string(),
            format!("{:.3}", r.elapsed_ms),
            format!("{}", r.abs_err),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn table(rows: &[BenchRow]) -> String {
    let mut out = format!("{:<24} {:<24} {:>10} {:>12} {:>24} {}\n", "workload", "strategy", "terms", "elapsed_ms", "abs_err", "met");
    for r in rows {
        out.push_str(&format!(
            "{:<24} {:<24} {:>10} {:>12.3} {:>24} {}\n",
            r.workload,
            r.strategy.to_string(),
            r.terms,
            r.elapsed_ms,
            r.abs_err.to_string(),
            if r.met { "yes" } else { "no" }
        ));
    }
    out
}
