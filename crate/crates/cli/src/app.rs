//! Command definitions and their implementations.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mzsv_core::finite_sums::{pochhammer, star_sum, strict_sum};
use mzsv_core::hypergeom::{kr_rhs_i, kr_rhs_ii, pfq, specialized_lhs, specialized_rhs, Case, KrParamsI, KrParamsII};
use mzsv_core::identities::{find, list_identities, parse_values, verify_suite, Grid, VerificationResult};
use mzsv_core::indices::parse_parts;
use mzsv_core::numerics::gamma::gamma_rational;
use mzsv_core::numerics::parse_decimal;
use mzsv_core::series::{alt_mzsv, eta_shifted, mzsv, mzv, zeta};
use mzsv_core::{parse_index, Error, HpReal, PrecisionContext, Result};
use num_rational::BigRational;

use crate::bench;
use crate::report::{f64_text, Report};

pub const PREC_ENV: &str = "MZSV_DEFAULT_PREC";
const FALLBACK_PREC: u32 = 30;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "mzsv", version, about = "Evaluate multiple zeta(-star) values and verify identities between them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one quantity and print it in decimal.
    Eval(EvalArgs),
    /// Verify registered identities on their parameter grids.
    Verify(VerifyArgs),
    /// List the registered identities.
    List,
    /// Compare truncation strategies.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalKind {
    Zeta,
    Eta,
    Mzv,
    Mzsv,
    AltMzsv,
    FiniteStrict,
    FiniteStar,
    Pochhammer,
    Gamma,
    Pfq,
    #[value(name = "kr-rhs-i")]
    KrRhsI,
    #[value(name = "kr-rhs-ii")]
    KrRhsII,
    SpecialLhs,
    SpecialRhs,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub kind: EvalKind,
    /// Index (`1,2`, `2^3`), number, or case name (`A1`..`A4`), depending on the kind.
    pub arg: Option<String>,
    /// Decimal digits to print; defaults to $MZSV_DEFAULT_PREC or 30.
    #[arg(long)]
    pub prec: Option<u32>,
    /// Truncation point of finite sums, or the length of a Pochhammer symbol.
    #[arg(long)]
    pub m: Option<u64>,
    /// Comma-separated upper parameters of pFq.
    #[arg(long, allow_hyphen_values = true)]
    pub upper: Option<String>,
    /// Comma-separated lower parameters of pFq.
    #[arg(long, allow_hyphen_values = true)]
    pub lower: Option<String>,
    /// Argument of pFq: 1 or -1.
    #[arg(long, allow_negative_numbers = true)]
    pub z: Option<i32>,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity id, glob pattern (`eq4_*`), or `all`.
    pub target: String,
    /// Values of s: `3`, `1..4` or `1,3`.
    #[arg(long)]
    pub s: Option<String>,
    #[arg(long)]
    pub r: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    /// Absolute tolerance; defaults to 10^-prec.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub prec: Option<u32>,
    /// Write the full JSON report here.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Truncation,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "truncation")]
    pub suite: Suite,
    /// Digits of the reference values (computed at twice this).
    #[arg(long)]
    pub prec: Option<u32>,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Also write the rows as CSV here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_usage() {
        EXIT_USAGE
    } else {
        EXIT_CONVERGENCE
    }
}

fn default_prec() -> Result<u32> {
    match std::env::var(PREC_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Configuration(format!("{PREC_ENV} must be an integer number of digits, got `{v}`"))),
        Err(_) => Ok(FALLBACK_PREC),
    }
}

fn context(prec: Option<u32>) -> Result<PrecisionContext> {
    PrecisionContext::new(match prec {
        Some(p) => p,
        None => default_prec()?,
    })
}

fn io_error(path: &std::path::Path, e: impl std::fmt::Display) -> Error {
    Error::Configuration(format!("cannot write {}: {e}", path.display()))
}

/// Runs a parsed command, writing to `out`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Eval(args) => {
            let ctx = context(args.prec)?;
            let value = eval(&args, &ctx)?;
            writeln!(out, "{}", value.to_decimal_string(ctx.digits)).ok();
            Ok(EXIT_OK)
        }
        Command::Verify(args) => verify(&args, out),
        Command::List => {
            for d in list_identities() {
                writeln!(out, "{:<24} {:<78} {:<52} {}", d.id, d.anchor, d.schema_text(), d.grid_text()).ok();
            }
            Ok(EXIT_OK)
        }
        Command::Bench(args) => {
            let ctx = context(args.prec)?;
            let Suite::Truncation = args.suite;
            let rows = bench::truncation_suite(args.tol, &ctx)?;
            write!(out, "{}", bench::table(&rows)).ok();
            if let Some(path) = &args.csv {
                let file = std::fs::File::create(path).map_err(|e| io_error(path, e))?;
                bench::write_csv(&rows, file).map_err(|e| io_error(path, e))?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn required<'a, T>(value: &'a Option<T>, what: &str) -> Result<&'a T> {
    value.as_ref().ok_or_else(|| Error::domain(format!("missing {what}")))
}

fn decimals(text: &str) -> Result<Vec<BigRational>> {
    text.split(',').filter(|t| !t.trim().is_empty()).map(|t| parse_decimal(t.trim())).collect()
}

fn decimal(text: &str) -> Result<BigRational> {
    parse_decimal(text.trim())
}

/// Evaluates the quantity named by `args`.
pub fn eval(args: &EvalArgs, ctx: &PrecisionContext) -> Result<HpReal> {
    let _g = ctx.enter();
    let arg = || required(&args.arg, "positional argument");
    let m = || required(&args.m, "--m").copied();
    Ok(match args.kind {
        EvalKind::Zeta => zeta(&HpReal::from_ratio(&decimal(arg()?)?), ctx)?.value,
        EvalKind::Eta => {
            let k: u32 = arg()?.trim().parse().map_err(|_| Error::Parse("eta needs a positive integer".into()))?;
            eta_shifted(k, ctx)?.value
        }
        EvalKind::Mzv => mzv(&parse_index(arg()?)?, ctx)?.value,
        EvalKind::Mzsv => mzsv(&parse_index(arg()?)?, ctx)?.value,
        EvalKind::AltMzsv => alt_mzsv(&parse_index(arg()?)?, ctx)?.value,
        EvalKind::FiniteStrict => HpReal::from_ratio(&strict_sum::<BigRational>(&parse_parts(arg()?)?, m()?)),
        EvalKind::FiniteStar => HpReal::from_ratio(&star_sum::<BigRational>(&parse_parts(arg()?)?, m()?)),
        EvalKind::Pochhammer => HpReal::from_ratio(&pochhammer(&decimal(arg()?)?, m()?)),
        EvalKind::Gamma => gamma_rational(&decimal(arg()?)?, ctx)?,
        EvalKind::Pfq => {
            let upper = decimals(required(&args.upper, "--upper")?)?;
            let lower = decimals(required(&args.lower, "--lower")?)?;
            pfq(&upper, &lower, *required(&args.z, "--z")?, ctx)?.value
        }
        EvalKind::KrRhsI => {
            let p = KrParamsI::new(
                *required(&args.s, "--s")?,
                decimal(required(&args.a, "--a")?)?,
                decimals(required(&args.b, "--b")?)?,
                decimals(required(&args.c, "--c")?)?,
            )?;
            kr_rhs_i(&p, ctx)?.value
        }
        EvalKind::KrRhsII => {
            let p = KrParamsII::new(
                *required(&args.s, "--s")?,
                decimal(required(&args.a, "--a")?)?,
                decimal(required(&args.c0, "--c0")?)?,
                decimals(required(&args.b, "--b")?)?,
                decimals(required(&args.c, "--c")?)?,
            )?;
            kr_rhs_ii(&p, ctx)?.value
        }
        EvalKind::SpecialLhs | EvalKind::SpecialRhs => {
            let case: Case = arg()?.parse()?;
            let alpha = decimal(required(&args.alpha, "--alpha")?)?;
            let s = *required(&args.s, "--s")?;
            if args.kind == EvalKind::SpecialLhs {
                specialized_lhs(case, &alpha, s, ctx)?.value
            } else {
                specialized_rhs(case, &alpha, s, ctx)?.value
            }
        }
    })
}

fn grid(args: &VerifyArgs) -> Result<Grid> {
    let mut g = Grid::new();
    for (name, text) in [("s", &args.s), ("r", &args.r), ("alpha", &args.alpha), ("m", &args.m)] {
        if let Some(t) = text {
            g.insert(name.to_string(), parse_values(t)?);
        }
    }
    Ok(g)
}

/// Table cells; differences keep three significant digits.
fn row(r: &VerificationResult, digits: u32) -> [String; 6] {
    let status = if r.pass { "PASS" } else { "FAIL" };
    let lhs = r.lhs.as_ref().map_or("-".to_string(), |e| e.value.to_decimal_string(digits));
    let diff = match (&r.abs_diff, &r.error) {
        (Some(d), _) => d.to_decimal_string(3),
        (None, Some(e)) => format!("error: {e}"),
        (None, None) => "-".to_string(),
    };
    [r.id.clone(), r.params.to_string(), lhs, diff, f64_text(r.tolerance), status.to_string()]
}

fn table(rows: &[[String; 6]]) -> String {
    let header = ["id", "params", "lhs", "abs_diff", "tolerance", "status"].map(String::from);
    let all: Vec<&[String; 6]> = std::iter::once(&header).chain(rows).collect();
    let widths: Vec<usize> = (0..6).map(|i| all.iter().map(|r| r[i].chars().count()).max().unwrap_or(0)).collect();
    let mut text = String::new();
    for r in all {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        text.push_str(cells.join("  ").trim_end());
        text.push('\n');
    }
    text
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let mut ctx = context(args.prec)?;
    if let Some(tol) = args.tol {
        ctx = ctx.with_tol(tol)?;
    }
    let filter = if args.target == "all" { None } else { Some(args.target.as_str()) };
    if let Some(f) = filter.filter(|f| !f.contains(['*', '?', '['])) {
        find(f)?;
    }
    let results = verify_suite(filter, &grid(args)?, &ctx)?;
    let rows: Vec<[String; 6]> = results.iter().map(|r| row(r, ctx.digits)).collect();
    write!(out, "{}", table(&rows)).ok();
    let report = Report::new(&results, &ctx);
    writeln!(out, "{} total, {} passed, {} failed", report.summary.total, report.summary.passed, report.summary.failed).ok();
    if let Some(path) = &args.json {
        std::fs::write(path, report.to_json()).map_err(|e| io_error(path, e))?;
    }
    Ok(if report.summary.failed == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
