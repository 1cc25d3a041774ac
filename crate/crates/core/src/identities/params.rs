//! Named parameters of registered identities and their schemas.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::numerics::hp::ratio_to_f64;
use crate::numerics::parse_decimal;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamValue {
    Int(i64),
    Real(BigRational),
    Label(String),
}

impl ParamValue {
    /// Parses an integer, a decimal, or otherwise keeps the text as a label.
    pub fn parse(text: &str) -> ParamValue {
        let t = text.trim();
        if let Ok(n) = t.parse::<i64>() {
            return ParamValue::Int(n);
        }
        match parse_decimal(t) {
            Ok(r) => ParamValue::Real(r),
            Err(_) => ParamValue::Label(t.to_string()),
        }
    }

    pub fn real(text: &str) -> ParamValue {
        ParamValue::Real(parse_decimal(text).expect("literal decimal"))
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(n) => write!(f, "{n}"),
            ParamValue::Real(r) if r.is_integer() => write!(f, "{}", r.to_integer()),
            ParamValue::Real(r) => {
                // Shortest decimal that parses back to the same rational, if short.
                let approx = ratio_to_f64(r);
                let text = format!("{approx}");
                match parse_decimal(&text) {
                    Ok(back) if &back == r => f.write_str(&text),
                    _ => write!(f, "{}/{}", r.numer(), r.denom()),
                }
            }
            ParamValue::Label(s) => f.write_str(s),
        }
    }
}

/// Parameter assignment, ordered by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params(pub BTreeMap<String, ParamValue>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: ParamValue) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn int(&self, name: &str) -> Result<i64> {
        match self.0.get(name) {
            Some(ParamValue::Int(n)) => Ok(*n),
            Some(ParamValue::Real(r)) if r.is_integer() => {
                num_traits::ToPrimitive::to_i64(&r.to_integer()).ok_or_else(|| Error::domain(format!("{name} is too large")))
            }
            Some(other) => Err(Error::domain(format!("parameter {name} must be an integer, got {other}"))),
            None => Err(Error::domain(format!("missing parameter {name}"))),
        }
    }

    pub fn uint(&self, name: &str) -> Result<u32> {
        let n = self.int(name)?;
        u32::try_from(n).map_err(|_| Error::domain(format!("parameter {name} must be non-negative, got {n}")))
    }

    pub fn real(&self, name: &str) -> Result<BigRational> {
        match self.0.get(name) {
            Some(ParamValue::Int(n)) => Ok(BigRational::from_integer((*n).into())),
            Some(ParamValue::Real(r)) => Ok(r.clone()),
            Some(other) => Err(Error::domain(format!("parameter {name} must be a number, got {other}"))),
            None => Err(Error::domain(format!("missing parameter {name}"))),
        }
    }

    pub fn label(&self, name: &str) -> Result<&str> {
        match self.0.get(name) {
            Some(ParamValue::Label(s)) => Ok(s),
            Some(other) => Err(Error::domain(format!("parameter {name} must be a label, got {other}"))),
            None => Err(Error::domain(format!("missing parameter {name}"))),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&items.join(","))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ParamKind {
    /// Integer in `min..=max`.
    Int { min: i64, max: i64 },
    /// Real number with optional exclusive bounds, given as `(numer, denom)`.
    Real { gt: Option<(i64, i64)>, lt: Option<(i64, i64)> },
    /// One of a fixed set of labels.
    Label(&'static [&'static str]),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
}

impl ParamSpec {
    pub const fn int(name: &'static str, min: i64, max: i64) -> Self {
        ParamSpec { name, kind: ParamKind::Int { min, max } }
    }

    pub const fn real(name: &'static str, gt: Option<(i64, i64)>, lt: Option<(i64, i64)>) -> Self {
        ParamSpec { name, kind: ParamKind::Real { gt, lt } }
    }

    pub const fn label(name: &'static str, options: &'static [&'static str]) -> Self {
        ParamSpec { name, kind: ParamKind::Label(options) }
    }
}

impl fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParamKind::Int { min, max } => write!(f, "{}:int[{min}..{max}]", self.name),
            ParamKind::Real { gt, lt } => {
                let bound = |b: &Option<(i64, i64)>, inf: &str| match b {
                    Some((n, 1)) => n.to_string(),
                    Some((n, d)) => format!("{n}/{d}"),
                    None => inf.to_string(),
                };
                write!(f, "{}:real({}..{})", self.name, bound(gt, "-inf"), bound(lt, "inf"))
            }
            ParamKind::Label(opts) => write!(f, "{}:{{{}}}", self.name, opts.join("|")),
        }
    }
}

/// Checks that `params` names exactly the schema's parameters with values
/// of the right kind and range.
pub fn validate(schema: &[ParamSpec], params: &Params) -> Result<()> {
    for key in params.0.keys() {
        if !schema.iter().any(|s| s.name == key) {
            return Err(Error::domain(format!("unexpected parameter {key}")));
        }
    }
    for spec in schema {
        match &spec.kind {
            ParamKind::Int { min, max } => {
                let v = params.int(spec.name)?;
                if v < *min || v > *max {
                    return Err(Error::domain(format!("{} = {v} is outside {min}..{max}", spec.name)));
                }
            }
            ParamKind::Real { gt, lt } => {
                let v = params.real(spec.name)?;
                let as_ratio = |(n, d): (i64, i64)| BigRational::new(n.into(), d.into());
                if gt.is_some_and(|b| v <= as_ratio(b)) || lt.is_some_and(|b| v >= as_ratio(b)) {
                    return Err(Error::domain(format!("{} = {} is outside the open range of {spec}", spec.name, ParamValue::Real(v))));
                }
            }
            ParamKind::Label(opts) => {
                let v = params.label(spec.name)?;
                if !opts.contains(&v) {
                    return Err(Error::domain(format!("{} = {v} is not one of {}", spec.name, opts.join(", "))));
                }
            }
        }
    }
    Ok(())
}

/// Parses a range or list: `3`, `1..4` (inclusive), `0.6,1,1.3`.
pub fn parse_values(text: &str) -> Result<Vec<ParamValue>> {
    let t = text.trim();
    if let Some((lo, hi)) = t.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| Error::Parse(format!("bad range `{text}`")))?;
        let hi: i64 = hi.trim().trim_start_matches('=').parse().map_err(|_| Error::Parse(format!("bad range `{text}`")))?;
        if lo > hi {
            return Err(Error::Parse(format!("empty range `{text}`")));
        }
        return Ok((lo..=hi).map(ParamValue::Int).collect());
    }
    let values: Vec<ParamValue> = t.split(',').filter(|s| !s.trim().is_empty()).map(ParamValue::parse).collect();
    if values.is_empty() {
        return Err(Error::Parse(format!("no values in `{text}`")));
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_and_ranges() {
        assert_eq!(parse_values("1..3").unwrap(), vec![ParamValue::Int(1), ParamValue::Int(2), ParamValue::Int(3)]);
        assert_eq!(parse_values("0.6,1").unwrap(), vec![ParamValue::real("0.6"), ParamValue::Int(1)]);
        assert!(parse_values("3..1").is_err());
        assert_eq!(ParamValue::real("0.6").to_string(), "0.6");
        assert_eq!(ParamValue::real("1.30").to_string(), "1.3");
        let p = Params::new().with("s", ParamValue::Int(2)).with("alpha", ParamValue::real("0.6"));
        assert_eq!(p.to_string(), "alpha=0.6,s=2");
    }

    #[test]
    fn schema_validation() {
        let schema = [ParamSpec::int("s", 1, 5)];
        assert!(validate(&schema, &Params::new().with("s", ParamValue::Int(3))).is_ok());
        assert!(validate(&schema, &Params::new().with("s", ParamValue::Int(9))).is_err());
        assert!(validate(&schema, &Params::new()).is_err());
        assert!(validate(&schema, &Params::new().with("s", ParamValue::Int(1)).with("r", ParamValue::Int(1))).is_err());
        let schema = [ParamSpec::real("alpha", None, Some((3, 2)))];
        assert!(validate(&schema, &Params::new().with("alpha", ParamValue::real("1.3"))).is_ok());
        assert!(validate(&schema, &Params::new().with("alpha", ParamValue::real("1.5"))).is_err());
        assert_eq!(schema[0].to_string(), "alpha:real(-inf..3/2)");
    }
}
