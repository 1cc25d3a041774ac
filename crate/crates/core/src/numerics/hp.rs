//! Arbitrary-precision binary floating point values.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, Sub, SubAssign};

use dashu_base::{BitTest, SquareRoot, UnsignedAbs};
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::{IBig, UBig};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use super::context::working_bits;
use crate::error::{Error, Result};

type Inner = FBig<HalfEven, 2>;

/// A real number carried at a fixed binary working precision.
///
/// Values created under different working precisions belong to different
/// contexts; ordering them is refused (`partial_cmp` yields `None`, and
/// [`HpReal::try_cmp`] reports an error).
#[derive(Clone)]
pub struct HpReal(Inner);

pub(crate) fn ibig_from_bigint(n: &BigInt) -> IBig {
    IBig::from_le_bytes(&n.to_signed_bytes_le())
}

pub(crate) fn bigint_from_ibig(n: &IBig) -> BigInt {
    BigInt::from_signed_bytes_le(&n.to_le_bytes())
}

impl HpReal {
    fn wrap(x: Inner) -> Self {
        HpReal(x)
    }

    fn exact_int_at(n: IBig, bits: usize) -> Self {
        HpReal(Inner::from(n).with_precision(bits).value())
    }

    pub fn zero_at(bits: usize) -> Self {
        HpReal(Inner::ZERO.with_precision(bits).value())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::exact_int_at(IBig::from(n), working_bits())
    }

    pub fn from_u64(n: u64) -> Self {
        Self::exact_int_at(IBig::from(n), working_bits())
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Self::exact_int_at(ibig_from_bigint(n), working_bits())
    }

    /// `p/q` rounded to the working precision.
    pub fn from_ratio(r: &BigRational) -> Self {
        let bits = working_bits();
        let num = Self::exact_int_at(ibig_from_bigint(r.numer()), bits + 64);
        let den = Self::exact_int_at(ibig_from_bigint(r.denom()), bits + 64);
        (num / den).with_bits(bits)
    }

    pub fn from_f64(x: f64) -> Result<Self> {
        let inner = Inner::try_from(x).map_err(|_| Error::domain(format!("{x} is not a finite number")))?;
        Ok(HpReal(inner.with_precision(working_bits()).value()))
    }

    /// `m · 2^e`, rounded to the working precision.
    pub fn from_parts(significand: &BigInt, exponent: isize) -> Self {
        HpReal(Inner::from_parts(ibig_from_bigint(significand), exponent).with_precision(working_bits()).value())
    }

    /// Parses a decimal literal such as `-1.25e-3`.
    pub fn parse(s: &str) -> Result<Self> {
        let r = super::parse_decimal(s)?;
        Ok(Self::from_ratio(&r))
    }

    pub fn pi() -> Self {
        HpReal(Inner::pi(working_bits() + 16).with_precision(working_bits()).value())
    }

    pub fn precision_bits(&self) -> usize {
        self.0.precision()
    }

    /// Rounds or extends to `bits` of precision.
    pub fn with_bits(&self, bits: usize) -> Self {
        HpReal(self.0.clone().with_precision(bits).value())
    }

    /// Re-expresses the value at the current working precision.
    pub fn at_working(&self) -> Self {
        self.with_bits(working_bits())
    }

    pub fn is_zero(&self) -> bool {
        self.0.repr().is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.repr().sign() == dashu_base::Sign::Negative && !self.is_zero()
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// True when the value is an exact integer.
    pub fn is_integer(&self) -> bool {
        self.0.repr().is_int()
    }

    pub fn ln(&self) -> Self {
        HpReal(self.0.ln())
    }

    pub fn exp(&self) -> Self {
        HpReal(self.0.exp())
    }

    pub fn sqrt(&self) -> Self {
        HpReal(self.0.sqrt())
    }

    /// `self^e` for `self > 0`.
    pub fn powf(&self, e: &Self) -> Self {
        // `1^e` comes back exact (unlimited precision) from dashu; pin it.
        let bits = self.precision_bits().max(e.precision_bits());
        (e * &self.ln()).exp().with_bits(bits)
    }

    pub fn powi(&self, n: i64) -> Self {
        if n == 0 {
            return Self::exact_int_at(IBig::ONE, self.precision_bits());
        }
        HpReal(self.0.powi(IBig::from(n)))
    }

    pub fn recip(&self) -> Self {
        Self::exact_int_at(IBig::ONE, self.precision_bits()) / self
    }

    pub fn floor_to_bigint(&self) -> BigInt {
        bigint_from_ibig(&self.0.floor().to_int().value())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// `log10 |x|` as a float that neither overflows nor underflows;
    /// `-inf` for zero.
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let repr = self.0.repr();
        let mag: UBig = repr.significand().unsigned_abs();
        let len = mag.bit_len();
        let shift = len.saturating_sub(60);
        let top = (&mag >> shift).to_f64().value();
        (top.log2() + shift as f64 + repr.exponent() as f64) * std::f64::consts::LOG10_2
    }

    /// Ordering that refuses values from different working precisions.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        if self.precision_bits() != other.precision_bits() {
            return Err(Error::ContextMismatch { left: self.precision_bits(), right: other.precision_bits() });
        }
        Ok(self.0.cmp(&other.0))
    }

    /// Ordering by value irrespective of precision.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub fn max_value(self, other: Self) -> Self {
        if self.cmp_value(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    /// Decimal rendering with `digits` significant digits. Positional
    /// notation is used for every magnitude below `10^60`.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let dec = self.0.to_decimal().value().with_precision(digits.max(1) as usize).value();
        let repr = dec.repr();
        let negative = repr.significand() < &IBig::ZERO;
        let body = repr.significand().unsigned_abs().to_string();
        let exp = repr.exponent();
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        let point = body.len() as isize + exp;
        if point <= 60 {
            if exp >= 0 {
                out.push_str(&body);
                out.extend(std::iter::repeat('0').take(exp as usize));
            } else if point > 0 {
                out.push_str(&body[..point as usize]);
                out.push('.');
                out.push_str(&body[point as usize..]);
            } else {
                out.push_str("0.");
                out.extend(std::iter::repeat('0').take((-point) as usize));
                out.push_str(&body);
            }
        } else {
            out.push_str(&body[..1]);
            if body.len() > 1 {
                out.push('.');
                out.push_str(&body[1..]);
            }
            out.push_str(&format!("e{}", point - 1));
        }
        out
    }
}

impl fmt::Debug for HpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.precision_bits() as f64 * std::f64::consts::LOG10_2).floor().max(1.0) as u32;
        write!(f, "HpReal({})", self.to_decimal_string(digits))
    }
}

impl fmt::Display for HpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .map(|p| p as u32)
            .unwrap_or_else(|| (self.precision_bits() as f64 * std::f64::consts::LOG10_2).floor().max(1.0) as u32);
        f.write_str(&self.to_decimal_string(digits))
    }
}

impl PartialEq for HpReal {
    fn eq(&self, other: &Self) -> bool {
        self.precision_bits() == other.precision_bits() && self.0 == other.0
    }
}

impl PartialOrd for HpReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $op:tt) => {
        impl $tr<HpReal> for HpReal {
            type Output = HpReal;
            fn $m(self, rhs: HpReal) -> HpReal {
                HpReal::wrap(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a HpReal> for HpReal {
            type Output = HpReal;
            fn $m(self, rhs: &'a HpReal) -> HpReal {
                HpReal::wrap(self.0 $op &rhs.0)
            }
        }
        impl<'a> $tr<HpReal> for &'a HpReal {
            type Output = HpReal;
            fn $m(self, rhs: HpReal) -> HpReal {
                HpReal::wrap(&self.0 $op rhs.0)
            }
        }
        impl<'a, 'b> $tr<&'b HpReal> for &'a HpReal {
            type Output = HpReal;
            fn $m(self, rhs: &'b HpReal) -> HpReal {
                HpReal::wrap(&self.0 $op &rhs.0)
            }
        }
        impl $atr<HpReal> for HpReal {
            fn $am(&mut self, rhs: HpReal) {
                let lhs = std::mem::replace(&mut self.0, Inner::ZERO);
                self.0 = lhs $op rhs.0;
            }
        }
        impl<'a> $atr<&'a HpReal> for HpReal {
            fn $am(&mut self, rhs: &'a HpReal) {
                let lhs = std::mem::replace(&mut self.0, Inner::ZERO);
                self.0 = lhs $op &rhs.0;
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign, +);
binop!(Sub, sub, SubAssign, sub_assign, -);
binop!(Mul, mul, MulAssign, mul_assign, *);
binop!(Div, div, DivAssign, div_assign, /);

impl Neg for HpReal {
    type Output = HpReal;
    fn neg(self) -> HpReal {
        HpReal(-self.0)
    }
}

impl Neg for &HpReal {
    type Output = HpReal;
    fn neg(self) -> HpReal {
        HpReal(-self.0.clone())
    }
}

impl Rem for HpReal {
    type Output = HpReal;
    /// Remainder of truncated division.
    fn rem(self, rhs: HpReal) -> HpReal {
        let q = (&self / &rhs).0.trunc();
        let q = HpReal(q.with_precision(self.precision_bits()).value());
        self - q * rhs
    }
}

impl Zero for HpReal {
    fn zero() -> Self {
        HpReal::zero_at(working_bits())
    }
    fn is_zero(&self) -> bool {
        HpReal::is_zero(self)
    }
}

impl One for HpReal {
    fn one() -> Self {
        HpReal::from_i64(1)
    }
}

impl Num for HpReal {
    type FromStrRadixErr = Error;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self> {
        if radix != 10 {
            return Err(Error::Parse(format!("only radix 10 is supported, got {radix}")));
        }
        HpReal::parse(s)
    }
}

impl FromPrimitive for HpReal {
    fn from_i64(n: i64) -> Option<Self> {
        Some(HpReal::from_i64(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(HpReal::from_u64(n))
    }
    fn from_f64(x: f64) -> Option<Self> {
        HpReal::from_f64(x).ok()
    }
}

impl Sum for HpReal {
    fn sum<I: Iterator<Item = HpReal>>(iter: I) -> Self {
        iter.fold(HpReal::zero(), |a, b| a + b)
    }
}

impl Product for HpReal {
    fn product<I: Iterator<Item = HpReal>>(iter: I) -> Self {
        iter.fold(HpReal::one(), |a, b| a * b)
    }
}

/// Rational helpers that the exact scalar path relies on.
pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Scale down both parts for very large rationals.
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(900);
    let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift).to_f64().unwrap_or(1.0);
    if r.is_negative() && n > 0.0 {
        -n / d
    } else {
        n / d
    }
}
