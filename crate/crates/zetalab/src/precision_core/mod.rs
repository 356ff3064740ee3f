//! Exact integer/rational arithmetic and the `ExtReal` carrier.
//!
//! Precision is counted in decimal digits at the API. Internally each value
//! holds an MPFR float with `ceil(d * log2 10) + GUARD_BITS` bits, so that
//! every correctly rounded elementary operation is well inside the per-op
//! budget of `10^(2 - d)` relative error.

mod exact;
mod series;

pub use exact::{
    bernoulli_number, bernoulli_numbers, binomial, factorial, parse_rational, stirling1_row,
    StirlingRow,
};
pub use series::PowerSeries;

use crate::error::{Error, Result};
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

const GUARD_BITS: u32 = 16;
const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// MPFR precision used for `digits` decimal digits.
pub fn bits_for(digits: u32) -> u32 {
    (f64::from(digits) * LOG2_10).ceil() as u32 + GUARD_BITS
}

/// An extended-precision real with an explicit decimal precision.
///
/// Binary operations return the minimum of the operands' precisions.
#[derive(Clone, Debug)]
pub struct ExtReal {
    v: Float,
    d: u32,
}

impl ExtReal {
    pub fn from_float(v: &Float, digits: u32) -> Self {
        ExtReal { v: Float::with_val(bits_for(digits), v), d: digits }
    }

    pub fn from_i64(n: i64, digits: u32) -> Self {
        ExtReal { v: Float::with_val(bits_for(digits), n), d: digits }
    }

    pub fn from_integer(n: &Integer, digits: u32) -> Self {
        ExtReal { v: Float::with_val(bits_for(digits), n), d: digits }
    }

    pub fn from_rational(q: &Rational, digits: u32) -> Self {
        ExtReal { v: Float::with_val(bits_for(digits), q), d: digits }
    }

    /// Exact binary value of `x`; only use for inputs that are dyadic by construction.
    pub fn from_f64(x: f64, digits: u32) -> Self {
        ExtReal { v: Float::with_val(bits_for(digits), x), d: digits }
    }

    /// Parses an integer, a fraction `a/b` or a decimal, exactly, then rounds once.
    pub fn parse(s: &str, digits: u32) -> Result<Self> {
        Ok(Self::from_rational(&parse_rational(s)?, digits))
    }

    pub fn zero(digits: u32) -> Self {
        Self::from_i64(0, digits)
    }

    pub fn one(digits: u32) -> Self {
        Self::from_i64(1, digits)
    }

    pub fn pi(digits: u32) -> Self {
        ExtReal { v: Float::with_val(bits_for(digits), Constant::Pi), d: digits }
    }

    pub fn ln2(digits: u32) -> Self {
        ExtReal { v: Float::with_val(bits_for(digits), Constant::Log2), d: digits }
    }

    pub fn digits(&self) -> u32 {
        self.d
    }

    pub fn float(&self) -> &Float {
        &self.v
    }

    /// Rounds (or zero-extends) to a new precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self::from_float(&self.v, digits)
    }

    fn wrap(&self, v: Float) -> Self {
        ExtReal { v, d: self.d }
    }

    fn bits(&self) -> u32 {
        bits_for(self.d)
    }

    pub fn ln(&self) -> Result<Self> {
        if self.v <= 0 {
            return Err(Error::Domain(format!("ln of non-positive value {}", self.to_sci(8))));
        }
        Ok(self.wrap(Float::with_val(self.bits(), self.v.ln_ref())))
    }

    /// `ln(1 + x)` without cancellation for small `x`.
    pub fn ln_1p(&self) -> Result<Self> {
        if self.v <= -1 {
            return Err(Error::Domain("ln_1p argument <= -1".into()));
        }
        Ok(self.wrap(Float::with_val(self.bits(), self.v.ln_1p_ref())))
    }

    pub fn exp(&self) -> Self {
        self.wrap(Float::with_val(self.bits(), self.v.exp_ref()))
    }

    /// `exp(x) - 1` without cancellation for small `x`.
    pub fn exp_m1(&self) -> Self {
        self.wrap(Float::with_val(self.bits(), self.v.exp_m1_ref()))
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.v < 0 {
            return Err(Error::Domain("sqrt of negative value".into()));
        }
        Ok(self.wrap(Float::with_val(self.bits(), self.v.sqrt_ref())))
    }

    pub fn atan(&self) -> Self {
        self.wrap(Float::with_val(self.bits(), self.v.atan_ref()))
    }

    pub fn sinh(&self) -> Self {
        self.wrap(Float::with_val(self.bits(), self.v.sinh_ref()))
    }

    pub fn cosh(&self) -> Self {
        self.wrap(Float::with_val(self.bits(), self.v.cosh_ref()))
    }

    pub fn powi(&self, n: i32) -> Self {
        self.wrap(Float::with_val(self.bits(), (&self.v).pow(n)))
    }

    /// `x^y` for `x > 0`.
    pub fn powf(&self, y: &ExtReal) -> Result<Self> {
        if self.v <= 0 {
            return Err(Error::Domain("powf base must be positive".into()));
        }
        let d = self.d.min(y.d);
        Ok(ExtReal { v: Float::with_val(bits_for(d), (&self.v).pow(&y.v)), d })
    }

    pub fn abs(&self) -> Self {
        self.wrap(Float::with_val(self.bits(), self.v.abs_ref()))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.v.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(self.wrap(Float::with_val(self.bits(), self.v.recip_ref())))
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v < 0
    }

    pub fn is_positive(&self) -> bool {
        self.v > 0
    }

    pub fn to_f64(&self) -> f64 {
        self.v.to_f64()
    }

    /// `log10 |x|`, `-inf` for zero. Accurate well beyond f64 exponent range.
    pub fn log10_abs(&self) -> f64 {
        if self.v.is_zero() {
            return f64::NEG_INFINITY;
        }
        let (m, e) = self.v.to_f64_exp();
        m.abs().log10() + f64::from(e) * std::f64::consts::LOG10_2
    }

    /// True when `|self| < 10^e`.
    pub fn below_pow10(&self, e: i64) -> bool {
        (self.log10_abs() as f64) < e as f64
    }

    pub fn max_abs(a: &ExtReal, b: &ExtReal) -> ExtReal {
        if a.v.clone().abs() >= b.v.clone().abs() {
            a.abs()
        } else {
            b.abs()
        }
    }

    /// Fixed notation with `sig` significant digits for moderate magnitudes,
    /// scientific otherwise. Deterministic for a given value.
    pub fn to_string_sig(&self, sig: usize) -> String {
        if self.v.is_zero() {
            return "0".into();
        }
        let (neg, digits, exp) = self.v.to_sign_string_exp(10, Some(sig.max(1)));
        let exp = exp.unwrap_or(0);
        let sign = if neg { "-" } else { "" };
        // value = 0.digits * 10^exp
        if (-8..=24).contains(&exp) {
            let mut out = String::from(sign);
            if exp <= 0 {
                out.push_str("0.");
                out.extend(std::iter::repeat('0').take((-exp) as usize));
                out.push_str(&digits);
            } else {
                let e = exp as usize;
                if e >= digits.len() {
                    out.push_str(&digits);
                    out.extend(std::iter::repeat('0').take(e - digits.len()));
                } else {
                    out.push_str(&digits[..e]);
                    out.push('.');
                    out.push_str(&digits[e..]);
                }
            }
            out
        } else {
            format!("{sign}{}.{}e{}", &digits[..1], &digits[1..], exp - 1)
        }
    }

    /// Scientific notation with `sig` significant digits.
    pub fn to_sci(&self, sig: usize) -> String {
        if self.v.is_zero() {
            return "0".into();
        }
        let (neg, digits, exp) = self.v.to_sign_string_exp(10, Some(sig.max(1)));
        let exp = exp.unwrap_or(0);
        let sign = if neg { "-" } else { "" };
        format!("{sign}{}.{}e{}", &digits[..1], &digits[1..], exp - 1)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_sig(self.d as usize))
    }
}

impl PartialEq for ExtReal {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.partial_cmp(&other.v)
    }
}

impl PartialEq<i64> for ExtReal {
    fn eq(&self, other: &i64) -> bool {
        self.v == *other
    }
}

impl PartialOrd<i64> for ExtReal {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.v.partial_cmp(other)
    }
}

macro_rules! bin_op {
    ($tr:ident, $m:ident) => {
        impl $tr<&ExtReal> for &ExtReal {
            type Output = ExtReal;
            fn $m(self, rhs: &ExtReal) -> ExtReal {
                let d = self.d.min(rhs.d);
                ExtReal { v: Float::with_val(bits_for(d), $tr::$m(&self.v, &rhs.v)), d }
            }
        }
        impl $tr<ExtReal> for ExtReal {
            type Output = ExtReal;
            fn $m(self, rhs: ExtReal) -> ExtReal {
                $tr::$m(&self, &rhs)
            }
        }
        impl $tr<&ExtReal> for ExtReal {
            type Output = ExtReal;
            fn $m(self, rhs: &ExtReal) -> ExtReal {
                $tr::$m(&self, rhs)
            }
        }
        impl $tr<ExtReal> for &ExtReal {
            type Output = ExtReal;
            fn $m(self, rhs: ExtReal) -> ExtReal {
                $tr::$m(self, &rhs)
            }
        }
        impl $tr<i64> for &ExtReal {
            type Output = ExtReal;
            fn $m(self, rhs: i64) -> ExtReal {
                ExtReal { v: Float::with_val(bits_for(self.d), $tr::$m(&self.v, rhs)), d: self.d }
            }
        }
        impl $tr<i64> for ExtReal {
            type Output = ExtReal;
            fn $m(self, rhs: i64) -> ExtReal {
                $tr::$m(&self, rhs)
            }
        }
    };
}

bin_op!(Add, add);
bin_op!(Sub, sub);
bin_op!(Mul, mul);
bin_op!(Div, div);

impl Neg for &ExtReal {
    type Output = ExtReal;
    fn neg(self) -> ExtReal {
        ExtReal { v: Float::with_val(bits_for(self.d), -&self.v), d: self.d }
    }
}

impl Neg for ExtReal {
    type Output = ExtReal;
    fn neg(self) -> ExtReal {
        -&self
    }
}

impl std::iter::Sum for ExtReal {
    fn sum<I: Iterator<Item = ExtReal>>(mut iter: I) -> ExtReal {
        let first = iter.next().expect("sum of empty ExtReal iterator");
        iter.fold(first, |a, b| a + b)
    }
}

/// `log π`.
pub fn ln_pi(digits: u32) -> ExtReal {
    ExtReal::pi(digits).ln().expect("pi is positive")
}
