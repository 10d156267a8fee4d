//! Dual scalar backend: exact rationals for certificate-grade runs,
//! `f64` with a fixed comparison tolerance for large fuzzing runs.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, ToPrimitive, Zero};

pub use num::traits::One;

/// Exact backend. All arithmetic is performed without rounding.
pub type Rational = BigRational;

/// Field of values the solvers and validators compute over.
///
/// The two implementations are [`Rational`] (exact; tolerance zero) and
/// `f64` (tolerance 1e-9). Conversions from `f64` must be lossless so
/// that instances read from JSON mean the same thing under both backends.
pub trait Scalar:
    Clone + PartialOrd + Signed + Sum<Self> + Display + Debug + Send + Sync + 'static
{
    /// True when comparisons are exact and the tolerance is zero.
    const EXACT: bool;

    fn from_int(n: i64) -> Self;

    /// `num / den`, with `den != 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Lossless conversion; `None` for NaN or infinities.
    fn from_f64(x: f64) -> Option<Self>;

    fn to_f64(&self) -> f64;

    /// `Some(n)` iff the value is an integer that fits an `i64`.
    fn as_int(&self) -> Option<i64>;

    /// Comparison slack: zero for the exact backend, `1e-9` for floats.
    fn default_tolerance() -> Self;

    /// Accepts `q`, `-q`, `p/q`, and plain decimals such as `0.25`.
    fn parse_text(text: &str) -> Option<Self>;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_f64(x: f64) -> Option<Self> {
        Rational::from_float(x)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn as_int(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn default_tolerance() -> Self {
        Rational::zero()
    }

    fn parse_text(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let n: BigInt = num.trim().parse().ok()?;
            let d: BigInt = den.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            return Some(Rational::new(n, d));
        }
        if let Some((int_part, frac_part)) = text.split_once('.') {
            let negative = int_part.trim_start().starts_with('-');
            let int: BigInt = if int_part.is_empty() || int_part == "-" || int_part == "+" {
                BigInt::zero()
            } else {
                int_part.parse().ok()?
            };
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let frac: BigInt = frac_part.parse().ok()?;
            let scale = num::pow::pow(BigInt::from(10), frac_part.len());
            let magnitude = int.abs() * &scale + frac;
            let signed = if negative { -magnitude } else { magnitude };
            return Some(Rational::new(signed, scale));
        }
        let n: BigInt = text.parse().ok()?;
        Some(Rational::from_integer(n))
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn as_int(&self) -> Option<i64> {
        if self.fract() == 0.0 && self.abs() <= 2f64.powi(53) {
            Some(*self as i64)
        } else {
            None
        }
    }

    fn default_tolerance() -> Self {
        1e-9
    }

    fn parse_text(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let n: f64 = num.trim().parse().ok()?;
            let d: f64 = den.trim().parse().ok()?;
            if d == 0.0 {
                return None;
            }
            return Some(n / d);
        }
        text.parse().ok()
    }
}

/// `|a - b| <= tol`.
pub fn within<S: Scalar>(a: &S, b: &S, tol: &S) -> bool {
    (a.clone() - b.clone()).abs() <= *tol
}

/// `a <= b + tol`.
pub fn le_within<S: Scalar>(a: &S, b: &S, tol: &S) -> bool {
    a.clone() <= b.clone() + tol.clone()
}

/// `a >= b - tol`.
pub fn ge_within<S: Scalar>(a: &S, b: &S, tol: &S) -> bool {
    a.clone() + tol.clone() >= b.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rational_forms() {
        assert_eq!(Rational::parse_text("3/2"), Some(Rational::from_ratio(3, 2)));
        assert_eq!(Rational::parse_text("-1/4"), Some(Rational::from_ratio(-1, 4)));
        assert_eq!(Rational::parse_text("0.25"), Some(Rational::from_ratio(1, 4)));
        assert_eq!(Rational::parse_text("-0.3"), Some(Rational::from_ratio(-3, 10)));
        assert_eq!(Rational::parse_text("7"), Some(Rational::from_int(7)));
        assert_eq!(Rational::parse_text("1/0"), None);
        assert_eq!(Rational::parse_text("abc"), None);
    }

    #[test]
    fn lossless_float_conversion() {
        // 0.3 is not 3/10 as a float, but the conversion must preserve the
        // float's exact dyadic value.
        let q = Rational::from_f64(0.3).unwrap();
        assert_eq!(Scalar::to_f64(&q), 0.3);
        assert_eq!(Rational::from_f64(f64::NAN), None);
    }

    #[test]
    fn integer_detection() {
        assert_eq!(Rational::from_ratio(6, 2).as_int(), Some(3));
        assert_eq!(Rational::from_ratio(1, 2).as_int(), None);
        assert_eq!(3.0f64.as_int(), Some(3));
        assert_eq!(0.5f64.as_int(), None);
    }

    #[test]
    fn tolerance_comparisons() {
        assert!(within(&1.0, &(1.0 + 5e-10), &f64::default_tolerance()));
        assert!(!within(&1.0, &1.1, &f64::default_tolerance()));
        assert!(le_within(&1.0000000001, &1.0, &f64::default_tolerance()));
    }
}
