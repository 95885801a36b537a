//! Membership degrees: scalars constrained to the unit interval.
//!
//! All algorithms in this crate are generic over the backing scalar through
//! [`DegreeValue`]. The canonical instantiation is `BigRational` (see the
//! type aliases at the crate root): every theorem checked here is an exact
//! equality, and rational arithmetic keeps `=1`, `>0` and vector-equality
//! tests sound. Inexact scalars such as wrapped floats satisfy the trait
//! bounds but forfeit those guarantees.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Scalar types that can back a membership degree.
pub trait DegreeValue:
    Clone
    + Ord
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> DegreeValue for T where
    T: Clone
        + Ord
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
{
}

/// A membership degree: a scalar value in `[0, 1]`.
///
/// Construction is range-checked; arithmetic helpers only produce values
/// that stay inside the interval, so no rounding or clamping ever occurs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Degree<V: DegreeValue>(V);

impl<V: DegreeValue> Degree<V> {
    pub fn new(value: V) -> Result<Self, Error> {
        if value < V::zero() || value > V::one() {
            return Err(Error::DegreeOutOfRange {
                value: value.to_string(),
            });
        }
        Ok(Degree(value))
    }

    /// Wraps a value already known to lie in `[0, 1]`.
    pub(crate) fn new_unchecked(value: V) -> Self {
        debug_assert!(value >= V::zero() && value <= V::one());
        Degree(value)
    }

    pub fn zero() -> Self {
        Degree(V::zero())
    }

    pub fn one() -> Self {
        Degree(V::one())
    }

    pub fn half() -> Self {
        Degree(V::one() / (V::one() + V::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn value(&self) -> &V {
        &self.0
    }

    /// `1 - x`.
    pub fn complement(&self) -> Self {
        Degree(V::one() - self.0.clone())
    }

    /// `x * y`.
    pub fn product(&self, other: &Self) -> Self {
        Degree(self.0.clone() * other.0.clone())
    }

    /// `max(0, x + y - 1)`.
    pub fn bounded_excess(&self, other: &Self) -> Self {
        let sum = self.0.clone() + other.0.clone();
        if sum <= V::one() {
            Degree(V::zero())
        } else {
            Degree(sum - V::one())
        }
    }

    /// `(x + y) / 2`.
    pub fn midpoint(&self, other: &Self) -> Self {
        Degree((self.0.clone() + other.0.clone()) / (V::one() + V::one()))
    }
}

impl<V: DegreeValue> fmt::Display for Degree<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Parses `"p/q"`, a decimal such as `"0.5"`, or an integer, all exactly.
///
/// Decimal inputs convert without rounding (`0.5` becomes `1/2`); the
/// canonical emitted form is always the reduced rational.
impl FromStr for Degree<BigRational> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let text = s.trim();
        let parse_err = |reason: &str| Error::DegreeParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if text.is_empty() {
            return Err(parse_err("empty input"));
        }
        let value = if let Some((numer, denom)) = text.split_once('/') {
            let numer = BigInt::from_str(numer.trim()).map_err(|_| parse_err("bad numerator"))?;
            let denom = BigInt::from_str(denom.trim()).map_err(|_| parse_err("bad denominator"))?;
            if denom.is_zero() {
                return Err(parse_err("zero denominator"));
            }
            BigRational::new(numer, denom)
        } else if let Some((int_part, frac_part)) = text.split_once('.') {
            let (sign, int_digits) = match int_part.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, int_part),
            };
            if !int_digits.chars().all(|c| c.is_ascii_digit())
                || !frac_part.chars().all(|c| c.is_ascii_digit())
                || (int_digits.is_empty() && frac_part.is_empty())
            {
                return Err(parse_err("bad decimal"));
            }
            let int_value = if int_digits.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(int_digits).map_err(|_| parse_err("bad decimal"))?
            };
            let frac_value = if frac_part.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(frac_part).map_err(|_| parse_err("bad decimal"))?
            };
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            BigRational::new(sign * (int_value * &scale + frac_value), scale)
        } else {
            let n = BigInt::from_str(text).map_err(|_| parse_err("bad integer"))?;
            BigRational::from_integer(n)
        };
        Degree::new(value)
    }
}
