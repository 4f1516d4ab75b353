//! Exact rational numbers for the scaling path.
//!
//! Every quantity that feeds the approximation certificate (epsilon, rho, the
//! scale factor and the comparisons against it) goes through [`Rational`], so
//! no floating point value ever decides which side of a bound an item lands on.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

use crate::error::{Error, Result};

/// A fraction in lowest terms with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    pub fn new(numer: i128, denom: i128) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Domain("rational with zero denominator".into()));
        }
        if numer == i128::MIN || denom == i128::MIN {
            return Err(Error::Overflow("normalizing a rational"));
        }
        Ok(Rational(Ratio::new(numer, denom)))
    }

    /// For constants already in lowest terms with a positive denominator.
    pub(crate) const fn new_raw(numer: i128, denom: i128) -> Self {
        Rational(Ratio::new_raw(numer, denom))
    }

    pub fn from_integer(value: i128) -> Self {
        Rational(Ratio::from_integer(value))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.0
            .checked_add(&rhs.0)
            .map(Rational)
            .ok_or(Error::Overflow("adding rationals"))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.0
            .checked_sub(&rhs.0)
            .map(Rational)
            .ok_or(Error::Overflow("subtracting rationals"))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.0
            .checked_mul(&rhs.0)
            .map(Rational)
            .ok_or(Error::Overflow("multiplying rationals"))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        self.0
            .checked_div(&rhs.0)
            .map(Rational)
            .ok_or(Error::Overflow("dividing rationals"))
    }

    /// Multiplies by a nonnegative integer.
    pub fn mul_int(&self, k: u128) -> Result<Self> {
        let k = i128::try_from(k).map_err(|_| Error::Overflow("widening integer"))?;
        self.checked_mul(&Rational::from_integer(k))
    }

    /// Divides by a positive integer.
    pub fn div_int(&self, k: u128) -> Result<Self> {
        let k = i128::try_from(k).map_err(|_| Error::Overflow("widening integer"))?;
        self.checked_div(&Rational::from_integer(k))
    }

    pub fn floor(&self) -> i128 {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> i128 {
        self.0.ceil().to_integer()
    }

    /// `floor(a / self)` for a nonnegative integer `a` and positive `self`.
    pub fn floor_div_into(&self, a: u128) -> Result<u128> {
        let (num, den) = self.positive_parts()?;
        let scaled = a
            .checked_mul(den)
            .ok_or(Error::Overflow("scaling a weight"))?;
        Ok(scaled / num)
    }

    /// `ceil(a / self)` for a nonnegative integer `a` and positive `self`.
    pub fn ceil_div_into(&self, a: u128) -> Result<u128> {
        let (num, den) = self.positive_parts()?;
        let scaled = a
            .checked_mul(den)
            .ok_or(Error::Overflow("scaling a weight"))?;
        Ok(scaled.div_ceil(num))
    }

    /// Compares `self` against the integer `a` without leaving exact arithmetic.
    pub fn cmp_int(&self, a: u128) -> Ordering {
        match i128::try_from(a) {
            Ok(a) => self.0.cmp(&Ratio::from_integer(a)),
            Err(_) => Ordering::Less,
        }
    }

    fn positive_parts(&self) -> Result<(u128, u128)> {
        if !self.is_positive() {
            return Err(Error::Domain(format!("divisor {self} must be positive")));
        }
        Ok((self.numer() as u128, self.denom() as u128))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value as i128)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Accepts `p/q` or a bare integer `p`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("`{s}` is not a rational of the form p/q"));
        let (num, den) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: i128 = num.parse().map_err(|_| bad())?;
        let den: i128 = den.parse().map_err(|_| bad())?;
        Rational::new(num, den)
    }
}
