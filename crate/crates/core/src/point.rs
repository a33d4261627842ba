//! Exponents, cuspidal lines and points on them.
//!
//! A point `ν_ρ^x ρ` is stored as the pair (line, x). One unit along a line is
//! one twist by `ν_ρ`, so the reducibility step is always exactly 1. Exponents
//! are kept as exact half-integers: integral positions suffice for everything
//! except the theta transport, which shifts by `(m - n) / 2`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// An exact rational with denominator dividing 2, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const ONE: HalfInt = HalfInt(2);
    pub const HALF: HalfInt = HalfInt(1);

    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    /// Builds `twice / 2`.
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The value as an integer, if it is one.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    /// `self - other` as an integer count of steps, if the difference is integral.
    pub fn steps_from(self, other: HalfInt) -> Option<i64> {
        (self - other).to_int()
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl From<i32> for HalfInt {
    fn from(n: i32) -> Self {
        HalfInt::from_int(n as i64)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `n` or `n/2` for a (possibly signed) integer `n`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::NotHalfInteger(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((num, den)) => (num.trim(), Some(den.trim())),
            None => (s, None),
        };
        let num: i64 = num.parse().map_err(|_| bad())?;
        match den {
            None => Ok(HalfInt::from_int(num)),
            Some("1") => Ok(HalfInt::from_int(num)),
            Some("2") => Ok(HalfInt(num)),
            Some(_) => Err(bad()),
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A cuspidal line `{ν_ρ^t ρ}`.
///
/// `unit_degree` is the degree `gr(ρ)` contributed by one point of the line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    pub id: u32,
    pub unit_degree: u32,
}

impl Line {
    pub const DEFAULT: Line = Line { id: 0, unit_degree: 1 };

    pub fn new(id: u32, unit_degree: u32) -> Result<Self, Error> {
        if unit_degree == 0 {
            return Err(Error::ZeroUnitDegree(id));
        }
        Ok(Line { id, unit_degree })
    }

    pub fn is_default(&self) -> bool {
        *self == Line::DEFAULT
    }
}

impl Default for Line {
    fn default() -> Self {
        Line::DEFAULT
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit_degree == 1 {
            write!(f, "{}", self.id)
        } else {
            write!(f, "{}:{}", self.id, self.unit_degree)
        }
    }
}

/// The cuspidal representation `ν_ρ^x ρ` on a given line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub line: Line,
    pub x: HalfInt,
}

impl Point {
    pub fn new(line: Line, x: HalfInt) -> Self {
        Point { line, x }
    }

    /// A point on the default line.
    pub fn at(x: impl Into<HalfInt>) -> Self {
        Point { line: Line::DEFAULT, x: x.into() }
    }

    pub fn shift(self, by: HalfInt) -> Self {
        Point { line: self.line, x: self.x + by }
    }

    pub fn next(self) -> Self {
        self.shift(HalfInt::ONE)
    }

    pub fn prev(self) -> Self {
        self.shift(-HalfInt::ONE)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line.is_default() {
            write!(f, "{}", self.x)
        } else {
            write!(f, "{}@{}", self.x, self.line)
        }
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!("3".parse::<HalfInt>().unwrap(), HalfInt::from_int(3));
        assert_eq!("-3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-3));
        assert_eq!("4/2".parse::<HalfInt>().unwrap(), HalfInt::from_int(2));
        assert_eq!(HalfInt::from_twice(-1).to_string(), "-1/2");
        assert_eq!(HalfInt::from_int(-4).to_string(), "-4");
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("x".parse::<HalfInt>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = HalfInt::from_twice(3);
        let b = HalfInt::HALF;
        assert_eq!(a + b, HalfInt::from_int(2));
        assert_eq!((a - b).to_int(), Some(1));
        assert_eq!(a.steps_from(HalfInt::ZERO), None);
        assert_eq!(-a, HalfInt::from_twice(-3));
    }

    #[test]
    fn zero_unit_degree_rejected() {
        assert!(Line::new(1, 0).is_err());
        assert_eq!(Point::at(2).prev(), Point::at(1));
    }
}
