use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::exact::Rational;
use crate::{Error, Result};

/// An integer or half-odd-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The integer value, or `None` for a half-odd value.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    pub fn to_rational(self) -> Rational {
        Rational::frac(self.twice, 2)
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// Checks that `m` is a valid projection of the angular momentum `self`:
    /// `|m| ≤ j` and `j − m` an integer.
    pub fn check_projection(self, m: HalfInt) -> Result<()> {
        if self.twice < 0 {
            return Err(Error::domain(format!("negative angular momentum {self}")));
        }
        if m.twice.abs() > self.twice || (self.twice - m.twice) % 2 != 0 {
            return Err(Error::domain(format!("projection {m} invalid for j = {self}")));
        }
        Ok(())
    }

    /// All projections `-j, -j+1, …, j`.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> {
        (-self.twice..=self.twice).step_by(2).map(HalfInt::from_twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `n` or `p/2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid half-integer `{s}` (expected `n` or `n/2`)"));
        match s.split_once('/') {
            Some((p, "2")) => p.trim().parse::<i64>().map(HalfInt::from_twice).map_err(|_| bad()),
            Some(_) => Err(bad()),
            None => s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_in_lowest_terms() {
        assert_eq!(HalfInt::from_twice(4).to_string(), "2");
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
        assert_eq!(HalfInt::ZERO.to_string(), "0");
    }

    #[test]
    fn parses_integer_and_half_forms() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap().twice(), 3);
        assert_eq!("-1/2".parse::<HalfInt>().unwrap().twice(), -1);
        assert_eq!("4/2".parse::<HalfInt>().unwrap().twice(), 4);
        assert_eq!("2".parse::<HalfInt>().unwrap().twice(), 4);
        assert!("0.5".parse::<HalfInt>().is_err());
        assert!("1/3".parse::<HalfInt>().is_err());
    }

    #[test]
    fn projection_checks() {
        let j = HalfInt::from_twice(3);
        assert!(j.check_projection(HalfInt::from_twice(-3)).is_ok());
        assert!(j.check_projection(HalfInt::from_twice(2)).is_err());
        assert!(j.check_projection(HalfInt::from_twice(5)).is_err());
        assert!(HalfInt::from_twice(-2).check_projection(HalfInt::ZERO).is_err());
        assert_eq!(j.projections().count(), 4);
    }
}
