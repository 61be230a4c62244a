use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use crate::exact::Rational;
use crate::{Error, Result};

/// `sign · √radicand` with a nonnegative rational radicand.
///
/// Closed under multiplication but deliberately not under addition; equality
/// is equality of the `(sign, radicand)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    sign: i8,
    radicand: Rational,
}

impl SqrtRational {
    pub fn zero() -> Self {
        SqrtRational { sign: 0, radicand: Rational::zero() }
    }

    pub fn one() -> Self {
        SqrtRational { sign: 1, radicand: Rational::one() }
    }

    /// `sign · √radicand`; a zero radicand forces sign 0 and vice versa.
    pub fn new(sign: i8, radicand: Rational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::domain(format!("negative radicand {radicand}")));
        }
        if !(-1..=1).contains(&sign) {
            return Err(Error::domain(format!("invalid sign {sign}")));
        }
        if radicand.is_zero() || sign == 0 {
            return Ok(Self::zero());
        }
        Ok(SqrtRational { sign, radicand })
    }

    /// `+√r` for nonnegative `r`.
    pub fn sqrt(r: Rational) -> Result<Self> {
        Self::new(1, r)
    }

    /// The value whose signed square is `s`, i.e. `sgn(s)·√|s|`.
    pub fn from_signed_square(s: Rational) -> Self {
        let sign = s.signum();
        SqrtRational { sign, radicand: s.abs() }
    }

    /// A rational `r` as `sgn(r)·√(r²)`.
    pub fn from_rational(r: &Rational) -> Self {
        SqrtRational { sign: r.signum(), radicand: r * r }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// `sign · radicand`: the square of the value, carrying its sign.
    pub fn signed_square(&self) -> Rational {
        match self.sign {
            0 => Rational::zero(),
            1 => self.radicand.clone(),
            _ => -&self.radicand,
        }
    }

    /// Exact product; signs multiply and radicands multiply.
    pub fn mul(&self, other: &SqrtRational) -> SqrtRational {
        if self.sign == 0 || other.sign == 0 {
            return Self::zero();
        }
        SqrtRational { sign: self.sign * other.sign, radicand: &self.radicand * &other.radicand }
    }

    /// `r · self` exactly: the radicand picks up `r²`.
    pub fn scale(&self, r: &Rational) -> SqrtRational {
        if self.sign == 0 || r.is_zero() {
            return Self::zero();
        }
        SqrtRational { sign: self.sign * r.signum(), radicand: &self.radicand * &(r * r) }
    }

    pub fn recip(&self) -> Result<SqrtRational> {
        if self.sign == 0 {
            return Err(Error::domain("reciprocal of zero"));
        }
        Ok(SqrtRational { sign: self.sign, radicand: self.radicand.recip()? })
    }

    pub fn to_f64(&self) -> f64 {
        f64::from(self.sign) * self.radicand.to_f64().sqrt()
    }
}

impl Neg for SqrtRational {
    type Output = SqrtRational;
    fn neg(self) -> SqrtRational {
        SqrtRational { sign: -self.sign, radicand: self.radicand }
    }
}

impl Mul for &SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: &SqrtRational) -> SqrtRational {
        SqrtRational::mul(self, rhs)
    }
}

/// `sqrt_mul`: exact product of two signed square roots.
pub fn sqrt_mul(x: &SqrtRational, y: &SqrtRational) -> SqrtRational {
    x.mul(y)
}

/// `sqrt_scale`: exact product of a signed square root with a rational.
pub fn sqrt_scale(x: &SqrtRational, r: &Rational) -> SqrtRational {
    x.scale(r)
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            1 => write!(f, "sqrt({})", self.radicand),
            _ => write!(f, "-sqrt({})", self.radicand),
        }
    }
}

impl FromStr for SqrtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let (sign, rest) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s),
        };
        let inner = rest
            .strip_prefix("sqrt(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("invalid square-root value `{s}`")))?;
        let radicand: Rational = inner.parse()?;
        if radicand.is_zero() {
            return Err(Error::Parse(format!("non-canonical zero `{s}`")));
        }
        SqrtRational::new(sign, radicand)
    }
}
