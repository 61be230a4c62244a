//! Exact arithmetic substrate: rationals, half-integers, signed square roots
//! of rationals and the factorial family.

mod combinatorics;
mod halfint;
mod rational;
mod sqrt;

pub use combinatorics::{double_factorial, factorial, factorial_int, phase, pochhammer, proj_norm, triangle_delta};
pub(crate) use combinatorics::{fact_half, triangle_ok};
pub use halfint::HalfInt;
pub use rational::Rational;
pub use sqrt::{sqrt_mul, sqrt_scale, SqrtRational};

/// Exact values serialize as their canonical text rendering.
macro_rules! serde_via_str {
    ($($t:ty),*) => {$(
        impl serde::Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> serde::Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let s = <std::borrow::Cow<'de, str>>::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    )*};
}

serde_via_str!(Rational, HalfInt, SqrtRational);
