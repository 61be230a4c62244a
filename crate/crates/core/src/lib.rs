//! Exact evaluation of Sister Celine-type hypergeometric polynomial families
//! and the angular-momentum quantities built on them: characters, Wigner
//! d-functions, 3j symbols and Clebsch–Gordan coefficients.
//!
//! Everything that can be computed exactly is computed over arbitrary-precision
//! rationals ([`Rational`]) or signed square roots of rationals
//! ([`SqrtRational`]). Trigonometric quantities are evaluated in `f64`, with the
//! polynomial part still evaluated exactly at the (dyadic) value of the
//! argument before a single final rounding.
//!
//! The [`harness`] module sweeps parameter grids and checks every cross
//! identity between these quantities against an independent oracle.

pub mod angular;
mod error;
pub mod exact;
pub mod harness;
pub mod hypergeom;
pub mod polyfam;

pub use error::{Error, Result};
pub use exact::{HalfInt, Rational, SqrtRational};
pub use hypergeom::{HypSeries, ParamSet};
