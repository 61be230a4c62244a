//! Terminating generalized hypergeometric series.
//!
//! A [`HypSeries`] holds the numerator and denominator parameter lists; the
//! argument is supplied at evaluation time so that the same series can be
//! evaluated exactly ([`pfq_exact`]) or in floating point ([`pfq_real`]).

mod params;
mod series;
mod transform;

pub use params::{param_set, ParamSet};
pub use series::{pfq_exact, pfq_real, termination_index, HypSeries};
pub use transform::{weber_erdelyi_first, weber_erdelyi_second};
