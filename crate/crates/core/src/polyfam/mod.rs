//! Named polynomial families, each a thin wrapper over the hypergeometric
//! engine in its own parameterization.

mod celine;
mod classical;

pub use celine::{ahmad_a, celine_f, jain_j, khan_f, khan_series, rice_h, shah_f};
pub use classical::{chebyshev_u, gegenbauer, hahn, jacobi, jacobi_coefficients, jacobi_real};
