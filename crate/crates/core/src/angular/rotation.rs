//! Wigner d-functions.

use serde::{Deserialize, Serialize};

use crate::exact::{fact_half, factorial, HalfInt, Rational};
use crate::polyfam::jacobi_real;
use crate::Result;

/// Reading of the second factorial in the normalization
/// `[s!(s+·)!/((s+μ)!(s+ν)!)]^{1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DNormReading {
    /// `(s+μ+ν)!` — the unitary normalization.
    SumOfIndices,
    /// `(s+μν)!` — kept only to show that the suites detect it.
    ProductOfIndices,
}

fn check(j: HalfInt, m: HalfInt, k: HalfInt) -> Result<()> {
    j.check_projection(m)?;
    j.check_projection(k)
}

/// `d^j_{mk}(θ)` through the Jacobi polynomial `P_s^{(μ,ν)}(cos θ)`.
pub fn wigner_d(j: HalfInt, m: HalfInt, k: HalfInt, theta: f64) -> Result<f64> {
    wigner_d_with(j, m, k, theta, DNormReading::SumOfIndices)
}

pub fn wigner_d_with(j: HalfInt, m: HalfInt, k: HalfInt, theta: f64, reading: DNormReading) -> Result<f64> {
    check(j, m, k)?;
    let mu = (m - k).abs().to_int().expect("m − k integer");
    let nu = (m + k).abs().to_int().expect("m + k integer");
    let s = (j.twice() - mu - nu) / 2;
    let xi = if k >= m || (k - m).to_int().expect("integer") % 2 == 0 { 1.0 } else { -1.0 };
    let second = match reading {
        DNormReading::SumOfIndices => s + mu + nu,
        DNormReading::ProductOfIndices => s + mu * nu,
    };
    let f = |n: i64| factorial(n).expect("nonnegative");
    let norm = (f(s) * f(second) / (f(s + mu) * f(s + nu))).to_f64().sqrt();
    let half = theta / 2.0;
    let p = jacobi_real(s as u64, &Rational::from_int(mu), &Rational::from_int(nu), theta.cos())?;
    Ok(xi * norm * half.sin().powi(mu as i32) * half.cos().powi(nu as i32) * p)
}

/// `d^j_{mk}(θ)` by the classical finite sum over `t`:
/// `Σ (−1)^{m−k+t} √((j+m)!(j−m)!(j+k)!(j−k)!) / ((j+k−t)! t! (m−k+t)! (j−m−t)!)
///  · cos^{2j+k−m−2t}(θ/2) sin^{m−k+2t}(θ/2)`.
pub fn wigner_d_sum(j: HalfInt, m: HalfInt, k: HalfInt, theta: f64) -> Result<f64> {
    check(j, m, k)?;
    let int = |x: HalfInt| x.to_int().expect("integer-valued combination");
    let (jpk, jmm, mmk) = (int(j + k), int(j - m), int(m - k));
    let root = fact_half(j + m)? * fact_half(j - m)? * fact_half(j + k)? * fact_half(j - k)?;
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let two_j = j.twice();
    let mut sum = 0.0;
    for t in 0.max(-mmk)..=jpk.min(jmm) {
        let den = factorial(jpk - t)? * factorial(t)? * factorial(mmk + t)? * factorial(jmm - t)?;
        let coeff = (&root / &(&den * &den)).to_f64().sqrt();
        let sign = if (mmk + t) % 2 == 0 { 1.0 } else { -1.0 };
        let cos_pow = (two_j - mmk - 2 * t) as i32;
        let sin_pow = (mmk + 2 * t) as i32;
        sum += sign * coeff * c.powi(cos_pow) * s.powi(sin_pow);
    }
    Ok(sum)
}
