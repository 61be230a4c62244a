//! Clebsch–Gordan coefficients written through Hahn polynomials.

use serde::{Deserialize, Serialize};

use crate::angular::CgArgs;
use crate::exact::{factorial, HalfInt, Rational, SqrtRational};
use crate::polyfam::hahn;
use crate::{Error, Result};

/// How the unfactorialed last denominator entry `(2N−n+α+β+1)` of the second
/// form is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KoornwinderReading {
    /// `(2N−n+α+β+1)!`
    Factorial,
    /// the bare factor `2N−n+α+β+1`
    Bare,
}

fn check_ranges(n: u64, x: u64, big_n: u64) -> Result<()> {
    if n > big_n || x > big_n {
        return Err(Error::domain(format!("need 0 ≤ n, x ≤ N; got n = {n}, x = {x}, N = {big_n}")));
    }
    Ok(())
}

fn f(n: u64) -> Rational {
    factorial(n as i64).expect("nonnegative")
}

fn half(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

/// CG labels matched by the first form:
/// `a = N/2, α′ = N/2−x, b = (N+α+β)/2, β′ = (α−β−N)/2+x, c = n+(α+β)/2, γ = (α−β)/2`.
pub fn hahn_first_labels(n: u64, x: u64, alpha: u64, beta: u64, big_n: u64) -> CgArgs {
    let (n, x, a, b, nn) = (n as i64, x as i64, alpha as i64, beta as i64, big_n as i64);
    CgArgs::new(
        half(nn),
        half(nn - 2 * x),
        half(nn + a + b),
        half(a - b - nn + 2 * x),
        half(2 * n + a + b),
        half(a - b),
    )
}

/// CG labels matched by the second form:
/// `a = N/2, α′ = N/2−x, b = (N+α+β)/2, β′ = (β−α−N)/2+x, c = N−n+(α+β)/2, γ = (β−α)/2`.
pub fn hahn_second_labels(n: u64, x: u64, alpha: u64, beta: u64, big_n: u64) -> CgArgs {
    let (n, x, a, b, nn) = (n as i64, x as i64, alpha as i64, beta as i64, big_n as i64);
    CgArgs::new(
        half(nn),
        half(nn - 2 * x),
        half(nn + a + b),
        half(b - a - nn + 2 * x),
        half(2 * (nn - n) + a + b),
        half(b - a),
    )
}

/// First form:
/// `(−1)^x N!/α! √[(2n+α+β+1)(N−x+β)!(x+α)!(n+α)!(n+α+β)! /
/// (x!(N−x)!(n+β)!n!(N−n)!(N+n+α+β+1)!)] Q_n(x; α, β, N)`.
pub fn cg_from_hahn_first(n: u64, x: u64, alpha: u64, beta: u64, big_n: u64) -> Result<SqrtRational> {
    check_ranges(n, x, big_n)?;
    let (a, b, nn) = (alpha, beta, big_n);
    let radicand = Rational::from_int((2 * n + a + b + 1) as i64) * f(nn - x + b) * f(x + a) * f(n + a) * f(n + a + b)
        / (f(x) * f(nn - x) * f(n + b) * f(n) * f(nn - n) * f(nn + n + a + b + 1));
    let q = hahn(n, &Rational::from_int(x as i64), &Rational::from_int(a as i64), &Rational::from_int(b as i64), nn)?;
    let sign = if x.is_multiple_of(2) { 1 } else { -1 };
    let scale = f(nn) / f(a) * q * Rational::from_int(sign);
    Ok(SqrtRational::sqrt(radicand)?.scale(&scale))
}

/// Second form with the factorial reading of its ambiguous factor.
pub fn cg_from_hahn_second(n: u64, x: u64, alpha: u64, beta: u64, big_n: u64) -> Result<SqrtRational> {
    cg_from_hahn_second_with(n, x, alpha, beta, big_n, KoornwinderReading::Factorial)
}

/// Second form:
/// `(α+N)! N! √[(2N−2n+α+β+1)(N−n+β)!(N−n+α+β)! / (x!(N−x)!(α+N−x)!(β+x)!
/// n!(N−n)!(N−n+α)! L)] Q_n(x; −N−α−1, −N−β−1, N)` where `L` is set by `reading`.
pub fn cg_from_hahn_second_with(
    n: u64,
    x: u64,
    alpha: u64,
    beta: u64,
    big_n: u64,
    reading: KoornwinderReading,
) -> Result<SqrtRational> {
    check_ranges(n, x, big_n)?;
    let (a, b, nn) = (alpha, beta, big_n);
    let last = 2 * nn - n + a + b + 1;
    let last = match reading {
        KoornwinderReading::Factorial => f(last),
        KoornwinderReading::Bare => Rational::from_int(last as i64),
    };
    let radicand = Rational::from_int((2 * nn - 2 * n + a + b + 1) as i64) * f(nn - n + b) * f(nn - n + a + b)
        / (f(x) * f(nn - x) * f(a + nn - x) * f(b + x) * f(n) * f(nn - n) * f(nn - n + a) * last);
    let shift = |p: u64| Rational::from_int(-((nn + p + 1) as i64));
    let q = hahn(n, &Rational::from_int(x as i64), &shift(a), &shift(b), nn)
        .map_err(|e| Error::domain(format!("Hahn factor: {e}")))?;
    let scale = f(a + nn) * f(nn) * q;
    Ok(SqrtRational::sqrt(radicand)?.scale(&scale))
}
