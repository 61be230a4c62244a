//! Characters and generalized characters of the rotation group.

use crate::exact::{double_factorial, factorial, pochhammer, HalfInt, Rational, SqrtRational};
use crate::hypergeom::{pfq_real, HypSeries};
use crate::polyfam::{jacobi_real, khan_series};
use crate::{Error, Result};

fn two_j(j: HalfInt) -> Result<u64> {
    if j.twice() < 0 {
        return Err(Error::domain(format!("negative angular momentum {j}")));
    }
    Ok(j.twice() as u64)
}

/// `₂F₁[−2j, 2j+2; 3/2; ·]`.
pub fn character_series(j: HalfInt) -> Result<HypSeries> {
    let n = two_j(j)? as i64;
    Ok(HypSeries::new(vec![Rational::from_int(-n), Rational::from_int(n + 2)], vec![Rational::frac(3, 2)]))
}

/// `(4j−2)!!/(2(4j+1)!!) · (3/2)_{2j}/(2j)!`, the rational prefactor of the
/// hypergeometric character formula (`j > 0`).
pub fn character_prefactor(j: HalfInt) -> Result<Rational> {
    let n = two_j(j)? as i64;
    if n == 0 {
        return Err(Error::domain("character prefactor needs (−2)!! at j = 0"));
    }
    Ok(double_factorial(2 * n - 2)? / (double_factorial(2 * n + 1)? * 2) * pochhammer(&Rational::frac(3, 2), n as u64)
        / factorial(n)?)
}

/// The constant ratio `character / character_closed = (4j−2)!!/(2^{2j+1}(2j+1)!)`.
pub fn character_ratio(j: HalfInt) -> Result<Rational> {
    let n = two_j(j)? as i64;
    if n == 0 {
        return Ok(Rational::one());
    }
    Ok(double_factorial(2 * n - 2)? / (Rational::from_int(2).pow(n as u32 + 1) * factorial(n + 1)?))
}

/// `(4j−2)!!/(2(4j+1)!!) · ((3/2)_{2j}/(2j)!) · ₂F₁[−2j, 2j+2; 3/2; sin²(ω/4)]`;
/// `1` at `j = 0`.
pub fn character(j: HalfInt, omega: f64) -> Result<f64> {
    if two_j(j)? == 0 {
        return Ok(1.0);
    }
    let y = (omega / 4.0).sin().powi(2);
    Ok(character_prefactor(j)?.to_f64() * pfq_real(&character_series(j)?, y)?)
}

/// `Σ_m cos(mω)` over the `2j+1` projections.
pub fn character_closed(j: HalfInt, omega: f64) -> Result<f64> {
    two_j(j)?;
    Ok(j.projections().map(|m| (m.to_f64() * omega).cos()).sum())
}

fn check_order(j: HalfInt, lambda: HalfInt) -> Result<(i64, i64)> {
    let n = two_j(j)? as i64;
    match lambda.to_int() {
        Some(l) if (0..=n).contains(&l) => Ok((n, l)),
        _ => Err(Error::domain(format!("order λ = {lambda} must be an integer in [0, 2j] for j = {j}"))),
    }
}

/// `₂F₁[λ−2j, 2j+λ+2; λ+3/2; ·]`.
pub fn gen_character_series(j: HalfInt, lambda: HalfInt) -> Result<HypSeries> {
    let (n, l) = check_order(j, lambda)?;
    Ok(HypSeries::new(
        vec![Rational::from_int(l - n), Rational::from_int(n + l + 2)],
        vec![Rational::frac(2 * l + 3, 2)],
    ))
}

/// Sister Celine form `f_{2j−λ}(1, 2λ+2, 2λ+2; λ+1; −; ·)` of the same series.
pub fn gen_character_celine_series(j: HalfInt, lambda: HalfInt) -> Result<HypSeries> {
    let (n, l) = check_order(j, lambda)?;
    let two_l2 = Rational::from_int(2 * l + 2);
    khan_series(1, &two_l2, &two_l2, &[Rational::from_int(l + 1)], &[], (n - l) as u64)
}

/// Hypergeometric form of the generalized character:
/// `√(2j+1)/(4j+1)!! · √((2j+λ+1)!/(2j−λ)!) · 2^{2j−λ} sin^λ(ω/2) (λ+3/2)_{2j−λ}
///  · ₂F₁[λ−2j, 2j+λ+2; λ+3/2; sin²(ω/4)]`.
pub fn gen_character(j: HalfInt, lambda: HalfInt, omega: f64) -> Result<f64> {
    let (n, l) = check_order(j, lambda)?;
    let root = SqrtRational::sqrt(Rational::from_int(n + 1) * factorial(n + l + 1)? / factorial(n - l)?)?;
    let rational = Rational::from_int(2).pow((n - l) as u32)
        * pochhammer(&Rational::frac(2 * l + 3, 2), (n - l) as u64)
        / double_factorial(2 * n + 1)?;
    let y = (omega / 4.0).sin().powi(2);
    let f = pfq_real(&gen_character_series(j, lambda)?, y)?;
    Ok(root.scale(&rational).to_f64() * (omega / 2.0).sin().powi(l as i32) * f)
}

/// Jacobi form of the generalized character:
/// `√(2j+1)/(4j+1)!! · √((2j−λ)!(2j+λ+1)!) · 2^{2j−λ} sin^λ(ω/2)
///  · P_{2j−λ}^{(λ+1/2, λ+1/2)}(cos(ω/2))`.
pub fn gen_character_jacobi(j: HalfInt, lambda: HalfInt, omega: f64) -> Result<f64> {
    let (n, l) = check_order(j, lambda)?;
    let root = SqrtRational::sqrt(Rational::from_int(n + 1) * factorial(n - l)? * factorial(n + l + 1)?)?;
    let rational = Rational::from_int(2).pow((n - l) as u32) / double_factorial(2 * n + 1)?;
    let ab = Rational::frac(2 * l + 1, 2);
    let p = jacobi_real((n - l) as u64, &ab, &ab, (omega / 2.0).cos())?;
    Ok(root.scale(&rational).to_f64() * (omega / 2.0).sin().powi(l as i32) * p)
}
