//! Identities linking the polynomial families to coupling coefficients.

use serde::{Deserialize, Serialize};

use crate::angular::{threej, ThreeJArgs};
use crate::exact::{fact_half, phase, pochhammer, HalfInt, Rational, SqrtRational};
use crate::polyfam::{khan_f, khan_series};
use crate::{Error, Result};

/// `(1/Γ(α+½)) ∫₀^∞ t^{α−½} e^{−t} f_n(1, 2α+1; −; −; xt) dt`, integrated term
/// by term: each `t^k` contributes `(α+½)_k`.
pub fn khan_gamma_integral_lhs(n: u64, alpha: &Rational, x: &Rational) -> Result<Rational> {
    let shift = alpha + Rational::frac(1, 2);
    if shift.as_nonpositive_integer().is_some() {
        return Err(Error::domain(format!("α + 1/2 = {shift} is a pole of Γ")));
    }
    let lam = alpha * 2 + 1;
    let coeffs = khan_series(1, &lam, &lam, &[], &[], n)?.coefficients().map_err(|e| Error::domain(e.to_string()))?;
    let mut acc = Rational::zero();
    let mut power = Rational::one();
    for (k, c) in coeffs.iter().enumerate() {
        acc += c * &pochhammer(&shift, k as u64) * &power;
        power *= x;
    }
    Ok(acc)
}

/// Parameters of the Khan polynomial
/// `f_n(1, 1+α+β, 1+2α; α+½, −x; −N; 1) = ₃F₂[−n, n+α+β+1, −x; α+1, −N; 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HahnKhanParams {
    pub n: u64,
    pub x: i64,
    pub big_n: i64,
    pub alpha: i64,
    pub beta: i64,
}

impl HahnKhanParams {
    pub fn lhs(&self) -> Result<Rational> {
        let (a, b) = (Rational::from_int(self.alpha), Rational::from_int(self.beta));
        khan_f(
            1,
            &(&a + &b + 1),
            &(&a * 2 + 1),
            &[&a + Rational::frac(1, 2), Rational::from_int(-self.x)],
            &[Rational::from_int(-self.big_n)],
            &Rational::one(),
            self.n,
        )
    }
}

fn int(x: HalfInt) -> i64 {
    x.to_int().expect("integer-valued combination")
}

fn checked(args: &ThreeJArgs) -> Result<()> {
    args.validate()?;
    if !args.selection_ok() {
        return Err(Error::domain("arguments violate the 3j selection rules"));
    }
    Ok(())
}

/// First substitution: `n = j₁+j₂−j₃, x = j₂+m₂, N = 2j₂, α = j₃−j₂+m₁, β = j₃−j₂−m₁`.
pub fn rajeswari_first_params(args: &ThreeJArgs) -> Result<HahnKhanParams> {
    checked(args)?;
    let ThreeJArgs { j1, j2, j3, m1, m2, .. } = *args;
    Ok(HahnKhanParams {
        n: int(j1 + j2 - j3) as u64,
        x: int(j2 + m2),
        big_n: j2.twice(),
        alpha: int(j3 - j2 + m1),
        beta: int(j3 - j2 - m1),
    })
}

/// Right side of the first substitution:
/// `(−1)^{x+j₂−j₃+m₁+J} (j₃−j₂+m₁)!/(2j₂)! √[(j₂+m₂)!(j₂−m₂)!(j₁−m₁)!(j₁+j₂−j₃)!(j₂−j₁+j₃)!(J+1)!
///  / ((j₃+m₃)!(j₃−m₃)!(j₁+m₁)!(j₁−j₂+j₃)!)] · (j₁ j₂ j₃; m₁ m₂ m₃)`, `J = j₁+j₂+j₃`.
pub fn rajeswari_first_rhs(args: &ThreeJArgs) -> Result<SqrtRational> {
    let p = rajeswari_first_params(args)?;
    let ThreeJArgs { j1, j2, j3, m1, m2, m3 } = *args;
    let big_j = j1 + j2 + j3;
    let one = HalfInt::from_int(1);
    let sign = phase(2 * p.x + (j2 - j3 + m1 + big_j).twice());
    let radicand = fact_half(j2 + m2)?
        * fact_half(j2 - m2)?
        * fact_half(j1 - m1)?
        * fact_half(j1 + j2 - j3)?
        * fact_half(j2 - j1 + j3)?
        * fact_half(big_j + one)?
        / (fact_half(j3 + m3)? * fact_half(j3 - m3)? * fact_half(j1 + m1)? * fact_half(j1 - j2 + j3)?);
    let rational = fact_half(j3 - j2 + m1)? / fact_half(j2 + j2)? * Rational::from_int(i64::from(sign));
    Ok(SqrtRational::sqrt(radicand)?.scale(&rational).mul(&threej(args)?))
}

/// Second substitution: `n = j₁+j₂−j₃, x = j₁−m₁, N = 2j₁, α = −j₁−j₂−m₃−1, β = −j₁−j₂+m₃−1`.
pub fn rajeswari_second_params(args: &ThreeJArgs) -> Result<HahnKhanParams> {
    checked(args)?;
    let ThreeJArgs { j1, j2, m1, m3, .. } = *args;
    Ok(HahnKhanParams {
        n: int(args.j1 + j2 - args.j3) as u64,
        x: int(j1 - m1),
        big_n: j1.twice(),
        alpha: -int(j1 + j2 + m3) - 1,
        beta: -int(j1 + j2 - m3) - 1,
    })
}

/// Right side of the second substitution:
/// `(−1)^{j₁−j₂−m₃} / ((2j₁)!(j₁+j₂+m₃)!) · √[(j₁+j₂−j₃)!(j₁−m₁)!(j₁+m₁)!(j₁−j₂+j₃)!
///  (j₂+m₂)!(j₂−m₂)!(j₃+m₃)!(J+1)! / ((j₃−m₃)!(−j₁+j₂+j₃)!)] · (j₁ j₂ j₃; m₁ m₂ m₃)`.
pub fn rajeswari_second_rhs(args: &ThreeJArgs) -> Result<SqrtRational> {
    checked(args)?;
    let ThreeJArgs { j1, j2, j3, m1, m2, m3 } = *args;
    let big_j = j1 + j2 + j3;
    let one = HalfInt::from_int(1);
    let sign = phase((j1 - j2 - m3).twice());
    let radicand = fact_half(j1 + j2 - j3)?
        * fact_half(j1 - m1)?
        * fact_half(j1 + m1)?
        * fact_half(j1 - j2 + j3)?
        * fact_half(j2 + m2)?
        * fact_half(j2 - m2)?
        * fact_half(j3 + m3)?
        * fact_half(big_j + one)?
        / (fact_half(j3 - m3)? * fact_half(-j1 + j2 + j3)?);
    let rational = Rational::from_int(i64::from(sign)) / (fact_half(j1 + j1)? * fact_half(j1 + j2 + m3)?);
    Ok(SqrtRational::sqrt(radicand)?.scale(&rational).mul(&threej(args)?))
}
