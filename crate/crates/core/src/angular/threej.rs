//! Wigner 3j symbols and Clebsch–Gordan coefficients.

use serde::{Deserialize, Serialize};

use crate::exact::{fact_half, phase, proj_norm, triangle_delta, triangle_ok, HalfInt, Rational, SqrtRational};
use crate::hypergeom::{pfq_exact, weber_erdelyi_first, HypSeries};
use crate::{Error, Result};

/// Arguments of `(j₁ j₂ j₃; m₁ m₂ m₃)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ThreeJArgs {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j3: HalfInt,
    pub m1: HalfInt,
    pub m2: HalfInt,
    pub m3: HalfInt,
}

/// Arguments of `C^{cγ}_{aα, bβ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CgArgs {
    pub a: HalfInt,
    pub alpha: HalfInt,
    pub b: HalfInt,
    pub beta: HalfInt,
    pub c: HalfInt,
    pub gamma: HalfInt,
}

impl ThreeJArgs {
    pub fn new(j: [HalfInt; 3], m: [HalfInt; 3]) -> Self {
        ThreeJArgs { j1: j[0], j2: j[1], j3: j[2], m1: m[0], m2: m[1], m3: m[2] }
    }

    /// From twice-values `[2j₁, 2j₂, 2j₃, 2m₁, 2m₂, 2m₃]`.
    pub fn from_twice(t: [i64; 6]) -> Self {
        let h = HalfInt::from_twice;
        ThreeJArgs::new([h(t[0]), h(t[1]), h(t[2])], [h(t[3]), h(t[4]), h(t[5])])
    }

    pub fn twice(&self) -> [i64; 6] {
        [self.j1, self.j2, self.j3, self.m1, self.m2, self.m3].map(HalfInt::twice)
    }

    /// Each `(j, m)` pair individually well formed.
    pub fn validate(&self) -> Result<()> {
        self.j1.check_projection(self.m1)?;
        self.j2.check_projection(self.m2)?;
        self.j3.check_projection(self.m3)
    }

    /// Triangle rule, integer perimeter and vanishing projection sum.
    pub fn selection_ok(&self) -> bool {
        (self.m1 + self.m2 + self.m3).twice() == 0 && triangle_ok(self.j1, self.j2, self.j3)
    }

    /// Every tuple with all `jᵢ ≤ jmax` that passes the selection rules, in
    /// lexicographic order of twice-values.
    pub fn enumerate(jmax: HalfInt) -> Vec<ThreeJArgs> {
        let top = jmax.twice();
        let mut out = Vec::new();
        for t1 in 0..=top {
            for t2 in 0..=top {
                for t3 in 0..=top {
                    let (j1, j2, j3) = (HalfInt::from_twice(t1), HalfInt::from_twice(t2), HalfInt::from_twice(t3));
                    if !triangle_ok(j1, j2, j3) {
                        continue;
                    }
                    for m1 in j1.projections() {
                        for m2 in j2.projections() {
                            let m3 = -(m1 + m2);
                            if m3.abs() <= j3 {
                                out.push(ThreeJArgs::new([j1, j2, j3], [m1, m2, m3]));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl CgArgs {
    pub fn new(a: HalfInt, alpha: HalfInt, b: HalfInt, beta: HalfInt, c: HalfInt, gamma: HalfInt) -> Self {
        CgArgs { a, alpha, b, beta, c, gamma }
    }

    /// The 3j arguments `(a b c; α β −γ)`.
    pub fn to_threej(&self) -> ThreeJArgs {
        ThreeJArgs::new([self.a, self.b, self.c], [self.alpha, self.beta, -self.gamma])
    }
}

/// The unit-argument ₃F₂ representation of a 3j symbol:
/// `value = sign · factor · norm · ₃F₂[series; 1]`.
#[derive(Clone, Debug)]
pub struct ThreeJSeries {
    pub sign: i8,
    pub factor: Rational,
    pub norm: SqrtRational,
    pub series: HypSeries,
}

impl ThreeJSeries {
    pub fn assemble(&self, sum: &Rational) -> SqrtRational {
        let scale = &self.factor * sum * Rational::from_int(i64::from(self.sign));
        self.norm.scale(&scale)
    }
}

fn h(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

/// ₃F₂ decomposition of a 3j symbol whose arguments already pass validation
/// and the selection rules:
///
/// ```text
/// (−1)^{j₁−j₂−m₃} (2j₁)!(j₁+j₂+m₃)!(j₃−m₃)! / ((j₁−j₂+j₃)!(j₁+j₂−j₃)!) · Δ/δ
///   · ₃F₂[m₁−j₁, j₃−j₁−j₂, −j₁−j₂−j₃−1; −2j₁, −j₁−j₂−m₃; 1]
/// ```
pub fn threej_series(args: &ThreeJArgs) -> Result<ThreeJSeries> {
    let ThreeJArgs { j1, j2, j3, m1, m2, m3 } = *args;
    let sign = phase((j1 - j2 - m3).twice());
    let factor = fact_half(j1 + j1)? * fact_half(j1 + j2 + m3)? * fact_half(j3 - m3)?
        / (fact_half(j1 - j2 + j3)? * fact_half(j1 + j2 - j3)?);
    let delta = triangle_delta(j1, j2, j3)?;
    let small_delta = proj_norm(&[(j1, m1), (j2, m2), (j3, m3)])?;
    let norm = delta.mul(&small_delta.recip()?);
    let series = HypSeries::new(
        vec![(m1 - j1).to_rational(), (j3 - j1 - j2).to_rational(), (-(j1 + j2 + j3) - h(2)).to_rational()],
        vec![(-(j1 + j1)).to_rational(), (-(j1 + j2 + m3)).to_rational()],
    );
    Ok(ThreeJSeries { sign, factor, norm, series })
}

/// Wigner 3j symbol through its terminating ₃F₂ representation.
pub fn threej(args: &ThreeJArgs) -> Result<SqrtRational> {
    args.validate()?;
    if !args.selection_ok() {
        return Ok(SqrtRational::zero());
    }
    let decomposition = threej_series(args)?;
    let sum = pfq_exact(&decomposition.series, &Rational::one())?;
    Ok(decomposition.assemble(&sum))
}

/// Wigner 3j symbol through Racah's single sum; an independent oracle.
pub fn threej_racah(args: &ThreeJArgs) -> Result<SqrtRational> {
    args.validate()?;
    if !args.selection_ok() {
        return Ok(SqrtRational::zero());
    }
    let ThreeJArgs { j1, j2, j3, m1, m2, m3 } = *args;
    let int = |x: HalfInt| x.to_int().expect("integer-valued combination");
    // the six factorial arguments are affine in t
    let shifts = [int(j3 - j2 + m1), int(j3 - j1 - m2), int(j1 + j2 - j3), int(j1 - m1), int(j2 + m2)];
    let t_min = 0.max(-shifts[0]).max(-shifts[1]);
    let t_max = shifts[2].min(shifts[3]).min(shifts[4]);
    let mut sum = Rational::zero();
    for t in t_min..=t_max {
        let f = |n: i64| crate::exact::factorial(n);
        let den =
            f(t)? * f(shifts[0] + t)? * f(shifts[1] + t)? * f(shifts[2] - t)? * f(shifts[3] - t)? * f(shifts[4] - t)?;
        let term = den.recip()?;
        sum += if t % 2 == 0 { term } else { -term };
    }
    let sign = phase((j1 - j2 - m3).twice());
    let norm = triangle_delta(j1, j2, j3)?.mul(&proj_norm(&[(j1, m1), (j2, m2), (j3, m3)])?);
    Ok(norm.scale(&(sum * Rational::from_int(i64::from(sign)))))
}

/// `C^{cγ}_{aα,bβ} = (−1)^{a−b+γ} √(2c+1) · (a b c; α β −γ)`.
pub fn clebsch(args: &CgArgs) -> Result<SqrtRational> {
    let tj = threej(&args.to_threej())?;
    if tj.is_zero() {
        return Ok(tj);
    }
    let sign = phase((args.a - args.b + args.gamma).twice());
    let dim = SqrtRational::sqrt(Rational::from_int(args.c.twice() + 1))?;
    Ok(tj.mul(&dim).scale(&Rational::from_int(i64::from(sign))))
}

/// The 3j symbol recomputed after applying the first Weber–Erdélyi
/// transformation to its ₃F₂, taking `−n = m₁ − j₁` and the first assignment
/// of the remaining parameters that stays pole-free.
pub fn threej_weber_erdelyi(args: &ThreeJArgs) -> Result<SqrtRational> {
    args.validate()?;
    if !args.selection_ok() {
        return Ok(SqrtRational::zero());
    }
    let decomposition = threej_series(args)?;
    let num = decomposition.series.num();
    let den = decomposition.series.den();
    let n = num[0].as_nonpositive_integer().expect("m₁ − j₁ is a nonpositive integer");
    let tops = [(&num[1], &num[2]), (&num[2], &num[1])];
    let bottoms = [(&den[0], &den[1]), (&den[1], &den[0])];
    let mut last_err = None;
    for (alpha, beta) in tops {
        for (gamma, delta) in bottoms {
            let attempt = weber_erdelyi_first(n, alpha, beta, gamma, delta)
                .and_then(|(pre, t)| Ok(pre * pfq_exact(&t, &Rational::one())?));
            match attempt {
                Ok(sum) => return Ok(decomposition.assemble(&sum)),
                Err(e) => last_err = Some(e),
            }
        }
    }
    Err(last_err.unwrap_or_else(|| Error::Pole("no pole-free parameter assignment".into())))
}
