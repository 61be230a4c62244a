//! The Sister Celine polynomial and its generalizations.

use crate::exact::{factorial, pochhammer, Rational};
use crate::hypergeom::{param_set, pfq_exact, HypSeries};
use crate::{Error, Result};

fn neg(n: u64) -> Rational {
    Rational::from_int(-(n as i64))
}

fn chain(head: Vec<Rational>, tail: &[Rational]) -> Vec<Rational> {
    let mut v = head;
    v.extend_from_slice(tail);
    v
}

/// `_{p+2}F_{q+2}[−n, n+1, a…; 1, 1/2, b…; x]`.
pub fn celine_f(a: &[Rational], b: &[Rational], x: &Rational, n: u64) -> Result<Rational> {
    let num = chain(vec![neg(n), Rational::from_int(n as i64 + 1)], a);
    let den = chain(vec![Rational::one(), Rational::frac(1, 2)], b);
    pfq_exact(&HypSeries::new(num, den), x)
}

/// Jain's family
/// `((c)_n/n!) · F[−n, Δ(k−1, c+n), a…; Δ(k, c), b…; (k−1)^{k−1} x]`.
///
/// At `k = 1` the block `Δ(0, ·)` is empty and `0⁰ = 1`.
pub fn jain_j(c: &Rational, k: u64, a: &[Rational], b: &[Rational], x: &Rational, n: u64) -> Result<Rational> {
    if k == 0 {
        return Err(Error::domain("Jain's family needs k ≥ 1"));
    }
    let k_i = k as i64;
    let mut num = vec![neg(n)];
    if k > 1 {
        num.extend(param_set(k_i - 1, &(c + n as i64))?);
    }
    num.extend_from_slice(a);
    let den = chain(param_set(k_i, c)?.into_vec(), b);
    let scale = Rational::from_int(k_i - 1).pow((k - 1) as u32);
    let norm = pochhammer(c, n) / factorial(n as i64)?;
    Ok(norm * pfq_exact(&HypSeries::new(num, den), &(scale * x))?)
}

/// Shah's family `x^{(m−1)n} · F[Δ(m, −n), a…; b…; λ x^μ]`, integer `μ` only.
pub fn shah_f(
    m: u64,
    lambda: &Rational,
    mu: &Rational,
    a: &[Rational],
    b: &[Rational],
    x: &Rational,
    n: u64,
) -> Result<Rational> {
    if m == 0 {
        return Err(Error::domain("Shah's family needs m ≥ 1"));
    }
    let mu = mu
        .to_i64()
        .filter(|_| mu.is_integer())
        .ok_or_else(|| Error::UnsupportedRegime(format!("x^μ with non-integer μ = {mu} has no exact value")))?;
    let power = |base: &Rational, e: i64| -> Result<Rational> {
        if e >= 0 {
            Ok(base.pow(e as u32))
        } else {
            Ok(base.recip()?.pow(e.unsigned_abs() as u32))
        }
    };
    let arg = lambda * &power(x, mu)?;
    let num = chain(param_set(m as i64, &neg(n))?.into_vec(), a);
    let outer = power(x, ((m - 1) * n) as i64)?;
    Ok(outer * pfq_exact(&HypSeries::new(num, b.to_vec()), &arg)?)
}

/// Khan's family `F[Δ(k, −n), n+λ, a…; Δ(k+1, μ), b…; x]` as a series.
pub fn khan_series(
    k: u64,
    lambda: &Rational,
    mu: &Rational,
    a: &[Rational],
    b: &[Rational],
    n: u64,
) -> Result<HypSeries> {
    if k == 0 {
        return Err(Error::domain("Khan's family needs k ≥ 1"));
    }
    let mut num = param_set(k as i64, &neg(n))?.into_vec();
    num.push(lambda + n as i64);
    num.extend_from_slice(a);
    let den = chain(param_set(k as i64 + 1, mu)?.into_vec(), b);
    Ok(HypSeries::new(num, den))
}

pub fn khan_f(
    k: u64,
    lambda: &Rational,
    mu: &Rational,
    a: &[Rational],
    b: &[Rational],
    x: &Rational,
    n: u64,
) -> Result<Rational> {
    pfq_exact(&khan_series(k, lambda, mu, a, b, n)?, x)
}

/// Generalized Rice polynomial
/// `H_n^{(α,β)}(ξ, p, v) = ((1+α)_n/n!) ₃F₂[−n, n+α+β+1, ξ; 1+α, p; v]`.
pub fn rice_h(
    n: u64,
    alpha: &Rational,
    beta: &Rational,
    xi: &Rational,
    p: &Rational,
    v: &Rational,
) -> Result<Rational> {
    let norm = pochhammer(&(alpha + 1), n);
    if norm.is_zero() {
        return Err(Error::domain(format!("(1+α)_{n} vanishes for α = {alpha}")));
    }
    let series = HypSeries::new(vec![neg(n), alpha + beta + (n as i64 + 1), xi.clone()], vec![alpha + 1, p.clone()]);
    Ok(norm / factorial(n as i64)? * pfq_exact(&series, v)?)
}

/// `((1+α+β)_n/n!) · F[−n, n+α+β+1, a…; 1+α, 1/2, b…; x]`.
pub fn ahmad_a(
    alpha: &Rational,
    beta: &Rational,
    a: &[Rational],
    b: &[Rational],
    x: &Rational,
    n: u64,
) -> Result<Rational> {
    let ab1 = alpha + beta + 1;
    let num = chain(vec![neg(n), &ab1 + n as i64], a);
    let den = chain(vec![alpha + 1, Rational::frac(1, 2)], b);
    let norm = pochhammer(&ab1, n) / factorial(n as i64)?;
    Ok(norm * pfq_exact(&HypSeries::new(num, den), x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyfam::jacobi;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn grid() -> Vec<Rational> {
        vec![r(0, 1), r(1, 4), r(-1, 3), r(2, 5), r(1, 1), r(-3, 2), r(7, 3)]
    }

    #[test]
    fn celine_examples() {
        assert_eq!(celine_f(&[r(3, 2)], &[r(5, 1)], &r(7, 9), 0).unwrap(), Rational::one());
        assert_eq!(celine_f(&[], &[], &r(1, 4), 1).unwrap(), Rational::zero());
        for x in grid() {
            for n in 0..3 {
                assert_eq!(celine_f(&[], &[], &x, n).unwrap(), jain_j(&Rational::one(), 2, &[], &[], &x, n).unwrap());
            }
        }
    }

    #[test]
    fn jain_examples() {
        assert_eq!(jain_j(&r(3, 2), 3, &[], &[], &r(1, 2), 0).unwrap(), Rational::one());
        let (alpha, beta, x, n) = (r(1, 1), r(0, 1), r(1, 3), 2);
        let c = &alpha + &beta + 1;
        let a = [(&alpha + &beta + 1) / 2, (&alpha + &beta) / 2 + 1];
        let lhs = jain_j(&c, 2, &a, &[&alpha + 1], &x, n).unwrap();
        let rhs = pochhammer(&c, n) / pochhammer(&(&alpha + 1), n)
            * jacobi(n, &alpha, &beta, &(Rational::one() - &x * 2)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn jain_k1_passes_argument_through() {
        // k = 1: (c)_n/n! · F[−n, a; c, b; x]
        let (c, x) = (r(5, 2), r(2, 3));
        let lhs = jain_j(&c, 1, &[r(1, 3)], &[], &x, 3).unwrap();
        let s = HypSeries::new(vec![r(-3, 1), r(1, 3)], vec![c.clone()]);
        let rhs = pochhammer(&c, 3) / factorial(3).unwrap() * pfq_exact(&s, &x).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn shah_examples() {
        let one = Rational::one();
        assert_eq!(shah_f(1, &one, &one, &[], &[], &r(3, 7), 0).unwrap(), one);

        let (alpha, beta, n, x) = (r(0, 1), r(1, 1), 2u64, r(1, 2));
        let a = [&alpha + &beta + (n as i64 + 1)];
        let lhs = shah_f(1, &one, &one, &a, &[&alpha + 1], &x, n).unwrap();
        let rhs = factorial(n as i64).unwrap() / pochhammer(&(&alpha + 1), n)
            * jacobi(n, &alpha, &beta, &(&one - &x * 2)).unwrap();
        assert_eq!(lhs, rhs);

        let (alpha, beta, xi, p, x) = (r(0, 1), r(0, 1), r(2, 1), r(3, 1), r(1, 4));
        let a = [&alpha + &beta + (n as i64 + 1), xi.clone()];
        let lhs = shah_f(1, &one, &one, &a, &[&alpha + 1, p.clone()], &x, n).unwrap();
        let rhs = factorial(n as i64).unwrap() / pochhammer(&(&alpha + 1), n)
            * rice_h(n, &alpha, &beta, &xi, &p, &x).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn shah_block_and_regimes() {
        // m = 2, n = 3: Δ(2, −3) = {−3/2, −1}, so two terms survive; x^{(m−1)n} = x³
        let x = r(1, 2);
        let got = shah_f(2, &r(1, 1), &r(2, 1), &[], &[], &x, 3).unwrap();
        // 1 + (−3/2)(−1)·x² = 1 + (3/2)(1/4)
        assert_eq!(got, x.pow(3) * (Rational::one() + r(3, 8)));
        assert!(matches!(shah_f(1, &r(1, 1), &r(1, 2), &[], &[], &x, 2), Err(Error::UnsupportedRegime(_))));
    }

    #[test]
    fn khan_examples() {
        assert_eq!(khan_f(2, &r(3, 1), &r(1, 2), &[], &[], &r(5, 3), 0).unwrap(), Rational::one());

        let (alpha, beta, n, x) = (r(1, 2), r(3, 2), 3u64, r(-1, 3));
        let lam = &alpha + &beta + 1;
        let mu = &alpha * 2 + 1;
        let half = (Rational::one() - &x) / 2;
        let lhs = khan_f(1, &lam, &mu, &[&alpha + r(1, 2)], &[], &half, n).unwrap();
        let rhs = factorial(n as i64).unwrap() / pochhammer(&(&alpha + 1), n) * jacobi(n, &alpha, &beta, &x).unwrap();
        assert_eq!(lhs, rhs);

        let (alpha, beta, xi, p, v, n) = (r(0, 1), r(1, 1), r(3, 2), r(5, 2), r(1, 5), 2u64);
        let lam = &alpha + &beta + 1;
        let mu = &alpha * 2 + 1;
        let lhs = khan_f(1, &lam, &mu, &[&alpha + r(1, 2), xi.clone()], std::slice::from_ref(&p), &v, n).unwrap();
        let rhs = factorial(n as i64).unwrap() / pochhammer(&(&alpha + 1), n)
            * rice_h(n, &alpha, &beta, &xi, &p, &v).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rice_examples() {
        assert_eq!(rice_h(0, &r(1, 1), &r(2, 1), &r(1, 3), &r(4, 1), &r(1, 2)).unwrap(), Rational::one());
        assert_eq!(rice_h(1, &r(0, 1), &r(0, 1), &r(1, 1), &r(2, 1), &r(1, 2)).unwrap(), r(1, 2));
        for (i, v) in grid().into_iter().enumerate() {
            let (alpha, beta, xi) = (r(i as i64, 2), r(1, 3), r(2 * i as i64 + 1, 3));
            for n in 0..4 {
                assert_eq!(
                    rice_h(n, &alpha, &beta, &xi, &xi, &v).unwrap(),
                    jacobi(n, &alpha, &beta, &(Rational::one() - &v * 2)).unwrap()
                );
            }
        }
    }

    #[test]
    fn ahmad_examples() {
        assert_eq!(ahmad_a(&r(1, 1), &r(2, 1), &[], &[], &r(1, 2), 0).unwrap(), Rational::one());
        assert_eq!(ahmad_a(&r(0, 1), &r(0, 1), &[], &[], &r(1, 2), 1).unwrap(), r(-1, 1));
        let zero = Rational::zero();
        for x in grid() {
            for n in 0..4 {
                assert_eq!(
                    ahmad_a(&zero, &zero, &[r(1, 3)], &[r(5, 2)], &x, n).unwrap(),
                    celine_f(&[r(1, 3)], &[r(5, 2)], &x, n).unwrap()
                );
            }
        }
    }
}
