//! Weber–Erdélyi transformations of a terminating, unit-argument ₃F₂
//! `₃F₂[−n, α, β; γ, δ; 1]`. Gamma-ratio prefactors are reduced to
//! Pochhammer ratios, so everything stays rational.

use crate::exact::{pochhammer, Rational};
use crate::hypergeom::HypSeries;
use crate::{Error, Result};

fn nonzero_poch(a: &Rational, n: u64, what: &str) -> Result<Rational> {
    let p = pochhammer(a, n);
    if p.is_zero() {
        return Err(Error::Pole(format!("({what})_{n} = 0 with {what} = {a}")));
    }
    Ok(p)
}

/// `₃F₂[−n, α, β; γ, δ; 1] = (γ−α)_n/(γ)_n · ₃F₂[−n, α, δ−β; 1+α−γ−n, δ; 1]`.
pub fn weber_erdelyi_first(
    n: u64,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
) -> Result<(Rational, HypSeries)> {
    let g = nonzero_poch(gamma, n, "γ")?;
    let prefactor = pochhammer(&(gamma - alpha), n) / g;
    let m = Rational::from_int(-(n as i64));
    let series =
        HypSeries::new(vec![m.clone(), alpha.clone(), delta - beta], vec![alpha - gamma + &m + 1, delta.clone()]);
    Ok((prefactor, series))
}

/// `₃F₂[−n, α, β; γ, δ; 1] = (δ−α)_n(γ−α)_n/((γ)_n(δ)_n) ·
/// ₃F₂[−n, α, 1+α+β−γ−δ−n; 1+α−δ−n, 1+α−γ−n; 1]`.
pub fn weber_erdelyi_second(
    n: u64,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
) -> Result<(Rational, HypSeries)> {
    let g = nonzero_poch(gamma, n, "γ")?;
    let d = nonzero_poch(delta, n, "δ")?;
    let prefactor = pochhammer(&(delta - alpha), n) * pochhammer(&(gamma - alpha), n) / (g * d);
    let m = Rational::from_int(-(n as i64));
    let one_plus_alpha = alpha + 1;
    let series = HypSeries::new(
        vec![m.clone(), alpha.clone(), &one_plus_alpha + beta - gamma - delta + &m],
        vec![&one_plus_alpha - delta + &m, &one_plus_alpha - gamma + &m],
    );
    Ok((prefactor, series))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::pfq_exact;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn original(n: u64, a: &Rational, b: &Rational, g: &Rational, d: &Rational) -> Rational {
        let s = HypSeries::new(vec![Rational::from_int(-(n as i64)), a.clone(), b.clone()], vec![g.clone(), d.clone()]);
        pfq_exact(&s, &Rational::one()).unwrap()
    }

    type Transform = fn(u64, &Rational, &Rational, &Rational, &Rational) -> Result<(Rational, HypSeries)>;

    fn check(f: Transform, n: u64, p: [Rational; 4]) -> Rational {
        let [a, b, g, d] = p;
        let (pre, t) = f(n, &a, &b, &g, &d).unwrap();
        let lhs = original(n, &a, &b, &g, &d);
        assert_eq!(pre * pfq_exact(&t, &Rational::one()).unwrap(), lhs);
        lhs
    }

    #[test]
    fn first_examples() {
        let (pre, _) = weber_erdelyi_first(0, &r(5, 3), &r(1, 2), &r(7, 2), &r(2, 1)).unwrap();
        assert_eq!(pre, Rational::one());
        check(weber_erdelyi_first, 1, [r(1, 1), r(1, 2), r(2, 1), r(3, 1)]);
        check(weber_erdelyi_first, 3, [r(-1, 2), r(2, 1), r(5, 2), r(7, 3)]);
    }

    #[test]
    fn second_examples() {
        let (pre, _) = weber_erdelyi_second(0, &r(5, 3), &r(1, 2), &r(7, 2), &r(2, 1)).unwrap();
        assert_eq!(pre, Rational::one());
        assert_eq!(check(weber_erdelyi_second, 2, [r(1, 1), r(1, 1), r(3, 1), r(4, 1)]), r(17, 20));
        assert_eq!(check(weber_erdelyi_second, 4, [r(3, 2), r(-1, 2), r(2, 1), r(5, 2)]), r(223469, 147840));
    }

    #[test]
    fn gamma_pole_is_reported() {
        let err = weber_erdelyi_first(3, &r(1, 2), &r(1, 1), &r(-1, 1), &r(2, 1)).unwrap_err();
        assert!(matches!(err, Error::Pole(_)));
    }
}
