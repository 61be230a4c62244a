use crate::exact::{factorial, pochhammer, Rational};
use crate::hypergeom::{pfq_exact, HypSeries};
use crate::{Error, Result};

fn jacobi_norm(n: u64, alpha: &Rational) -> Result<Rational> {
    let p = pochhammer(&(alpha + 1), n);
    if p.is_zero() {
        return Err(Error::domain(format!("(1+α)_{n} vanishes for α = {alpha}")));
    }
    Ok(p / factorial(n as i64)?)
}

fn jacobi_series(n: u64, alpha: &Rational, beta: &Rational) -> HypSeries {
    let n_i = n as i64;
    HypSeries::new(vec![Rational::from_int(-n_i), alpha + beta + (n_i + 1)], vec![alpha + 1])
}

/// Coefficients of `P_n^{(α,β)}` as a polynomial in `y = (1−x)/2`.
pub fn jacobi_coefficients(n: u64, alpha: &Rational, beta: &Rational) -> Result<Vec<Rational>> {
    let norm = jacobi_norm(n, alpha)?;
    let coeffs = jacobi_series(n, alpha, beta).coefficients()?;
    Ok(coeffs.into_iter().map(|c| c * &norm).collect())
}

/// `P_n^{(α,β)}(x) = ((1+α)_n/n!) ₂F₁[−n, n+α+β+1; 1+α; (1−x)/2]`.
pub fn jacobi(n: u64, alpha: &Rational, beta: &Rational, x: &Rational) -> Result<Rational> {
    let norm = jacobi_norm(n, alpha)?;
    let y = (Rational::one() - x) / 2;
    Ok(norm * pfq_exact(&jacobi_series(n, alpha, beta), &y)?)
}

/// Float counterpart of [`jacobi`]; the polynomial is evaluated exactly at the
/// binary value of `x` and rounded once.
pub fn jacobi_real(n: u64, alpha: &Rational, beta: &Rational, x: f64) -> Result<f64> {
    let xr = Rational::from_f64(x)?;
    Ok(jacobi(n, alpha, beta, &xr)?.to_f64())
}

/// Hahn polynomial `Q_n(x; α, β, N) = ₃F₂[−n, n+α+β+1, −x; 1+α, −N; 1]`.
///
/// `x` may be any rational; for non-integer `x` the series still terminates
/// through `−n`.
pub fn hahn(n: u64, x: &Rational, alpha: &Rational, beta: &Rational, big_n: u64) -> Result<Rational> {
    if n > big_n {
        return Err(Error::domain(format!("Hahn degree {n} exceeds N = {big_n}")));
    }
    let n_i = n as i64;
    let series = HypSeries::new(
        vec![Rational::from_int(-n_i), alpha + beta + (n_i + 1), -x],
        vec![alpha + 1, Rational::from_int(-(big_n as i64))],
    );
    pfq_exact(&series, &Rational::one())
}

/// Chebyshev polynomial of the second kind by its three-term recurrence.
pub fn chebyshev_u(n: u64, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * x);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Gegenbauer polynomial `C_n^{(α)}(x)` by its three-term recurrence.
pub fn gegenbauer(n: u64, alpha: &Rational, x: f64) -> f64 {
    let a = alpha.to_f64();
    let (mut prev, mut cur) = (1.0, 2.0 * a * x);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 * x * (kf + a) * cur - (kf + 2.0 * a - 1.0) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(0, &r(7, 3), &r(-1, 2), &r(5, 1)).unwrap(), Rational::one());
        assert_eq!(jacobi(2, &r(1, 1), &r(1, 1), &Rational::one()).unwrap(), r(3, 1));
        assert_eq!(jacobi(1, &r(0, 1), &r(0, 1), &r(1, 3)).unwrap(), r(1, 3));
        // Legendre P₂(x) = (3x²−1)/2
        assert_eq!(jacobi(2, &r(0, 1), &r(0, 1), &r(1, 2)).unwrap(), r(-1, 8));
        assert!(jacobi(2, &r(-2, 1), &r(0, 1), &r(1, 2)).is_err());
    }

    #[test]
    fn jacobi_real_examples() {
        assert_eq!(jacobi_real(0, &r(1, 1), &r(2, 1), 0.7).unwrap(), 1.0);
        assert_eq!(jacobi_real(1, &r(0, 1), &r(0, 1), 0.25).unwrap(), 0.25);

        let c = (std::f64::consts::PI / 5.0).cos();
        // 2Γ(3+3/2)/(4!√π) = 2·(1/2)₄/4!
        let scale = 2.0 * pochhammer(&r(1, 2), 4).to_f64() / 24.0;
        let expected = scale * (8.0 * c * c * c - 4.0 * c);
        let got = jacobi_real(3, &r(1, 2), &r(1, 2), c).unwrap();
        assert!((got - expected).abs() <= 1e-12, "{got} vs {expected}");
    }

    #[test]
    fn hahn_examples() {
        assert_eq!(hahn(0, &r(3, 1), &r(1, 2), &r(2, 1), 5).unwrap(), Rational::one());
        assert_eq!(hahn(3, &Rational::zero(), &r(1, 2), &r(2, 1), 5).unwrap(), Rational::one());
        assert_eq!(hahn(1, &Rational::one(), &r(0, 1), &r(0, 1), 3).unwrap(), r(1, 3));
        assert!(hahn(4, &Rational::one(), &r(0, 1), &r(0, 1), 3).is_err());
    }

    #[test]
    fn hahn_pole_before_termination() {
        // 1+α = −1 reaches zero before the series terminates
        let err = hahn(2, &r(2, 1), &r(-2, 1), &r(0, 1), 3).unwrap_err();
        assert!(matches!(err, Error::Pole(_)));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(chebyshev_u(0, 0.3), 1.0);
        assert_eq!(gegenbauer(0, &r(5, 2), 0.3), 1.0);
        assert_eq!(chebyshev_u(1, 0.5), 1.0);
        assert_eq!(gegenbauer(2, &r(1, 1), 0.5), 0.0);
        assert_eq!(chebyshev_u(2, 0.5), 0.0);
        for &x in &[-0.9, -0.2, 0.4, 0.75] {
            for n in 0..10 {
                assert!((gegenbauer(n, &r(1, 1), x) - chebyshev_u(n, x)).abs() < 1e-13);
            }
        }
    }
}
