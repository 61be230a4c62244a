use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::exact::{HalfInt, Rational, SqrtRational};
use crate::{Error, Result};

fn factorial_table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::from(1)]))
}

/// `n!` as a big integer. Memoized; the cache only ever holds values equal to
/// the direct product.
pub fn factorial_int(n: u64) -> BigInt {
    let n = n as usize;
    {
        let table = factorial_table().read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = factorial_table().write().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(k);
        table.push(next);
    }
    table[n].clone()
}

pub fn factorial(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::domain(format!("factorial of negative integer {n}")));
    }
    Ok(Rational::from_bigint(factorial_int(n as u64)))
}

/// `n!!` with `0!! = (−1)!! = 1`.
pub fn double_factorial(n: i64) -> Result<Rational> {
    if n < -1 {
        return Err(Error::domain(format!("double factorial of {n}")));
    }
    let mut acc = BigInt::from(1);
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(Rational::from_bigint(acc))
}

/// Rising factorial `(a)_k = a(a+1)…(a+k−1)`.
pub fn pochhammer(a: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor = factor + 1;
    }
    acc
}

/// `(−1)^e` for an exponent given as a twice-value. An odd twice-value means a
/// half-odd exponent, which is an internal error.
pub fn phase(twice_exponent: i64) -> i8 {
    assert!(twice_exponent % 2 == 0, "phase exponent {}/2 is not an integer", twice_exponent);
    if (twice_exponent / 2).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Factorial of a half-integer expression that must be a nonnegative integer.
pub(crate) fn fact_half(x: HalfInt) -> Result<Rational> {
    match x.to_int() {
        Some(n) if n >= 0 => factorial(n),
        _ => Err(Error::domain(format!("factorial of non-integer or negative value {x}"))),
    }
}

pub(crate) fn triangle_ok(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> bool {
    let (a, b, c) = (j1.twice(), j2.twice(), j3.twice());
    a >= 0 && b >= 0 && c >= 0 && c <= a + b && a <= b + c && b <= a + c && (a + b + c) % 2 == 0
}

/// Triangle coefficient
/// `+√[(−j₁+j₂+j₃)!(j₁−j₂+j₃)!(j₁+j₂−j₃)! / (j₁+j₂+j₃+1)!]`.
pub fn triangle_delta(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> Result<SqrtRational> {
    if !triangle_ok(j1, j2, j3) {
        return Err(Error::domain(format!("({j1}, {j2}, {j3}) violates the triangle rule")));
    }
    let num = fact_half(-j1 + j2 + j3)? * fact_half(j1 - j2 + j3)? * fact_half(j1 + j2 - j3)?;
    let den = fact_half(j1 + j2 + j3 + HalfInt::from_int(1))?;
    SqrtRational::sqrt(num / den)
}

/// Projection normalization `+√[Π (j−m)!(j+m)!]`.
pub fn proj_norm(pairs: &[(HalfInt, HalfInt)]) -> Result<SqrtRational> {
    let mut acc = Rational::one();
    for &(j, m) in pairs {
        j.check_projection(m)?;
        acc *= fact_half(j - m)? * fact_half(j + m)?;
    }
    SqrtRational::sqrt(acc)
}
