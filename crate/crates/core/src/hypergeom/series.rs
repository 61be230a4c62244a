use serde::{Deserialize, Serialize};

use crate::exact::Rational;
use crate::{Error, Result};

/// `pFq[a₁…a_p; b₁…b_q; ·]` as a pair of parameter lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypSeries {
    num: Vec<Rational>,
    den: Vec<Rational>,
}

/// Smallest `|a|` over the nonpositive-integer numerator parameters.
pub fn termination_index(num: &[Rational]) -> Result<u64> {
    num.iter().filter_map(Rational::as_nonpositive_integer).min().ok_or_else(|| {
        let shown: Vec<String> = num.iter().map(ToString::to_string).collect();
        Error::NonTerminating(format!("no nonpositive-integer numerator in [{}]", shown.join(", ")))
    })
}

impl HypSeries {
    pub fn new(num: Vec<Rational>, den: Vec<Rational>) -> Self {
        HypSeries { num, den }
    }

    pub fn num(&self) -> &[Rational] {
        &self.num
    }

    pub fn den(&self) -> &[Rational] {
        &self.den
    }

    pub fn termination_index(&self) -> Result<u64> {
        termination_index(&self.num)
    }

    /// The series with identical top/bottom parameters removed pairwise.
    pub fn cancelled(&self) -> HypSeries {
        let mut num = self.num.clone();
        let mut den = Vec::with_capacity(self.den.len());
        for b in &self.den {
            match num.iter().position(|a| a == b) {
                Some(i) => {
                    num.swap_remove(i);
                }
                None => den.push(b.clone()),
            }
        }
        HypSeries { num, den }
    }

    /// Coefficients `c_k = Π(aᵢ)_k / (Π(bⱼ)_k k!)` for `k = 0..=n`.
    ///
    /// `n` is read off the parameters as given; cancellation is applied
    /// afterwards and only removes factors that are identically one.
    pub fn coefficients(&self) -> Result<Vec<Rational>> {
        let n = self.termination_index()?;
        let reduced = self.cancelled();
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut c = Rational::one();
        coeffs.push(c.clone());
        for k in 0..n {
            let k_i = k as i64;
            let mut top = Rational::one();
            for a in &reduced.num {
                top *= a + k_i;
            }
            let mut bottom = Rational::from_int(k_i + 1);
            for b in &reduced.den {
                let f = b + k_i;
                if f.is_zero() {
                    return Err(Error::Pole(format!("denominator parameter {b} vanishes at term {} of {n}", k + 1)));
                }
                bottom *= f;
            }
            c = c * top / bottom;
            coeffs.push(c.clone());
        }
        Ok(coeffs)
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        Ok(horner(&self.coefficients()?, x))
    }

    pub fn eval_real(&self, x: f64) -> Result<f64> {
        let coeffs = self.coefficients()?;
        real_horner(&coeffs, x)
    }
}

pub(crate) fn horner(coeffs: &[Rational], x: &Rational) -> Rational {
    if x.is_zero() {
        return coeffs.first().cloned().unwrap_or_else(Rational::zero);
    }
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Evaluates an exact polynomial at a float point. The float is converted to
/// its exact dyadic value, the polynomial is evaluated exactly and rounded
/// once, so the only error is the final rounding.
pub(crate) fn real_horner(coeffs: &[Rational], x: f64) -> Result<f64> {
    let xr = Rational::from_f64(x)?;
    Ok(horner(coeffs, &xr).to_f64())
}

pub fn pfq_exact(series: &HypSeries, x: &Rational) -> Result<Rational> {
    series.eval(x)
}

pub fn pfq_real(series: &HypSeries, x: f64) -> Result<f64> {
    series.eval_real(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{factorial, pochhammer};
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| Rational::from_int(n)).collect()
    }

    /// Term-by-term sum from scratch, no recurrence, no cancellation.
    fn direct_sum(num: &[Rational], den: &[Rational], x: &Rational, n: u64) -> Rational {
        (0..=n)
            .map(|k| {
                let top: Rational = num.iter().map(|a| pochhammer(a, k)).product();
                let bottom: Rational = den.iter().map(|b| pochhammer(b, k)).product();
                top / bottom / factorial(k as i64).unwrap() * x.pow(k as u32)
            })
            .sum()
    }

    #[test]
    fn termination_examples() {
        assert_eq!(termination_index(&[r(-3, 1), r(5, 2)]).unwrap(), 3);
        assert_eq!(termination_index(&[r(-7, 1), r(-2, 1), r(1, 2)]).unwrap(), 2);
        assert!(matches!(termination_index(&[r(1, 2), r(3, 1)]), Err(Error::NonTerminating(_))));
        assert_eq!(termination_index(&[r(0, 1), r(-4, 1)]).unwrap(), 0);
    }

    #[test]
    fn exact_examples() {
        let s = HypSeries::new(ints(&[-2, 1]), ints(&[1]));
        assert_eq!(pfq_exact(&s, &Rational::zero()).unwrap(), Rational::one());

        let s = HypSeries::new(ints(&[-1, 3]), ints(&[2]));
        assert_eq!(pfq_exact(&s, &r(1, 2)).unwrap(), r(1, 4));

        // 1 + (−2)(2)/(1/2) + (−2)(−1)(2)(3)/((1/2)(3/2)·2) = 1 − 8 + 8
        let num = ints(&[-2, 2]);
        let den = vec![r(1, 2)];
        let s = HypSeries::new(num.clone(), den.clone());
        assert_eq!(pfq_exact(&s, &Rational::one()).unwrap(), Rational::one());
        assert_eq!(pfq_exact(&s, &Rational::one()).unwrap(), direct_sum(&num, &den, &Rational::one(), 2));
    }

    #[test]
    fn pole_inside_range() {
        let s = HypSeries::new(ints(&[-3, 1]), ints(&[-1]));
        assert!(matches!(pfq_exact(&s, &Rational::one()), Err(Error::Pole(_))));
        // the numerator terminates before the denominator zero
        let s = HypSeries::new(ints(&[-1, 1]), ints(&[-2]));
        assert_eq!(pfq_exact(&s, &Rational::one()).unwrap(), r(3, 2));
    }

    #[test]
    fn cancelled_pair_keeps_original_range() {
        // (−2)_k/(−2)_k ≡ 1 on k ≤ 2: the value is the truncated exponential
        let s = HypSeries::new(ints(&[-2]), ints(&[-2]));
        assert_eq!(pfq_exact(&s, &Rational::one()).unwrap(), r(5, 2));
    }

    #[test]
    fn real_examples() {
        let s = HypSeries::new(ints(&[-4, 7]), vec![r(3, 2)]);
        assert_eq!(pfq_real(&s, 0.0).unwrap(), 1.0);

        let s = HypSeries::new(ints(&[-1, 3]), ints(&[2]));
        assert_eq!(pfq_real(&s, 0.5).unwrap(), 0.25);

        let s = HypSeries::new(ints(&[-2, 2]), vec![r(3, 2)]);
        let exact = pfq_exact(&s, &Rational::one()).unwrap().to_f64();
        let real = pfq_real(&s, 1.0).unwrap();
        assert!((real - exact).abs() <= 1e-14 * exact.abs());
    }

    fn param() -> impl Strategy<Value = Rational> {
        (-9i64..=9, prop::sample::select(vec![1i64, 2, 3])).prop_map(|(n, d)| r(n, d))
    }

    fn terminating_series() -> impl Strategy<Value = (Vec<Rational>, Vec<Rational>)> {
        (0i64..=8, prop::collection::vec(param(), 0..4), prop::collection::vec(param(), 0..4)).prop_map(
            |(n, mut num, den)| {
                num.insert(0, Rational::from_int(-n));
                (num, den)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn matches_direct_sum((num, den) in terminating_series(), x in param()) {
            let s = HypSeries::new(num.clone(), den.clone());
            let n = s.termination_index().unwrap();
            prop_assume!(den.iter().all(|b| (0..n).all(|k| !(b + k as i64).is_zero())));
            prop_assert_eq!(pfq_exact(&s, &x).unwrap(), direct_sum(&num, &den, &x, n));
        }

        #[test]
        fn permutation_invariant((num, den) in terminating_series(), x in param(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let s = HypSeries::new(num.clone(), den.clone());
            let Ok(v) = pfq_exact(&s, &x) else { return Ok(()); };
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let (mut pn, mut pd) = (num, den);
            pn.shuffle(&mut rng);
            pd.shuffle(&mut rng);
            prop_assert_eq!(pfq_exact(&HypSeries::new(pn, pd), &x).unwrap(), v);
        }

        #[test]
        fn cancellation_invariant((num, den) in terminating_series(), extra in param(), x in param()) {
            prop_assume!(extra.as_nonpositive_integer().is_none());
            let plain = HypSeries::new(num.clone(), den.clone());
            let Ok(v) = pfq_exact(&plain, &x) else { return Ok(()); };
            let (mut n2, mut d2) = (num, den);
            n2.push(extra.clone());
            d2.insert(0, extra);
            prop_assert_eq!(pfq_exact(&HypSeries::new(n2, d2), &x).unwrap(), v);
        }

        #[test]
        fn real_tracks_exact(
            (num, den) in terminating_series(),
            x in (-9i64..=9, prop::sample::select(vec![1i64, 2, 4])).prop_map(|(n, d)| r(n, d)),
        ) {
            let s = HypSeries::new(num, den);
            let Ok(exact) = pfq_exact(&s, &x) else { return Ok(()); };
            let real = pfq_real(&s, x.to_f64()).unwrap();
            let e = exact.to_f64();
            prop_assert!((real - e).abs() <= 1e-13 * e.abs().max(f64::MIN_POSITIVE),
                "real {} vs exact {}", real, e);
        }
    }
}
