//! Suites over the polynomial families.

use crate::angular::khan_gamma_integral_lhs;
use crate::exact::{factorial, pochhammer, Rational};
use crate::harness::{float_close, Failure, Outcome, Scale, FLOAT_TOL, RATE_RANGE};
use crate::polyfam::{chebyshev_u, gegenbauer, hahn, jacobi, jacobi_real, jain_j, khan_f, rice_h, shah_f};
use crate::Result;

fn r(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn family_grid(scale: Scale) -> Vec<(u64, Rational, Rational, Rational)> {
    let n_max = scale.pick(4, 12, 20);
    let params = [r(0, 1), r(1, 2), r(1, 1), r(2, 1), r(7, 3)];
    let xs = [r(0, 1), r(1, 1), r(1, 2), r(-1, 3), r(2, 5)];
    let mut grid = Vec::new();
    for n in 1..=n_max {
        for a in &params {
            for b in &params {
                for x in &xs {
                    grid.push((n, a.clone(), b.clone(), x.clone()));
                }
            }
        }
    }
    grid
}

fn label(n: u64, a: &Rational, b: &Rational, x: &Rational) -> String {
    format!("n={n}, α={a}, β={b}, x={x}")
}

/// Compares two exact sides, turning evaluation errors into failures.
fn exact_case(inputs: impl FnOnce() -> String, lhs: Result<Rational>, rhs: Result<Rational>) -> Option<Failure> {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l == r => None,
        (Ok(l), Ok(r)) => {
            let delta = (&l - &r).abs();
            Some(Failure::new(inputs(), l, r, delta))
        }
        (Err(e), _) | (_, Err(e)) => Some(Failure::error(inputs(), e)),
    }
}

/// `n!/(1+α)_n`.
fn inv_norm(n: u64, a: &Rational) -> Rational {
    factorial(n as i64).expect("nonnegative") / pochhammer(&(a + 1), n)
}

pub(crate) fn khan_jacobi(scale: Scale, _seed: u64) -> Outcome {
    Outcome::sweep(&family_grid(scale), |(n, a, b, x)| {
        let half = (Rational::one() - x) / 2;
        let lhs = khan_f(1, &(a + b + 1), &(a * 2 + 1), &[a + r(1, 2)], &[], &half, *n).map(|v| v / inv_norm(*n, a));
        exact_case(|| label(*n, a, b, x), lhs, jacobi(*n, a, b, x))
    })
}

pub(crate) fn jain_jacobi(scale: Scale, _seed: u64) -> Outcome {
    Outcome::sweep(&family_grid(scale), |(n, a, b, x)| {
        let c = a + b + 1;
        let extra = [&c / 2, (a + b) / 2 + 1];
        let lhs = jain_j(&c, 2, &extra, &[a + 1], x, *n);
        let rhs =
            jacobi(*n, a, b, &(Rational::one() - x * 2)).map(|p| pochhammer(&c, *n) / pochhammer(&(a + 1), *n) * p);
        exact_case(|| label(*n, a, b, x), lhs, rhs)
    })
}

pub(crate) fn shah(scale: Scale, _seed: u64) -> Outcome {
    let (xi, p) = (r(3, 2), r(5, 2));
    let one = Rational::one();
    let grid = family_grid(scale);
    let mut out = Outcome::sweep(&grid, |(n, a, b, x)| {
        let top = a + b + (*n as i64 + 1);
        let lhs = shah_f(1, &one, &one, &[top], &[a + 1], x, *n);
        let rhs = jacobi(*n, a, b, &(&one - x * 2)).map(|v| inv_norm(*n, a) * v);
        exact_case(|| format!("Jacobi chain: {}", label(*n, a, b, x)), lhs, rhs)
    });
    out.absorb(Outcome::sweep(&grid, |(n, a, b, x)| {
        let top = a + b + (*n as i64 + 1);
        let lhs = shah_f(1, &one, &one, &[top, xi.clone()], &[a + 1, p.clone()], x, *n);
        let rhs = rice_h(*n, a, b, &xi, &p, x).map(|v| inv_norm(*n, a) * v);
        exact_case(|| format!("Rice chain: {}, ξ={xi}, p={p}", label(*n, a, b, x)), lhs, rhs)
    }));
    out
}

pub(crate) fn chebyshev_gegenbauer(scale: Scale, _seed: u64) -> Outcome {
    let n_max: u64 = scale.pick(8, 15, 30);
    let grid: Vec<(u64, f64)> =
        (0..=n_max).flat_map(|n| (0..=20).map(move |i| (n, -1.0 + f64::from(i) / 10.0))).collect();
    let half = r(1, 2);
    let one = Rational::one();
    let worst = std::sync::Mutex::new(0.0f64);
    let mut out = Outcome::sweep(&grid, |&(n, x)| {
        // 2Γ(n+3/2)/((n+1)!√π) = Γ(n+3/2)/((n+1)!Γ(3/2)) = (3/2)_n/(n+1)!
        let scale = (pochhammer(&r(3, 2), n) / factorial(n as i64 + 1).expect("nonnegative")).to_f64();
        let p = match jacobi_real(n, &half, &half, x) {
            Ok(p) => p,
            Err(e) => return Some(Failure::error(format!("n={n}, x={x}"), e)),
        };
        let u = scale * chebyshev_u(n, x);
        let c = scale * gegenbauer(n, &one, x);
        let (ok_u, du) = float_close(p, u, FLOAT_TOL);
        let (ok_c, dc) = float_close(p, c, FLOAT_TOL);
        {
            let mut w = worst.lock().expect("poisoned");
            *w = w.max(du).max(dc);
        }
        if !ok_u {
            return Some(Failure::new(format!("Chebyshev U: n={n}, x={x}"), p, u, du));
        }
        (!ok_c).then(|| Failure::new(format!("Gegenbauer C^(1): n={n}, x={x}"), p, c, dc))
    });
    out.cases *= 2;
    out.notes.push(format!("max residual {:.3e}", worst.into_inner().expect("poisoned")));
    out
}

pub(crate) fn hahn_limit(scale: Scale, _seed: u64) -> Outcome {
    let n_max: u64 = scale.pick(3, 5, 5);
    let sizes: &[u64] = scale.pick(&[50, 100, 200, 400], &[50, 100, 200, 400], &[400, 800, 1600, 3200]);
    let mut grid = Vec::new();
    for n in 1..=n_max {
        for (a, b) in [(r(0, 1), r(0, 1)), (r(1, 1), r(1, 2))] {
            for x in [r(1, 4), r(1, 2)] {
                grid.push((n, a.clone(), b.clone(), x));
            }
        }
    }
    let (low, high) = RATE_RANGE;
    let mut out = Outcome::sweep(&grid, |(n, a, b, x)| {
        let inputs = || format!("{}, N={sizes:?}", label(*n, a, b, x));
        let limit = match jacobi(*n, a, b, &(Rational::one() - x * 2)) {
            Ok(p) => inv_norm(*n, a) * p,
            Err(e) => return Some(Failure::error(inputs(), e)),
        };
        let mut errors = Vec::with_capacity(sizes.len());
        for &big_n in sizes {
            match hahn(*n, &(x * big_n as i64), a, b, big_n) {
                Ok(q) => errors.push((q - &limit).abs()),
                Err(e) => return Some(Failure::error(inputs(), e)),
            }
        }
        if errors.iter().all(Rational::is_zero) {
            return None;
        }
        let ratios: Vec<f64> =
            errors.windows(2).map(|w| if w[0].is_zero() { f64::INFINITY } else { (&w[1] / &w[0]).to_f64() }).collect();
        let ok = ratios.iter().all(|q| (low..=high).contains(q));
        let shown: Vec<String> = errors.iter().map(|e| format!("{:.4e}", e.to_f64())).collect();
        let ratios_shown: Vec<String> = ratios.iter().map(|q| format!("{q:.4}")).collect();
        (!ok).then(|| {
            Failure::new(
                inputs(),
                format!("errors [{}]", shown.join(", ")),
                format!("ratios within [{low}, {high}]"),
                format!("ratios [{}]", ratios_shown.join(", ")),
            )
        })
    });
    out.notes.push("cases with identically zero error at every N count as passes".into());
    out
}

pub(crate) fn khan_integral(scale: Scale, _seed: u64) -> Outcome {
    let n_max: u64 = scale.pick(5, 10, 20);
    let alphas = [r(0, 1), r(1, 2), r(1, 1), r(5, 2)];
    let xs = [r(0, 1), r(1, 4), r(1, 2), r(1, 1), r(-2, 3)];
    let mut grid = Vec::new();
    for n in 0..=n_max {
        for a in &alphas {
            for x in &xs {
                grid.push((n, a.clone(), x.clone()));
            }
        }
    }
    Outcome::sweep(&grid, |(n, a, x)| {
        let rhs = jacobi(*n, a, a, &(Rational::one() - x * 2)).map(|p| inv_norm(*n, a) * p);
        exact_case(|| format!("n={n}, α={a}, x={x}"), khan_gamma_integral_lhs(*n, a, x), rhs)
    })
}
