//! Suites over 3j symbols, Clebsch–Gordan coefficients and ₃F₂ transforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::angular::{
    cg_from_hahn_first, cg_from_hahn_second_with, clebsch, hahn_first_labels, hahn_second_labels,
    rajeswari_first_params, rajeswari_first_rhs, rajeswari_second_params, rajeswari_second_rhs, threej, threej_racah,
    threej_weber_erdelyi, KoornwinderReading, ThreeJArgs,
};
use crate::exact::{HalfInt, Rational, SqrtRational};
use crate::harness::{Failure, Outcome, Scale};
use crate::hypergeom::{pfq_exact, weber_erdelyi_first, weber_erdelyi_second, HypSeries};
use crate::{Error, Result};

fn show(args: &ThreeJArgs) -> String {
    format!("({} {} {}; {} {} {})", args.j1, args.j2, args.j3, args.m1, args.m2, args.m3)
}

fn sqrt_case(inputs: impl FnOnce() -> String, lhs: Result<SqrtRational>, rhs: Result<SqrtRational>) -> Option<Failure> {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l == r => None,
        (Ok(l), Ok(r)) => {
            let delta = (l.to_f64() - r.to_f64()).abs();
            Some(Failure::new(inputs(), l, r, format!("{delta:.3e}")))
        }
        (Err(e), _) | (_, Err(e)) => Some(Failure::error(inputs(), e)),
    }
}

fn koornwinder_grid(n_max: u64) -> Vec<[u64; 5]> {
    let mut grid = Vec::new();
    for big_n in 0..=n_max {
        for a in 0..=3 {
            for b in 0..=3 {
                for n in 0..=big_n {
                    for x in 0..=big_n {
                        grid.push([n, x, a, b, big_n]);
                    }
                }
            }
        }
    }
    grid
}

fn koornwinder_inputs(p: &[u64; 5]) -> String {
    format!("n={}, x={}, α={}, β={}, N={}", p[0], p[1], p[2], p[3], p[4])
}

pub(crate) fn threej_cg(scale: Scale, _seed: u64) -> Outcome {
    let jmax = HalfInt::from_twice(scale.pick(4, 9, 12));
    let n_max = scale.pick(3, 6, 8);

    let tuples = ThreeJArgs::enumerate(jmax);
    let mut out = Outcome::sweep(&tuples, |args| {
        sqrt_case(|| format!("3j vs Racah {}", show(args)), threej(args), threej_racah(args))
    });
    out.notes.push(format!("3j vs Racah: {} tuples with j ≤ {jmax}", tuples.len()));

    let grid = koornwinder_grid(n_max);
    out.absorb(Outcome::sweep(&grid, |p| {
        let [n, x, a, b, nn] = *p;
        sqrt_case(
            || format!("first Hahn form {}", koornwinder_inputs(p)),
            cg_from_hahn_first(n, x, a, b, nn),
            clebsch(&hahn_first_labels(n, x, a, b, nn)),
        )
    }));

    let second = |reading: KoornwinderReading| {
        Outcome::sweep(&grid, move |p| {
            let [n, x, a, b, nn] = *p;
            sqrt_case(
                || format!("second Hahn form ({reading:?}) {}", koornwinder_inputs(p)),
                cg_from_hahn_second_with(n, x, a, b, nn, reading),
                clebsch(&hahn_second_labels(n, x, a, b, nn)),
            )
        })
    };
    let factorial = second(KoornwinderReading::Factorial);
    let bare = second(KoornwinderReading::Bare);
    let agree = |o: &Outcome| o.cases - o.failures.len() as u64;
    out.notes.push(format!(
        "second Hahn form: factorial reading (2N−n+α+β+1)! agrees in {}/{} cases; bare reading agrees in {}/{}",
        agree(&factorial),
        factorial.cases,
        agree(&bare),
        bare.cases
    ));
    let chosen = if factorial.failures.is_empty() || !bare.failures.is_empty() {
        out.notes.push("second Hahn form resolved to the factorial reading".into());
        factorial
    } else {
        out.notes.push("second Hahn form resolved to the bare reading".into());
        bare
    };
    out.absorb(chosen);
    out.notes.push(format!("Hahn-form grid: 0 ≤ n, x ≤ N ≤ {n_max}, 0 ≤ α, β ≤ 3 ({} points per form)", grid.len()));
    out
}

pub(crate) fn orthogonality(scale: Scale, _seed: u64) -> Outcome {
    let top = scale.pick(4, 8, 12);
    let mut grid = Vec::new();
    for t1 in 0..=top {
        for t2 in 0..=top {
            for t3 in 0..=top {
                let (j1, j2, j3) = (HalfInt::from_twice(t1), HalfInt::from_twice(t2), HalfInt::from_twice(t3));
                if crate::exact::triangle_ok(j1, j2, j3) {
                    grid.extend(j3.projections().map(|m3| (j1, j2, j3, m3)));
                }
            }
        }
    }
    Outcome::sweep(&grid, |&(j1, j2, j3, m3)| {
        let inputs = || format!("j1={j1}, j2={j2}, j3={j3}, m3={m3}");
        let mut sum = Rational::zero();
        for m1 in j1.projections() {
            let m2 = -(m1 + m3);
            if m2.abs() > j2 {
                continue;
            }
            match threej(&ThreeJArgs::new([j1, j2, j3], [m1, m2, m3])) {
                Ok(v) => sum += v.signed_square().abs(),
                Err(e) => return Some(Failure::error(inputs(), e)),
            }
        }
        let total = sum * Rational::from_int(j3.twice() + 1);
        (!total.is_one()).then(|| {
            let delta = (&total - Rational::one()).abs();
            Failure::new(inputs(), total, 1, delta)
        })
    })
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.random_range(-9..=9);
    let den = [1, 2, 3][rng.random_range(0..3)];
    Rational::frac(num, den)
}

type Transform = fn(u64, &Rational, &Rational, &Rational, &Rational) -> Result<(Rational, HypSeries)>;

fn transformed(t: Transform, n: u64, p: &[Rational; 4]) -> Result<Rational> {
    let (pre, series) = t(n, &p[0], &p[1], &p[2], &p[3])?;
    Ok(pre * pfq_exact(&series, &Rational::one())?)
}

pub(crate) fn weber_erdelyi(scale: Scale, seed: u64) -> Outcome {
    let wanted = scale.pick(50, 200, 1000);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets = Vec::with_capacity(wanted);
    let mut rejected = 0u64;
    while sets.len() < wanted {
        let n = rng.random_range(0..=10u64);
        let p = [(); 4].map(|_| random_rational(&mut rng));
        let original = HypSeries::new(
            vec![Rational::from_int(-(n as i64)), p[0].clone(), p[1].clone()],
            vec![p[2].clone(), p[3].clone()],
        );
        let pole_free = pfq_exact(&original, &Rational::one()).is_ok()
            && transformed(weber_erdelyi_first, n, &p).is_ok()
            && transformed(weber_erdelyi_second, n, &p).is_ok();
        if pole_free {
            sets.push((n, p, original));
        } else {
            rejected += 1;
        }
    }
    let transforms: [(&str, Transform); 2] = [("first", weber_erdelyi_first), ("second", weber_erdelyi_second)];
    let mut out = Outcome::default();
    for (name, t) in transforms {
        out.absorb(Outcome::sweep(&sets, |(n, p, original)| {
            let inputs = || format!("{name} transform: n={n}, α={}, β={}, γ={}, δ={}", p[0], p[1], p[2], p[3]);
            let lhs = pfq_exact(original, &Rational::one());
            match (lhs, transformed(t, *n, p)) {
                (Ok(l), Ok(r)) if l == r => None,
                (Ok(l), Ok(r)) => {
                    let delta = (&l - &r).abs();
                    Some(Failure::new(inputs(), l, r, delta))
                }
                (Err(e), _) | (_, Err(e)) => Some(Failure::error(inputs(), e)),
            }
        }));
    }
    out.notes.push(format!(
        "{} random parameter sets (numerators in [−9, 9], denominators in {{1, 2, 3}}, ChaCha8 seed {seed}); {rejected} pole configurations rejected",
        sets.len()
    ));

    let jmax = HalfInt::from_twice(scale.pick(4, 6, 8));
    let tuples = ThreeJArgs::enumerate(jmax);
    out.absorb(Outcome::sweep(&tuples, |args| {
        sqrt_case(|| format!("3j ₃F₂ transformed {}", show(args)), threej_weber_erdelyi(args), threej(args))
    }));
    out.notes.push(format!("first transform applied inside the 3j ₃F₂ for {} tuples with j ≤ {jmax}", tuples.len()));
    out
}

pub(crate) fn rajeswari(scale: Scale, _seed: u64) -> Outcome {
    let jmax = HalfInt::from_twice(scale.pick(4, 6, 8));
    let tuples = ThreeJArgs::enumerate(jmax);

    let skipped = std::sync::atomic::AtomicU64::new(0);
    let mut out = Outcome::sweep(&tuples, |args| {
        let inputs = || format!("first substitution {}", show(args));
        let params = match rajeswari_first_params(args) {
            Ok(p) => p,
            Err(e) => return Some(Failure::error(inputs(), e)),
        };
        let lhs = match params.lhs() {
            Ok(v) => v,
            Err(Error::Pole(_)) => {
                skipped.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                return None;
            }
            Err(e) => return Some(Failure::error(inputs(), e)),
        };
        sqrt_case(inputs, Ok(SqrtRational::from_rational(&lhs)), rajeswari_first_rhs(args))
    });
    let skipped = skipped.into_inner();
    out.cases -= skipped;
    out.notes.push(format!(
        "first substitution: {} tuples compared, {skipped} skipped because the Khan ₃F₂ has a pole (1+α ≤ 0 before termination)",
        out.cases
    ));

    out.absorb(Outcome::sweep(&tuples, |args| {
        let inputs = || format!("second substitution {}", show(args));
        let lhs = rajeswari_second_params(args).and_then(|p| p.lhs());
        sqrt_case(inputs, lhs.map(|v| SqrtRational::from_rational(&v)), rajeswari_second_rhs(args))
    }));
    out.notes.push(format!("second substitution: {} tuples with j ≤ {jmax}", tuples.len()));
    out
}
