//! Suites over characters and Wigner d-functions (float regime).

use std::f64::consts::PI;

use crate::angular::{
    character as chi, character_closed, character_ratio, character_series, gen_character as gen_chi,
    gen_character_celine_series, gen_character_jacobi, gen_character_series, wigner_d as d_jacobi, wigner_d_sum,
    wigner_d_with, DNormReading,
};
use crate::exact::HalfInt;
use crate::harness::{float_close, Failure, Outcome, Scale, FLOAT_TOL, RATIO_SPREAD_TOL, UNITARITY_TOL};
use crate::Result;

const THETAS: [(&str, f64); 6] =
    [("0", 0.0), ("π/7", PI / 7.0), ("π/3", PI / 3.0), ("π/2", PI / 2.0), ("2π/3", 2.0 * PI / 3.0), ("π", PI)];

fn matrix(j: HalfInt, theta: f64, reading: DNormReading) -> Result<Vec<Vec<f64>>> {
    j.projections().map(|m| j.projections().map(|k| wigner_d_with(j, m, k, theta, reading)).collect()).collect()
}

fn max_unitarity_residual(d: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0f64;
    for (a, row_a) in d.iter().enumerate() {
        for (b, row_b) in d.iter().enumerate() {
            let dot: f64 = row_a.iter().zip(row_b).map(|(x, y)| x * y).sum();
            let target = if a == b { 1.0 } else { 0.0 };
            worst = worst.max((dot - target).abs());
        }
    }
    worst
}

pub(crate) fn wigner_d(scale: Scale, _seed: u64) -> Outcome {
    let top = scale.pick(5, 15, 24);
    let mut grid = Vec::new();
    for tj in 0..=top {
        let j = HalfInt::from_twice(tj);
        for m in j.projections() {
            for k in j.projections() {
                for (name, theta) in THETAS {
                    grid.push((j, m, k, name, theta));
                }
            }
        }
    }
    let mut out = Outcome::sweep(&grid, |&(j, m, k, name, theta)| {
        let inputs = || format!("j={j}, m={m}, k={k}, θ={name}");
        match (d_jacobi(j, m, k, theta), wigner_d_sum(j, m, k, theta)) {
            (Ok(a), Ok(b)) => {
                let (ok, delta) = float_close(a, b, FLOAT_TOL);
                (!ok).then(|| Failure::new(inputs(), a, b, delta))
            }
            (Err(e), _) | (_, Err(e)) => Some(Failure::error(inputs(), e)),
        }
    });
    let worst_oracle = grid
        .iter()
        .filter_map(|&(j, m, k, _, theta)| {
            Some((d_jacobi(j, m, k, theta).ok()? - wigner_d_sum(j, m, k, theta).ok()?).abs())
        })
        .fold(0.0f64, f64::max);

    let blocks: Vec<(HalfInt, &str, f64)> = (0..=top)
        .flat_map(|tj| THETAS.iter().map(move |&(name, theta)| (HalfInt::from_twice(tj), name, theta)))
        .collect();
    let unitarity = Outcome::sweep(&blocks, |&(j, name, theta)| {
        let inputs = || format!("unitarity j={j}, θ={name}");
        match matrix(j, theta, DNormReading::SumOfIndices) {
            Ok(d) => {
                let worst = max_unitarity_residual(&d);
                (worst > UNITARITY_TOL).then(|| Failure::new(inputs(), worst, 0, worst))
            }
            Err(e) => Some(Failure::error(inputs(), e)),
        }
    });
    let worst_unitary = blocks
        .iter()
        .filter_map(|&(j, _, theta)| matrix(j, theta, DNormReading::SumOfIndices).ok())
        .map(|d| max_unitarity_residual(&d))
        .fold(0.0f64, f64::max);
    let mutated = blocks
        .iter()
        .filter_map(|&(j, _, theta)| matrix(j, theta, DNormReading::ProductOfIndices).ok())
        .map(|d| max_unitarity_residual(&d))
        .fold(0.0f64, f64::max);
    out.absorb(unitarity);
    out.notes.push(format!("max |d − explicit sum| = {worst_oracle:.3e}"));
    out.notes.push(format!("max unitarity residual = {worst_unitary:.3e}"));
    out.notes
        .push(format!("normalization read as (s+μ+ν)!; the (s+μν)! reading gives unitarity residual {mutated:.3e}"));
    out
}

/// Angles for the character ratio: ω = 0 plus the first eleven points of a
/// fixed sequence that stay clear of the zeros of the closed form.
fn omega_grid(j: HalfInt) -> Vec<f64> {
    let mut omegas = vec![0.0];
    let mut i = 0;
    while omegas.len() < 12 {
        let w = 0.13 + 0.47 * f64::from(i);
        i += 1;
        if character_closed(j, w).is_ok_and(|c| c.abs() > 0.05) {
            omegas.push(w);
        }
    }
    omegas
}

pub(crate) fn character(scale: Scale, _seed: u64) -> Outcome {
    let top = scale.pick(4, 8, 16);
    let js: Vec<HalfInt> = (0..=top).map(HalfInt::from_twice).collect();
    let mut notes = Vec::new();
    let mut out = Outcome::default();
    for &j in &js {
        let omegas = omega_grid(j);
        let ratios: Result<Vec<f64>> = omegas.iter().map(|&w| Ok(chi(j, w)? / character_closed(j, w)?)).collect();
        out.cases += 1;
        let ratios = match ratios {
            Ok(r) => r,
            Err(e) => {
                out.failures.push(Failure::error(format!("j={j}"), e));
                continue;
            }
        };
        let max = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        let spread = (max - min) / mean.abs();
        let expected = character_ratio(j).map(|c| c.to_string()).unwrap_or_else(|e| e.to_string());
        notes.push(format!("j={j}: constant {mean:.15e} (exact {expected}), spread {spread:.2e}"));
        if spread > RATIO_SPREAD_TOL {
            out.failures.push(Failure::new(
                format!("j={j}, ω ∈ {omegas:?}"),
                format!("ratio range [{min:e}, {max:e}]"),
                format!("spread ≤ {RATIO_SPREAD_TOL:e}"),
                spread,
            ));
        }
    }
    out.notes.push(
        "character/closed form; closed form = Σ_m cos(mω); constant = (4j−2)!!/(2^{2j+1}(2j+1)!) for j > 0".into(),
    );
    out.notes.extend(notes);
    out
}

const GEN_OMEGAS: [(&str, f64); 6] =
    [("0.3", 0.3), ("π/3", PI / 3.0), ("π/2", PI / 2.0), ("2π/3", 2.0 * PI / 3.0), ("2.5", 2.5), ("π", PI)];

pub(crate) fn gen_character(scale: Scale, _seed: u64) -> Outcome {
    let top = scale.pick(4, 6, 12);
    let mut pairs = Vec::new();
    for tj in 0..=top {
        for l in 0..=tj {
            pairs.push((HalfInt::from_twice(tj), HalfInt::from_int(l)));
        }
    }
    let points: Vec<_> =
        pairs.iter().flat_map(|&(j, l)| GEN_OMEGAS.iter().map(move |&(name, w)| (j, l, name, w))).collect();

    // the two hypergeometric forms of χ_λ^j
    let mut out = Outcome::sweep(&points, |&(j, l, name, w)| {
        let inputs = || format!("forms j={j}, λ={l}, ω={name}");
        match (gen_chi(j, l, w), gen_character_jacobi(j, l, w)) {
            (Ok(a), Ok(b)) => {
                let (ok, delta) = float_close(a, b, FLOAT_TOL);
                (!ok).then(|| Failure::new(inputs(), a, b, delta))
            }
            (Err(e), _) | (_, Err(e)) => Some(Failure::error(inputs(), e)),
        }
    });

    // ₂F₁ and Sister Celine forms have identical coefficients for every λ;
    // at λ = 0 both reduce exactly to the character series
    out.absorb(Outcome::sweep(&pairs, |&(j, l)| {
        let inputs = || format!("series j={j}, λ={l}");
        let gen = gen_character_series(j, l).and_then(|s| s.coefficients());
        let celine = gen_character_celine_series(j, l).and_then(|s| s.coefficients());
        let (gen, celine) = match (gen, celine) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return Some(Failure::error(inputs(), e)),
        };
        if gen != celine {
            return Some(Failure::new(inputs(), format!("{gen:?}"), format!("{celine:?}"), "coefficients differ"));
        }
        if l.twice() == 0 {
            let base = match character_series(j).and_then(|s| s.coefficients()) {
                Ok(c) => c,
                Err(e) => return Some(Failure::error(inputs(), e)),
            };
            if base != gen {
                return Some(Failure::new(inputs(), format!("{gen:?}"), format!("{base:?}"), "λ = 0 series differ"));
            }
        }
        None
    }));

    // order zero against the closed-form character
    let zero: Vec<_> = points.iter().filter(|p| p.1.twice() == 0).copied().collect();
    out.absorb(Outcome::sweep(&zero, |&(j, _, name, w)| {
        let inputs = || format!("λ=0 j={j}, ω={name}");
        match (gen_chi(j, HalfInt::ZERO, w), character_closed(j, w)) {
            (Ok(a), Ok(b)) => {
                let (ok, delta) = float_close(a, b, FLOAT_TOL);
                (!ok).then(|| Failure::new(inputs(), a, b, delta))
            }
            (Err(e), _) | (_, Err(e)) => Some(Failure::error(inputs(), e)),
        }
    }));
    out.notes.push(
        "λ = 0 compared with the closed-form character Σ_m cos(mω); the hypergeometric character formula differs from it by the constant factor reported by I10_character"
            .into(),
    );
    out
}
