//! Registry and runner for the cross-identity suites.
//!
//! Every suite sweeps a finite parameter grid, evaluates both sides of one
//! identity through independent code paths and records each disagreement with
//! its full inputs. Reports are deterministic in `(suite, scale, seed)` apart
//! from `wall_time_s`.

mod coupling;
mod polys;
mod report;
mod rotation;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use report::{Failure, IdentityReport};

/// Grid size selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    /// A reduced grid for fast CI runs.
    Small,
    /// The grids stated for each identity.
    Default,
    /// Extended grids for stress runs.
    Large,
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scale::Small => "small",
            Scale::Default => "default",
            Scale::Large => "large",
        })
    }
}

impl FromStr for Scale {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Scale::Small),
            "default" => Ok(Scale::Default),
            "large" => Ok(Scale::Large),
            _ => Err(Error::Parse(format!("unknown scale `{s}` (expected small, default or large)"))),
        }
    }
}

impl Scale {
    pub(crate) fn pick<T>(self, small: T, default: T, large: T) -> T {
        match self {
            Scale::Small => small,
            Scale::Default => default,
            Scale::Large => large,
        }
    }
}

/// How a suite decides agreement.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Comparison {
    Exact,
    Float {
        tolerance: f64,
    },
    RatioConstancy {
        tolerance: f64,
    },
    /// Convergence-rate check on a sequence of errors.
    Rate {
        low: f64,
        high: f64,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentitySuite {
    pub id: &'static str,
    pub description: &'static str,
    /// Default-scale grid.
    pub grid: &'static str,
    pub comparison: Comparison,
    #[serde(skip)]
    run: fn(Scale, u64) -> Outcome,
}

/// Absolute tolerance for `|expected| ≤ 1`, relative otherwise.
pub const FLOAT_TOL: f64 = 1e-12;
pub const UNITARITY_TOL: f64 = 1e-11;
pub const RATIO_SPREAD_TOL: f64 = 1e-10;
pub const RATE_RANGE: (f64, f64) = (0.4, 0.62);

/// Result of sweeping one grid, before timing is attached.
#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn absorb(&mut self, other: Outcome) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    /// Runs `check` over `cases` in parallel, keeping failures in grid order.
    pub fn sweep<T: Sync>(cases: &[T], check: impl Fn(&T) -> Option<Failure> + Sync + Send) -> Outcome {
        let failures = cases.par_iter().filter_map(check).collect();
        Outcome { cases: cases.len() as u64, failures, notes: Vec::new() }
    }
}

/// `(passes, delta)` for a float comparison under [`FLOAT_TOL`]-style rules.
pub fn float_close(got: f64, expected: f64, tol: f64) -> (bool, f64) {
    let diff = (got - expected).abs();
    let delta = if expected.abs() <= 1.0 { diff } else { diff / expected.abs() };
    (delta <= tol, delta)
}

pub fn list_suites() -> Vec<IdentitySuite> {
    let float = Comparison::Float { tolerance: FLOAT_TOL };
    vec![
        IdentitySuite {
            id: "I1_khan_jacobi",
            description: "Khan's f_n(1, 1+α+β, 1+2α; α+1/2; −; (1−x)/2)·(1+α)_n/n! equals P_n^{(α,β)}(x)",
            grid: "1 ≤ n ≤ 12; α, β ∈ {0, 1/2, 1, 2, 7/3}; x ∈ {0, 1, 1/2, −1/3, 2/5}",
            comparison: Comparison::Exact,
            run: polys::khan_jacobi,
        },
        IdentitySuite {
            id: "I2_jain_jacobi",
            description: "Jain's 𝒥 with c = 1+α+β, k = 2 reduces to ((1+α+β)_n/(1+α)_n)·P_n^{(α,β)}(1−2x)",
            grid: "1 ≤ n ≤ 12; α, β ∈ {0, 1/2, 1, 2, 7/3}; x ∈ {0, 1, 1/2, −1/3, 2/5}",
            comparison: Comparison::Exact,
            run: polys::jain_jacobi,
        },
        IdentitySuite {
            id: "I3_shah",
            description: "Shah's F_n with m = λ = μ = 1 reduces to the Jacobi and to the generalized Rice polynomial",
            grid: "1 ≤ n ≤ 12; α, β ∈ {0, 1/2, 1, 2, 7/3}; x ∈ {0, 1, 1/2, −1/3, 2/5}; (ξ, p) = (3/2, 5/2)",
            comparison: Comparison::Exact,
            run: polys::shah,
        },
        IdentitySuite {
            id: "I4_chebyshev_gegenbauer",
            description: "P_n^{(1/2,1/2)} = ((3/2)_n/(n+1)!)·U_n = ((3/2)_n/(n+1)!)·C_n^{(1)}",
            grid: "0 ≤ n ≤ 15; 21 equispaced x in [−1, 1]",
            comparison: float,
            run: polys::chebyshev_gegenbauer,
        },
        IdentitySuite {
            id: "I5_threej_cg",
            description: "3j symbol via ₃F₂ equals Racah's sum; both Hahn-polynomial CG forms equal the 3j-derived CG",
            grid: "all valid 3j arguments with j ≤ 9/2; 0 ≤ n, x ≤ N ≤ 6, 0 ≤ α, β ≤ 3",
            comparison: Comparison::Exact,
            run: coupling::threej_cg,
        },
        IdentitySuite {
            id: "I6_weber_erdelyi",
            description:
                "Both Weber–Erdélyi ₃F₂ transformations preserve the value; the first leaves the 3j symbol unchanged",
            grid: "200 seeded random pole-free parameter sets with n ≤ 10; all valid 3j arguments with j ≤ 3",
            comparison: Comparison::Exact,
            run: coupling::weber_erdelyi,
        },
        IdentitySuite {
            id: "I7_rajeswari",
            description: "Both Rajeswari substitutions express a Khan ₃F₂ at unit argument through a 3j symbol",
            grid: "all valid 3j arguments with j ≤ 3",
            comparison: Comparison::Exact,
            run: coupling::rajeswari,
        },
        IdentitySuite {
            id: "I8_hahn_limit",
            description: "Q_n(Nx; α, β, N) → (n!/(α+1)_n)·P_n^{(α,β)}(1−2x) with error halving as N doubles",
            grid: "1 ≤ n ≤ 5; (α, β) ∈ {(0, 0), (1, 1/2)}; x ∈ {1/4, 1/2}; N ∈ {50, 100, 200, 400}",
            comparison: Comparison::Rate { low: RATE_RANGE.0, high: RATE_RANGE.1 },
            run: polys::hahn_limit,
        },
        IdentitySuite {
            id: "I9_wigner_d",
            description: "Wigner d via P_s^{(μ,ν)}(cos θ) matches the explicit sum and is orthogonal",
            grid: "j ≤ 15/2, all m, k; θ ∈ {0, π/7, π/3, π/2, 2π/3, π}",
            comparison: float,
            run: rotation::wigner_d,
        },
        IdentitySuite {
            id: "I10_character",
            description: "The hypergeometric character divided by Σ_m cos(mω) is independent of ω",
            grid: "0 ≤ 2j ≤ 8; 12 values of ω away from zeros of the closed form",
            comparison: Comparison::RatioConstancy { tolerance: RATIO_SPREAD_TOL },
            run: rotation::character,
        },
        IdentitySuite {
            id: "I11_gen_character",
            description: "Jacobi and ₂F₁ forms of the generalized character agree; order 0 reduces to the character",
            grid: "0 ≤ 2j ≤ 6; 0 ≤ λ ≤ 2j; six values of ω",
            comparison: float,
            run: rotation::gen_character,
        },
        IdentitySuite {
            id: "I12_khan_integral",
            description: "Term-wise Gamma integral of f_n(1, 2α+1; −; −; xt) equals (n!/(1+α)_n)·P_n^{(α,α)}(1−2x)",
            grid: "0 ≤ n ≤ 10; α ∈ {0, 1/2, 1, 5/2}; x ∈ {0, 1/4, 1/2, 1, −2/3}",
            comparison: Comparison::Exact,
            run: polys::khan_integral,
        },
        IdentitySuite {
            id: "threej_orthogonality",
            description: "Σ_{m₁,m₂} (2j₃+1)·(j₁ j₂ j₃; m₁ m₂ m₃)² = 1",
            grid: "all triangles with j ≤ 4 and every m₃",
            comparison: Comparison::Exact,
            run: coupling::orthogonality,
        },
    ]
}

pub fn run_suite(id: &str, scale: Scale, seed: u64) -> Result<IdentityReport> {
    let suite = list_suites().into_iter().find(|s| s.id == id).ok_or_else(|| Error::NotFound(id.to_string()))?;
    Ok(execute(&suite, scale, seed))
}

pub fn run_all(scale: Scale, seed: u64) -> Vec<IdentityReport> {
    list_suites().par_iter().map(|s| execute(s, scale, seed)).collect()
}

fn execute(suite: &IdentitySuite, scale: Scale, seed: u64) -> IdentityReport {
    let start = Instant::now();
    let outcome = (suite.run)(scale, seed);
    IdentityReport {
        suite: suite.id.to_string(),
        pass: outcome.failures.is_empty(),
        cases_run: outcome.cases,
        failures: outcome.failures,
        wall_time_s: start.elapsed().as_secs_f64(),
        notes: outcome.notes.join("\n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn registry_shape() {
        let suites = list_suites();
        assert_eq!(suites.len(), 13);
        let ids: HashSet<_> = suites.iter().map(|s| s.id).collect();
        assert_eq!(ids.len(), 13);
        assert!(suites.iter().all(|s| !s.description.is_empty() && !s.grid.is_empty()));
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("no_such_suite", Scale::Small, 0), Err(Error::NotFound(_))));
    }

    #[test]
    fn scale_parsing() {
        assert_eq!("small".parse::<Scale>().unwrap(), Scale::Small);
        assert_eq!(Scale::Large.to_string(), "large");
        assert!("huge".parse::<Scale>().is_err());
    }

    #[test]
    fn float_rule() {
        assert!(float_close(0.5, 0.5 + 5e-13, FLOAT_TOL).0);
        assert!(!float_close(0.5, 0.5 + 5e-12, FLOAT_TOL).0);
        assert!(float_close(1e6, 1e6 + 1e-7, FLOAT_TOL).0);
    }
}
