//! Acceptance checks, one PASS/FAIL line per criterion.
//!
//! Criteria run sequentially inside a single test so that wall-clock budgets
//! are not distorted by other tests sharing the thread pool.

use std::process::Command;
use std::time::{Duration, Instant};

use celine_core::angular::{threej, threej_racah, ThreeJArgs};
use celine_core::harness::{self, run_suite, IdentityReport, Scale};
use celine_core::HalfInt;

/// Wall-clock budgets.
const BUDGET_POLY_SUITES: Duration = Duration::from_secs(5);
const BUDGET_THREEJ: Duration = Duration::from_secs(10);
const BUDGET_WIGNER: Duration = Duration::from_secs(5);
const BUDGET_VERIFY_SMALL: Duration = Duration::from_secs(60);

/// Float tolerances pinned for the criteria.
const D_FUNCTION_TOL: f64 = 1e-12;
const UNITARITY_TOL: f64 = 1e-11;
const RATIO_SPREAD_TOL: f64 = 1e-10;
const FORM_EQUALITY_TOL: f64 = 1e-12;
const RATE_RANGE: (f64, f64) = (0.4, 0.62);

const SEED: u64 = 0;

struct Verdict {
    criterion: u8,
    pass: bool,
    detail: String,
}

fn suite(id: &str) -> IdentityReport {
    run_suite(id, Scale::Default, SEED).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn summary(r: &IdentityReport) -> String {
    format!("{} {} cases, {} failures", r.suite, r.cases_run, r.failures.len())
}

fn first_failure(r: &IdentityReport) -> String {
    r.failures.first().map(|f| format!(" [{}: {} vs {}, {}]", f.inputs, f.lhs, f.rhs, f.delta)).unwrap_or_default()
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let reports: Vec<_> = ["I1_khan_jacobi", "I2_jain_jacobi", "I3_shah", "I12_khan_integral"].map(suite).into();
    let elapsed = start.elapsed();
    let pass =
        reports.iter().all(|r| r.pass && r.failures.is_empty() && r.cases_run > 0) && elapsed < BUDGET_POLY_SUITES;
    let parts: Vec<_> = reports.iter().map(summary).collect();
    Verdict {
        criterion: 1,
        pass,
        detail: format!("{}; {:.2}s (budget {:?})", parts.join("; "), elapsed.as_secs_f64(), BUDGET_POLY_SUITES),
    }
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let tuples = ThreeJArgs::enumerate(HalfInt::from_twice(9));
    let mismatches = tuples
        .iter()
        .filter(|t| match (threej(t), threej_racah(t)) {
            (Ok(a), Ok(b)) => a != b,
            _ => true,
        })
        .count();
    let elapsed = start.elapsed();
    let ortho = suite("threej_orthogonality");
    let pass = mismatches == 0 && tuples.len() > 2000 && elapsed < BUDGET_THREEJ && ortho.pass;
    Verdict {
        criterion: 2,
        pass,
        detail: format!(
            "{} tuples with j ≤ 9/2, {mismatches} mismatches vs Racah sum, {:.2}s (budget {:?}); {}",
            tuples.len(),
            elapsed.as_secs_f64(),
            BUDGET_THREEJ,
            summary(&ortho)
        ),
    }
}

fn criterion_3(i5: &IdentityReport) -> Verdict {
    let resolved = i5.notes.contains("resolved to the factorial reading");
    let full_first = i5.notes.contains("2240 points per form");
    Verdict {
        criterion: 3,
        pass: i5.pass && resolved && full_first,
        detail: format!("{}; resolution recorded: {resolved}{}", summary(i5), first_failure(i5)),
    }
}

fn criterion_4() -> Verdict {
    let r = suite("I7_rajeswari");
    Verdict {
        criterion: 4,
        pass: r.pass,
        detail: format!("{}; {}{}", summary(&r), r.notes.replace('\n', "; "), first_failure(&r)),
    }
}

fn criterion_5() -> Verdict {
    let r = suite("I6_weber_erdelyi");
    let sets = r.notes.starts_with("200 random parameter sets");
    Verdict { criterion: 5, pass: r.pass && sets, detail: format!("{}{}", summary(&r), first_failure(&r)) }
}

fn criterion_6() -> Verdict {
    let start = Instant::now();
    let r = suite("I9_wigner_d");
    let elapsed = start.elapsed();
    Verdict {
        criterion: 6,
        pass: r.pass && elapsed < BUDGET_WIGNER,
        detail: format!(
            "{}; tolerances {D_FUNCTION_TOL:e}/{UNITARITY_TOL:e}; {:.2}s (budget {:?}){}",
            summary(&r),
            elapsed.as_secs_f64(),
            BUDGET_WIGNER,
            first_failure(&r)
        ),
    }
}

fn criterion_7() -> Verdict {
    let chi = suite("I10_character");
    let gen = suite("I11_gen_character");
    Verdict {
        criterion: 7,
        pass: chi.pass && gen.pass,
        detail: format!(
            "{} (spread tol {RATIO_SPREAD_TOL:e}); {} (tol {FORM_EQUALITY_TOL:e}){}{}",
            summary(&chi),
            summary(&gen),
            first_failure(&chi),
            first_failure(&gen)
        ),
    }
}

fn criterion_8() -> Verdict {
    let r = suite("I8_hahn_limit");
    Verdict {
        criterion: 8,
        pass: r.pass,
        detail: format!("{}; rate window {RATE_RANGE:?}{}", summary(&r), first_failure(&r)),
    }
}

fn celine(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_celine")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn criterion_9() -> Verdict {
    let documented: [(&[&str], i32, Option<&str>); 6] = [
        (&["eval", "threej", "--j", "1", "1", "2", "--m", "0", "0", "0"], 0, Some("sqrt(2/15) ≈ 0.365148371670111\n")),
        (&["eval", "jacobi", "-n", "0", "--alpha", "0", "--beta", "0", "--x", "1/2"], 0, Some("1\n")),
        (&["eval", "threej", "--j", "1", "1", "2", "--m", "0", "0", "1"], 0, Some("0\n")),
        (
            &["table", "threej", "--jmax", "0"],
            0,
            Some("twice_j1,twice_j2,twice_j3,twice_m1,twice_m2,twice_m3,exact,decimal\n0,0,0,0,0,0,sqrt(1),1\n"),
        ),
        (&["table", "threej", "--jmax", "1/2", "--format", "csv"], 0, None),
        (&["verify", "--suite", "bogus"], 2, None),
    ];
    let mut bad = Vec::new();
    for (args, code, text) in documented {
        let (got_code, got_text) = celine(args);
        if got_code != code || text.is_some_and(|t| t != got_text) {
            bad.push(args.join(" "));
        }
    }
    let (_, half_table) = celine(&["table", "threej", "--jmax", "1/2"]);
    if half_table.lines().count() != 1 + ThreeJArgs::enumerate(HalfInt::from_twice(1)).len() {
        bad.push("table threej --jmax 1/2 row count".into());
    }

    let start = Instant::now();
    let (code, text) = celine(&["verify", "--suite", "all", "--scale", "small", "--seed", "0"]);
    let elapsed = start.elapsed();
    let entries = text.lines().filter(|l| l.starts_with("PASS ") || l.starts_with("FAIL ")).count();
    let verify_ok = code == 0 && entries == 13 && elapsed < BUDGET_VERIFY_SMALL;
    Verdict {
        criterion: 9,
        pass: bad.is_empty() && verify_ok,
        detail: format!(
            "documented invocations mismatched: {bad:?}; verify small exit {code}, {entries} entries, {:.2}s (budget {:?})",
            elapsed.as_secs_f64(),
            BUDGET_VERIFY_SMALL
        ),
    }
}

#[test]
fn acceptance() {
    // the harness must run with exactly the pinned tolerances
    assert_eq!(harness::FLOAT_TOL, D_FUNCTION_TOL);
    assert_eq!(harness::FLOAT_TOL, FORM_EQUALITY_TOL);
    assert_eq!(harness::UNITARITY_TOL, UNITARITY_TOL);
    assert_eq!(harness::RATIO_SPREAD_TOL, RATIO_SPREAD_TOL);
    assert_eq!(harness::RATE_RANGE, RATE_RANGE);

    let i5 = suite("I5_threej_cg");
    let verdicts = vec![
        criterion_1(),
        criterion_2(),
        criterion_3(&i5),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ];
    for v in &verdicts {
        println!("{} criterion {}: {}", if v.pass { "PASS" } else { "FAIL" }, v.criterion, v.detail);
    }
    let failed: Vec<u8> = verdicts.iter().filter(|v| !v.pass).map(|v| v.criterion).collect();
    assert!(failed.is_empty(), "acceptance criteria failed: {failed:?}");
}
