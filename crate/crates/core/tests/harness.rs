use celine_core::harness::{list_suites, run_all, run_suite, Scale};

#[test]
fn registry_has_thirteen_unique_suites() {
    let ids: Vec<&str> = list_suites().iter().map(|s| s.id).collect();
    assert_eq!(ids.len(), 13);
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), 13);
    assert!(ids.contains(&"threej_orthogonality"));
}

#[test]
fn small_scale_is_deterministic_and_passes() {
    let first = run_all(Scale::Small, 7);
    let second = run_all(Scale::Small, 7);
    assert_eq!(first.len(), 13);
    let a: Vec<_> = first.iter().map(|r| r.payload()).collect();
    let b: Vec<_> = second.iter().map(|r| r.payload()).collect();
    assert_eq!(a, b);
    for r in &first {
        assert!(r.pass, "{} failed: {:?}", r.suite, r.failures.first());
    }
    // registry order is preserved
    let order: Vec<&str> = list_suites().iter().map(|s| s.id).collect();
    assert_eq!(first.iter().map(|r| r.suite.as_str()).collect::<Vec<_>>(), order);
}

#[test]
fn seed_changes_random_suite_only() {
    let a = run_suite("I6_weber_erdelyi", Scale::Small, 1).unwrap();
    let b = run_suite("I6_weber_erdelyi", Scale::Small, 2).unwrap();
    assert!(a.pass && b.pass);
    let c = run_suite("I1_khan_jacobi", Scale::Small, 1).unwrap();
    let d = run_suite("I1_khan_jacobi", Scale::Small, 2).unwrap();
    assert_eq!(c.payload(), d.payload());
}

#[test]
fn default_polynomial_grid_sizes() {
    // n = 1..=12 over a 5×5 (α, β) grid and five arguments
    let r = run_suite("I1_khan_jacobi", Scale::Default, 0).unwrap();
    assert!(r.pass);
    assert_eq!(r.cases_run, 1500);
}

#[test]
fn unknown_suite_is_not_found() {
    let err = run_suite("bogus", Scale::Small, 0).unwrap_err();
    assert_eq!(err.kind(), "NotFoundError");
}

#[test]
fn report_serializes_with_schema_fields() {
    let r = run_suite("I10_character", Scale::Small, 0).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    for key in ["suite", "pass", "cases_run", "failures", "wall_time_s", "notes"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}
