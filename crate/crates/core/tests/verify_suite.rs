use schur_core::verify::{run_suite, Status, VerifyConfig};
use schur_core::{Exec, OracleConfig};

#[test]
fn suite_passes_on_small_algebras() {
    for (n, d) in [(1, 3), (2, 0), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3)] {
        let report = run_suite(n, d, &VerifyConfig::default());
        for c in &report.checks {
            assert_ne!(c.status, Status::Fail, "S({n},{d}) {}: {}", c.name, c.detail);
        }
        assert!(report.passed());
    }
}

#[test]
fn sequential_suite_agrees() {
    let cfg = VerifyConfig { exec: Exec::Sequential, ..VerifyConfig::default() };
    let report = run_suite(2, 3, &cfg);
    assert!(report.checks.iter().all(|c| c.status == Status::Pass), "{:?}", report.checks);
}

#[test]
fn oracle_checks_skip_beyond_guard() {
    let cfg = VerifyConfig { oracle: OracleConfig { max_tensor_dim: 4 }, ..VerifyConfig::default() };
    let report = run_suite(2, 3, &cfg);
    let skipped: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Skipped)
        .map(|c| c.name)
        .collect();
    assert!(skipped.contains(&"oracle-equivalence"));
    assert!(report.passed());
    let json = report.to_json();
    assert_eq!(json["passed"], true);
}
