//! End-to-end acceptance: the project's top-level guarantees, one test and
//! one printed PASS/FAIL line per criterion. All suites run once per test
//! process and are shared across the criterion tests.

use std::sync::OnceLock;

use satogr::verify::{run_suite, CheckResult, VerifyOptions};

fn results() -> &'static [CheckResult] {
    static ALL: OnceLock<Vec<CheckResult>> = OnceLock::new();
    ALL.get_or_init(|| {
        let opts = VerifyOptions {
            max_degree: 8,
            threads: 0,
        };
        run_suite("all", &opts).expect("suite names are valid")
    })
}

fn assert_criterion(n: u32, title: &str, select: impl Fn(&CheckResult) -> bool) {
    let relevant: Vec<&CheckResult> = results().iter().filter(|c| select(c)).collect();
    assert!(!relevant.is_empty(), "criterion {n} matched no checks");
    let failed: Vec<&&CheckResult> = relevant.iter().filter(|c| !c.passed).collect();
    let status = if failed.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "{status} criterion {n:2}: {title} [{} checks]",
        relevant.len()
    );
    for f in &failed {
        println!("    failed: {}/{} - {}", f.suite, f.name, f.detail);
    }
    assert!(
        failed.is_empty(),
        "criterion {n} ({title}): {} of {} checks failed",
        failed.len(),
        relevant.len()
    );
}

#[test]
fn criterion_01_cauchy_identity() {
    assert_criterion(
        1,
        "series inversion matches signed complete-symmetric enumeration",
        |c| c.suite == "cauchy",
    );
}

#[test]
fn criterion_02_lr_oracle_equivalence() {
    assert_criterion(
        2,
        "tableau LR coefficients match brute-force Schur expansion",
        |c| c.suite == "lr" && c.name.starts_with("lr-"),
    );
}

#[test]
fn criterion_03_gkm_suite() {
    assert_criterion(
        3,
        "localization tables: divisibility, triangularity, rotation, products vs LR",
        |c| c.suite == "gkm",
    );
}

#[test]
fn criterion_04_corollary_limits() {
    assert_criterion(
        4,
        "point-class limits of equivariant pullbacks reproduce ordinary corollaries",
        |c| c.name == "corollary-limit-grid",
    );
}

#[test]
fn criterion_05_k1_boundary_values() {
    assert_criterion(
        5,
        "q = 1 map: top boundary value and vanishing above it",
        |c| c.name == "k1-boundary-values",
    );
}

#[test]
fn criterion_06_ring_homomorphism() {
    assert_criterion(
        6,
        "ordinary pullbacks are ring homomorphisms on exhaustive Schur products",
        |c| c.name.starts_with("ring-homomorphism"),
    );
}

#[test]
fn criterion_07_hodge_characters() {
    assert_criterion(
        7,
        "Hodge bundle Chern characters: even vanishing, kappa_1/12, rank consistency",
        |c| c.suite == "grr" && c.name.starts_with("hodge-"),
    );
}

#[test]
fn criterion_08_grr_oracle() {
    assert_criterion(
        8,
        "mechanical Riemann-Roch expansion: grading, Bernoulli support, stated-formula deltas",
        |c| {
            c.suite == "grr"
                && (c.name.starts_with("grr-")
                    || c.name.starts_with("bernoulli")
                    || c.name == "todd-vs-bernoulli")
        },
    );
}

#[test]
fn criterion_09_newton_roundtrip() {
    assert_criterion(
        9,
        "Chern class / Chern character conversions are mutually inverse",
        |c| c.suite == "newton",
    );
}

#[test]
fn criterion_10_maya_combinatorics() {
    assert_criterion(
        10,
        "codimension law and sequence/partition round-trip",
        |c| c.name == "maya-roundtrip",
    );
}
