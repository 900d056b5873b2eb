//! Acceptance gate: runs every verification suite and prints one
//! pass/fail line per suite (visible with `--nocapture`). A test fails
//! if any check inside its suite fails or the suite blows its time budget.

use ttap::verify::{run_suite, Suite};

fn check(suite: Suite) {
    let report = run_suite(suite);
    let status = if report.passed { "PASS" } else { "FAIL" };
    println!(
        "[{status}] {:<11} {:>9.2?}  {}",
        report.suite.name(),
        report.elapsed,
        report.suite.description()
    );
    for c in report.checks.iter().filter(|c| !c.passed) {
        println!("        {}: {}", c.name, c.details);
    }
    assert!(report.passed, "{} suite failed", report.suite.name());
    let budget = report.suite.time_budget();
    assert!(
        report.elapsed <= budget,
        "{} suite took {:?}, over its {:?} budget",
        report.suite.name(),
        report.elapsed,
        budget
    );
}

#[test]
fn golden_polynomial_tables_match_exactly() {
    check(Suite::Examples);
}

#[test]
fn component_count_formulas_match_enumeration() {
    check(Suite::Counting);
}

#[test]
fn coefficients_and_torsions_are_algebraic_integers() {
    check(Suite::Integrality);
}

#[test]
fn numerical_oracle_confirms_closed_form_polynomials() {
    check(Suite::Oracle);
}

#[test]
fn sine_power_sums_and_verlinde_ranks_hold() {
    check(Suite::Lemmas);
}

#[test]
fn torsion_power_sums_match_brute_force() {
    check(Suite::PowerSum);
}

#[test]
fn seifert_paths_agree_on_randomized_data() {
    check(Suite::Seifert);
}

#[test]
fn general_torsion_path_matches_sl2_closed_form() {
    check(Suite::Sl2CrossPath);
}
