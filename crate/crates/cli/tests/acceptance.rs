//! Acceptance suite: runs every verification criterion at its pinned
//! tolerance and prints one pass/fail line per check (run with
//! `--nocapture` to see the matrix).

use multiplicity_cli::verify::{run_criterion, CheckResult};

fn run_and_assert(criterion: usize) {
    let results = run_criterion(criterion);
    assert!(!results.is_empty());
    let mut failed = Vec::new();
    for CheckResult { criterion, name, passed, details } in results {
        let status = if passed { "PASS" } else { "FAIL" };
        println!("criterion {criterion:2} [{status}] {name:45} {details}");
        if !passed {
            failed.push(format!("{name}: {details}"));
        }
    }
    assert!(failed.is_empty(), "criterion {criterion} failed:\n{}", failed.join("\n"));
}

#[test]
fn criterion_01_catalan_oracle() {
    run_and_assert(1);
}

#[test]
fn criterion_02_noncrossing_tree_oracle() {
    run_and_assert(2);
}

#[test]
fn criterion_03_middle_region_count() {
    run_and_assert(3);
}

#[test]
fn criterion_04_support_identity() {
    run_and_assert(4);
}

#[test]
fn criterion_05_triangulation_constants() {
    run_and_assert(5);
}

#[test]
fn criterion_06_tree_and_forest_constants() {
    run_and_assert(6);
}

#[test]
fn criterion_07_cycle_upper_bound() {
    run_and_assert(7);
}

#[test]
fn criterion_08_weighted_multiplicities() {
    run_and_assert(8);
}

#[test]
fn criterion_09_convex_longest_tours() {
    run_and_assert(9);
}

#[test]
fn criterion_10_property_suite() {
    run_and_assert(10);
}
