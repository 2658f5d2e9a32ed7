//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Everything is exact arithmetic; there are no tolerances anywhere.

use sl2ws::checks::{
    check_circumference_link, check_closed_form_reproduction, check_combinatorics,
    check_fourterm_vanishing, check_generating_functions, check_hopf_suite,
    check_isograph_invariance, check_monicity, check_oracle_exhaustive, check_oracle_random,
    check_projection_values, check_recurrences, CheckConfig, CheckResult,
};

fn run(number: u32, title: &str, parts: &[fn(&CheckConfig) -> CheckResult]) {
    let cfg = CheckConfig::default();
    let mut details = Vec::new();
    for part in parts {
        match part(&cfg) {
            Ok(detail) => details.push(detail),
            Err(e) => {
                println!("acceptance {number} ({title}): FAIL - {e}");
                panic!("acceptance {number} ({title}) failed: {e}");
            }
        }
    }
    println!(
        "acceptance {number} ({title}): PASS - {}",
        details.join("; ")
    );
}

#[test]
fn acceptance_1_closed_form_reproduction() {
    run(
        1,
        "closed-form reproduction on K_{l,n}, l+n <= 9",
        &[check_closed_form_reproduction],
    );
}

#[test]
fn acceptance_2_oracle_equivalence() {
    run(
        2,
        "oracle equivalence, exhaustive to order 5 plus 50 seeded order 6",
        &[check_oracle_exhaustive, check_oracle_random],
    );
}

#[test]
fn acceptance_3_recurrence_agreement() {
    run(
        3,
        "recurrences, intermediate identity, triangle identity",
        &[check_recurrences],
    );
}

#[test]
fn acceptance_4_four_term_and_invariance() {
    run(
        4,
        "four-term vanishing and intersection-graph invariance",
        &[check_fourterm_vanishing, check_isograph_invariance],
    );
}

#[test]
fn acceptance_5_hopf_suite() {
    run(
        5,
        "coassociativity, primitivity, projection identities",
        &[check_hopf_suite],
    );
}

#[test]
fn acceptance_6_projection_values() {
    run(
        6,
        "projection values and bipartite degree bounds",
        &[check_projection_values],
    );
}

#[test]
fn acceptance_7_generating_functions() {
    run(
        7,
        "generating functions, EGF to x^11 and OGF conventions",
        &[check_generating_functions],
    );
}

#[test]
fn acceptance_8_circumference_link() {
    run(
        8,
        "circumference equals 2 min(l,n) and bounds projected degree",
        &[check_circumference_link],
    );
}

#[test]
fn acceptance_9_combinatorics() {
    run(
        9,
        "Stirling values and alternating identities",
        &[check_combinatorics],
    );
}

/// Monicity rides along with the oracle suite: every value at order n is a
/// monic polynomial of degree n.
#[test]
fn acceptance_monicity() {
    run(2, "values monic of their order", &[check_monicity]);
}
