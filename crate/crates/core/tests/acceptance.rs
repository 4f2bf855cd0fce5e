//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line and failing loudly with counterexamples.

use shizeta_core::verify::{
    check_distribution_identity, check_dyck_compatibility, check_examples, check_geometry,
    check_labelled_transport, check_oracle_crosschecks, check_sweep_equivalence,
    check_valley_characterization_all, check_zeta_bijection, Check,
};

fn report(number: usize, check: Check) {
    println!(
        "criterion {} ({}): {}",
        number,
        check.name,
        if check.pass { "pass" } else { "FAIL" }
    );
    assert!(check.pass, "criterion {} ({}): {:?}", number, check.name, check.details);
}

#[test]
fn criterion_1_worked_examples() {
    report(1, check_examples());
}

#[test]
fn criterion_2_zeta_bijection() {
    report(2, check_zeta_bijection(6));
}

#[test]
fn criterion_3_labelled_transport() {
    report(3, check_labelled_transport(4));
}

#[test]
fn criterion_4_sweep_equivalence() {
    report(4, check_sweep_equivalence(6));
}

#[test]
fn criterion_5_valley_characterization() {
    report(5, check_valley_characterization_all(4));
}

#[test]
fn criterion_6_dyck_compatibility() {
    report(6, check_dyck_compatibility(6, 5));
}

#[test]
fn criterion_7_geometry_oracle() {
    report(7, check_geometry(1));
}

#[test]
fn criterion_8_distribution_identity() {
    report(8, check_distribution_identity(4));
}

#[test]
fn criterion_9_oracle_crosschecks() {
    report(9, check_oracle_crosschecks(5));
}
