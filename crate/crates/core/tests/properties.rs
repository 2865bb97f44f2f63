mod common;

use common::*;

#[test]
fn interlacing_on_distance_preserving_pairs() {
    let s = interlacing_suite(1000, 1);
    assert_eq!(s.cases, 1000);
    assert!(s.pass(), "{:?}", s.failures);
}

#[test]
fn polynomial_is_relabeling_invariant() {
    let s = relabel_suite(1000, 2);
    assert!(s.pass(), "{:?}", s.failures);
}

#[test]
fn graph6_roundtrip() {
    let s = graph6_suite(1000, 3);
    assert!(s.pass(), "{:?}", s.failures);
}

#[test]
fn jacobi_matches_exact_roots() {
    let s = agreement_suite();
    assert!(s.cases > 700, "{}", s.cases);
    assert!(s.pass(), "{:?}", s.failures);
    assert!(s.max_deviation <= 1e-8);
}

#[test]
fn residual_at_jacobi_eigenvalues() {
    let s = residual_suite();
    assert!(
        s.pass(),
        "{} of {} eigenvalues exceed the bound (worst ratio {:.1}); first: {:?}",
        s.failures.len(),
        s.cases,
        s.max_deviation,
        &s.failures[..s.failures.len().min(5)]
    );
}
