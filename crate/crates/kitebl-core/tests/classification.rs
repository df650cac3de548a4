//! Checks the structural shape classifier against a brute-force relabeling
//! oracle: a spec has a given class iff some relabeling of I and J turns it
//! into the canonical maps for that class.

mod common;

use common::sweep_specs;
use itertools::Itertools;
use kitebl_core::{classify_finite, connected_components, si_criterion, KiteClass, KiteSpec};

fn canonical_cycle(n: usize) -> KiteSpec {
    let lambda: Vec<usize> = (0..n).collect();
    let rho: Vec<usize> = (0..n).map(|j| (j + 1) % n).collect();
    KiteSpec::new(n, n, lambda, rho).unwrap()
}

fn canonical_chain(n: usize) -> KiteSpec {
    let lambda: Vec<usize> = (0..n).collect();
    let rho: Vec<usize> = (0..n).map(|j| j + 1).collect();
    KiteSpec::new(n + 1, n, lambda, rho).unwrap()
}

/// Specs are equivalent when bijections of I and of J intertwine both maps.
fn specs_equivalent(a: &KiteSpec, b: &KiteSpec) -> bool {
    if a.i_size() != b.i_size() || a.j_size() != b.j_size() {
        return false;
    }
    let i = a.i_size();
    let j = a.j_size();
    for pi in (0..i).permutations(i) {
        for pj in (0..j).permutations(j) {
            let lambda_ok = (0..j).all(|x| b.lambda()[pj[x]] == pi[a.lambda()[x]]);
            let rho_ok = (0..j).all(|x| b.rho()[pj[x]] == pi[a.rho()[x]]);
            if lambda_ok && rho_ok {
                return true;
            }
        }
    }
    false
}

fn classify_by_relabeling(spec: &KiteSpec) -> KiteClass {
    let (i, j) = (spec.i_size(), spec.j_size());
    match (i, j) {
        (0, 0) => return KiteClass::Degenerate00,
        (1, 0) => return KiteClass::Degenerate10,
        (1, 1) => return KiteClass::Degenerate11,
        _ => {}
    }
    if i == j && specs_equivalent(spec, &canonical_cycle(i)) {
        return KiteClass::CyclicNN(i);
    }
    if i == j + 1 && specs_equivalent(spec, &canonical_chain(j)) {
        return KiteClass::ChainN1N(j);
    }
    KiteClass::NotSIPattern("disconnected".into())
}

#[test]
fn classifier_matches_the_relabeling_oracle() {
    for spec in sweep_specs(4, 4) {
        assert_eq!(
            classify_finite(&spec),
            classify_by_relabeling(&spec),
            "classification mismatch on {}",
            spec.label()
        );
    }
}

#[test]
fn recognized_shapes_are_exactly_the_connected_specs() {
    let g2 = kitebl_core::godel_chain(2).unwrap();
    for spec in sweep_specs(4, 4) {
        let recognized = !matches!(classify_finite(&spec), KiteClass::NotSIPattern(_));
        let connected = connected_components(&spec).count() <= 1;
        assert_eq!(recognized, connected, "shape/connectivity mismatch on {}", spec.label());
        if kitebl_core::Algebra::size(&g2).pow(spec.i_size() as u32) <= 256 {
            let predicted = si_criterion(&g2, &spec, kitebl_core::DEFAULT_ENUM_BOUND).unwrap();
            assert_eq!(predicted, recognized, "criterion mismatch on {}", spec.label());
        }
    }
}
