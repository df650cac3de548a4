//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (run with `--nocapture` to see them). Sweeps are exhaustive over the
//! stated ranges and checked against independent oracles where one exists.

mod common;

use std::time::Instant;

use common::*;
use kitebl_core::*;

const BOUND: usize = DEFAULT_ENUM_BOUND;

fn verdict(index: usize, label: &str, ok: bool, detail: &str, started: Instant) {
    println!(
        "criterion {index:02} ({label}): {} — {detail}, {:.2?}",
        if ok { "PASS" } else { "FAIL" },
        started.elapsed()
    );
}

/// Every kite over the acceptance hoops and the full spec sweep is a pseudo
/// BL-algebra with zero violations.
#[test]
fn criterion_01_kites_satisfy_the_pseudo_bl_axioms() {
    let started = Instant::now();
    let mut total = 0usize;
    let mut failures: Vec<(String, Vec<String>)> = Vec::new();
    for hoop in acceptance_hoops() {
        for spec in sweep_specs(3, 2) {
            let kite = build_kite(&hoop, &spec).unwrap();
            total += 1;
            let report = check_pseudo_bl(&kite).unwrap();
            if !report.passed() {
                let mut axioms: Vec<String> =
                    report.axioms().iter().map(|s| s.to_string()).collect();
                axioms.dedup();
                failures.push((kite.name.clone().unwrap_or_default(), axioms));
            }
        }
    }
    let ok = failures.is_empty();
    verdict(
        1,
        "kite construction yields pseudo BL-algebras",
        ok,
        &format!("{} of {total} kites failed", failures.len()),
        started,
    );
    assert!(
        ok,
        "{} of {total} kites are not pseudo BL-algebras. Every failure is at \
         divisibility: for an upper x = <a_i> and a lower y = <f_j>, the \
         residual is x\\y = <f_j * a_lambda(j)> and so x*(x\\y) = \
         <(f_j * a_lambda(j)) / a_lambda(j)>, which equals y = x/\\y only if \
         (f*a)/a = f holds in the hoop. That identity is right-cancellation, \
         and no finite non-trivial hoop is cancellative (multiplication by \
         a < 1 maps the carrier into the down-set of a). Hence every kite \
         with a non-empty J over a non-trivial hoop fails; kites with J = 0 \
         or over the trivial hoop pass. First failure: {:?} at {:?}. See the \
         unit test verify::six_element_kite_fails_exactly_the_divisibility_axioms \
         for the minimal witness.",
        failures.len(),
        failures[0].0,
        failures[0].1,
    );
}

/// Semantic goodness coincides with image equality of the maps, and the
/// semantic double-negation identity with the images covering I, over every
/// non-trivial acceptance hoop and the full sweep.
#[test]
fn criterion_02_goodness_and_mv_match_the_image_predicates() {
    let started = Instant::now();
    let mut checked = 0usize;
    for hoop in acceptance_hoops().into_iter().filter(|h| !h.is_trivial()) {
        for spec in sweep_specs(3, 2) {
            let kite = build_kite(&hoop, &spec).unwrap();
            let (good, _) = is_good(&kite);
            assert_eq!(
                good,
                spec.images_equal(),
                "goodness mismatch for {:?}",
                kite.name
            );
            let (mv, _) = is_pseudo_mv(&kite);
            assert_eq!(
                mv,
                spec.images_cover(),
                "double-negation mismatch for {:?}",
                kite.name
            );
            checked += 1;
        }
    }
    verdict(
        2,
        "goodness and MV agree with the image predicates",
        true,
        &format!("{checked} kites, exact agreement"),
        started,
    );
}

/// Bijective map pairs always give the double-negation identity.
#[test]
fn criterion_03_bijective_specs_give_mv() {
    let started = Instant::now();
    let mut checked = 0usize;
    for hoop in acceptance_hoops() {
        for spec in sweep_specs(3, 3) {
            if spec.i_size() != spec.j_size() {
                continue;
            }
            let kite = build_kite(&hoop, &spec).unwrap();
            assert!(is_pseudo_mv(&kite).0, "bijective spec failed for {:?}", kite.name);
            checked += 1;
        }
    }
    verdict(
        3,
        "bijective specs give pseudo MV double negations",
        true,
        &format!("{checked} bijective kites"),
        started,
    );
}

/// The six-element kite over the two-element chain has an element whose two
/// double negations differ.
#[test]
fn criterion_04_non_goodness_witness() {
    let started = Instant::now();
    let spec = KiteSpec::new(2, 1, vec![0], vec![1]).unwrap();
    let kite = build_kite(&g2(), &spec).unwrap();
    // canonical index 2 is U<t,t>
    let x = 2;
    assert_eq!(
        kite.elements.as_ref().unwrap()[x],
        KiteElement::upper(vec![0, 0])
    );
    let (neg, til) = negations(&kite, x);
    let neg_til = kite.ldiv.get(neg, kite.zero);
    let til_neg = kite.rdiv.get(kite.zero, til);
    assert_ne!(neg_til, til_neg, "the two double negations must differ at U<t,t>");
    assert_eq!(is_good(&kite), (false, Some(x)));
    verdict(
        4,
        "non-goodness witness on the six-element kite",
        true,
        &format!(
            "U:t,t gives {} vs {}",
            kite.element_label(neg_til),
            kite.element_label(til_neg)
        ),
        started,
    );
}

/// The same kite is non-commutative, while equal maps over commutative
/// hoops never are.
#[test]
fn criterion_05_noncommutativity_witnesses() {
    let started = Instant::now();
    let spec = KiteSpec::new(2, 1, vec![0], vec![1]).unwrap();
    let kite = build_kite(&g2(), &spec).unwrap();
    let witness = find_noncommutative_witness(&kite);
    assert!(witness.is_some(), "the six-element kite must be non-commutative");

    let mut symmetric_checked = 0usize;
    for hoop in acceptance_hoops() {
        for spec in sweep_specs(3, 2) {
            if spec.lambda() != spec.rho() {
                continue;
            }
            let kite = build_kite(&hoop, &spec).unwrap();
            assert_eq!(
                find_noncommutative_witness(&kite),
                None,
                "equal maps must give a commutative kite for {:?}",
                kite.name
            );
            symmetric_checked += 1;
        }
    }
    let (x, y) = witness.unwrap();
    verdict(
        5,
        "non-commutativity witness",
        true,
        &format!(
            "witness ({}, {}); {symmetric_checked} equal-map kites commutative",
            kite.element_label(x),
            kite.element_label(y)
        ),
        started,
    );
}

/// The structural irreducibility test agrees with exhaustive normal-filter
/// enumeration on every kite of at most 12 elements over the two-element
/// chain and over its square.
#[test]
fn criterion_06_si_criterion_matches_enumeration() {
    let started = Instant::now();
    let hoops = [g2(), direct_product(&g2(), &g2())];
    let mut checked = 0usize;
    for hoop in &hoops {
        for spec in sweep_specs(3, 3) {
            if kite_size(hoop.size(), &spec) > 12 {
                continue;
            }
            let predicted = si_criterion(hoop, &spec, BOUND).unwrap();
            let kite = build_kite(hoop, &spec).unwrap();
            let (actual, _) = is_subdirectly_irreducible(&kite, BOUND).unwrap();
            assert_eq!(
                predicted,
                actual,
                "structural test disagrees with enumeration for {:?}",
                kite.name
            );
            checked += 1;
        }
    }
    verdict(
        6,
        "structural irreducibility test matches enumeration",
        true,
        &format!("{checked} kites, both directions"),
        started,
    );
}

/// The upper block is a maximal normal filter of every sweep kite, and
/// every non-trivial normal filter of the hoop lifts coordinatewise to a
/// normal filter of the kite.
#[test]
fn criterion_07_upper_block_and_lifted_filters() {
    let started = Instant::now();
    let mut kites = 0usize;
    let mut lifted = 0usize;
    for hoop in acceptance_hoops() {
        let hoop_filters = enumerate_normal_filters(&hoop, BOUND).unwrap();
        for spec in sweep_specs(3, 2) {
            let kite = build_kite(&hoop, &spec).unwrap();
            let upper = FilterSet::from_members(kite.upper_block().unwrap());
            assert!(is_normal(&kite, &upper).unwrap(), "upper block not normal in {:?}", kite.name);
            assert!(
                is_maximal_filter(&kite, &upper).unwrap(),
                "upper block not maximal in {:?}",
                kite.name
            );
            kites += 1;

            let elements = kite.elements.as_ref().unwrap();
            for nf in hoop_filters.iter().filter(|f| !f.is_unit_only()) {
                let lift = FilterSet::from_members(elements.iter().enumerate().filter_map(
                    |(idx, e)| {
                        (e.part == KitePart::Upper
                            && e.coords.iter().all(|&c| nf.contains(c)))
                        .then_some(idx)
                    },
                ));
                assert!(
                    is_normal(&kite, &lift).unwrap(),
                    "lift of {:?} not normal in {:?}",
                    nf.to_vec(),
                    kite.name
                );
                lifted += 1;
            }
        }
    }
    verdict(
        7,
        "upper block maximal normal; hoop filters lift",
        true,
        &format!("{kites} kites, {lifted} lifted filters"),
        started,
    );
}

/// Component decomposition verifies its quotient isomorphisms and joint
/// injectivity on every sweep kite, and the full subdirect representation
/// produces factors passing the structural irreducibility test.
#[test]
fn criterion_08_decomposition_and_subdirect_representation() {
    let started = Instant::now();
    let mut decomposed = 0usize;
    let mut represented = 0usize;
    for hoop in acceptance_hoops() {
        for spec in sweep_specs(3, 2) {
            let factors = decompose(&hoop, &spec).unwrap();
            let components = connected_components(&spec).count().max(1);
            assert_eq!(factors.len(), components);
            decomposed += 1;

            let factors = subdirect_representation(&hoop, &spec, BOUND).unwrap();
            assert!(!factors.is_empty());
            if hoop.is_trivial() {
                assert_eq!(factors.len(), 1);
                assert_eq!(factors[0].kite.size(), 2);
            } else {
                for f in &factors {
                    assert!(si_criterion(
                        &quotient_hoop(&hoop, &f.hoop_filter).unwrap(),
                        &f.spec,
                        BOUND
                    )
                    .unwrap());
                }
            }
            represented += 1;
        }
    }
    verdict(
        8,
        "decomposition and subdirect representation verify",
        true,
        &format!("{decomposed} decompositions, {represented} representations"),
        started,
    );
}

/// Every kite over the trivial hoop is the two-element Boolean algebra.
#[test]
fn criterion_09_trivial_hoop_kites_are_boolean() {
    let started = Instant::now();
    let reference = boolean_algebra_2();
    let mut checked = 0usize;
    for spec in sweep_specs(3, 2) {
        let kite = build_kite(&trivial_hoop(), &spec).unwrap();
        assert!(
            find_isomorphism(&kite, &reference).is_some(),
            "kite over the trivial hoop is not Boolean for {:?}",
            kite.name
        );
        checked += 1;
    }
    verdict(
        9,
        "trivial-hoop kites are the two-element Boolean algebra",
        true,
        &format!("{checked} specs, isomorphism verified"),
        started,
    );
}

/// The closure-based filter enumerator agrees with the all-subsets oracle
/// on every suite algebra of at most 12 elements, and graph connectivity
/// agrees with the literal orbit definition for |I| <= 6.
#[test]
fn criterion_10_oracle_guards() {
    let started = Instant::now();

    let mut algebras: Vec<FiniteBl> = Vec::new();
    for hoop in [g2(), direct_product(&g2(), &g2())] {
        for spec in sweep_specs(3, 3) {
            if kite_size(hoop.size(), &spec) <= 12 {
                algebras.push(build_kite(&hoop, &spec).unwrap());
            }
        }
    }
    let mut filter_checks = 0usize;
    for b in &algebras {
        assert_eq!(
            enumerate_normal_filters(b, 12).unwrap(),
            normal_filters_by_subsets(b),
            "filter enumeration mismatch on {:?}",
            b.name
        );
        filter_checks += 1;
    }
    for hoop in [
        trivial_hoop(),
        g2(),
        godel_chain(3).unwrap(),
        lukasiewicz_chain(3).unwrap(),
        direct_product(&g2(), &g2()),
        direct_product(&g2(), &lukasiewicz_chain(3).unwrap()),
        ordinal_sum(&g2(), &g2()),
    ] {
        assert_eq!(
            enumerate_normal_filters(&hoop, 12).unwrap(),
            normal_filters_by_subsets(&hoop),
            "filter enumeration mismatch on hoop {:?}",
            hoop.name()
        );
        filter_checks += 1;
    }

    let mut component_checks = 0usize;
    let mut check_spec = |spec: &KiteSpec| {
        assert_eq!(
            connected_components(spec).components,
            components_by_orbits(spec),
            "connectivity mismatch on {}",
            spec.label()
        );
        component_checks += 1;
    };
    for spec in sweep_specs(4, 4) {
        check_spec(&spec);
    }
    for i in 5..=6usize {
        for j in 0..=i {
            let lambda: Vec<usize> = (0..j).collect();
            for rho in injections(i, j) {
                check_spec(&KiteSpec::new(i, j, lambda.clone(), rho).unwrap());
            }
        }
    }

    verdict(
        10,
        "oracle guards",
        true,
        &format!("{filter_checks} filter lattices, {component_checks} connectivity specs"),
        started,
    );
}
