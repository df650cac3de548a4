//! Property tests over randomly drawn catalog hoops and specs.

use proptest::prelude::*;

use kitebl_core::{
    build_kite, check_pseudo_hoop, derive_order, direct_product, format, godel_chain, injections,
    is_good, lukasiewicz_chain, meet, ordinal_sum, Algebra, FiniteHoop, KitePart, KiteSpec,
};

fn small_hoop() -> impl Strategy<Value = FiniteHoop> {
    prop_oneof![
        (1usize..=5).prop_map(|n| godel_chain(n).unwrap()),
        (1usize..=5).prop_map(|n| lukasiewicz_chain(n).unwrap()),
        ((2usize..=3), (2usize..=3)).prop_map(|(a, b)| {
            direct_product(&godel_chain(a).unwrap(), &lukasiewicz_chain(b).unwrap())
        }),
        ((2usize..=3), (2usize..=3)).prop_map(|(a, b)| {
            ordinal_sum(&godel_chain(a).unwrap(), &lukasiewicz_chain(b).unwrap())
        }),
    ]
}

fn small_spec(max_i: usize) -> impl Strategy<Value = KiteSpec> {
    (0..=max_i)
        .prop_flat_map(|i| (Just(i), 0..=i))
        .prop_flat_map(|(i, j)| {
            let maps = injections(i, j);
            (
                Just(i),
                Just(j),
                proptest::sample::select(maps.clone()),
                proptest::sample::select(maps),
            )
        })
        .prop_map(|(i, j, lambda, rho)| KiteSpec::new(i, j, lambda, rho).unwrap())
}

proptest! {
    #[test]
    fn catalog_hoops_pass_the_axiom_sweep(h in small_hoop()) {
        prop_assert!(check_pseudo_hoop(&h).unwrap().passed());
    }

    #[test]
    fn meet_is_commutative_and_the_glb(h in small_hoop()) {
        let order = derive_order(&h);
        for a in 0..h.size() {
            for b in 0..h.size() {
                let m = meet(&h, a, b);
                prop_assert_eq!(m, meet(&h, b, a));
                prop_assert_eq!(Some(m), order.glb(a, b));
            }
        }
    }

    #[test]
    fn order_agrees_through_both_divisions(h in small_hoop()) {
        for a in 0..h.size() {
            for b in 0..h.size() {
                prop_assert_eq!(h.ldiv(a, b) == h.unit(), h.rdiv(b, a) == h.unit());
            }
        }
    }

    #[test]
    fn hoop_files_round_trip(h in small_hoop()) {
        let text = format::hoop_to_json(&h);
        let back = format::hoop_from_json(&text).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(format::hoop_to_json(&back), text);
    }

    #[test]
    fn kite_block_laws(h in small_hoop(), spec in small_spec(2)) {
        let kite = build_kite(&h, &spec).unwrap();
        let elems = kite.elements.as_ref().unwrap();
        for (x, ex) in elems.iter().enumerate() {
            for (y, ey) in elems.iter().enumerate() {
                if ex.part == KitePart::Lower && ey.part == KitePart::Lower {
                    prop_assert_eq!(kite.mul.get(x, y), kite.zero);
                }
                if ex.part == KitePart::Lower && ey.part == KitePart::Upper {
                    prop_assert_eq!(kite.ldiv.get(x, y), kite.one);
                    prop_assert_eq!(kite.rdiv.get(y, x), kite.one);
                }
            }
        }
    }

    #[test]
    fn goodness_matches_image_equality(h in small_hoop(), spec in small_spec(3)) {
        prop_assume!(!h.is_trivial());
        prop_assume!(kite_fits(&h, &spec));
        let kite = build_kite(&h, &spec).unwrap();
        prop_assert_eq!(is_good(&kite).0, spec.images_equal());
    }

    #[test]
    fn bl_files_round_trip(h in small_hoop(), spec in small_spec(2)) {
        let kite = build_kite(&h, &spec).unwrap();
        let text = format::bl_to_json(&kite);
        let back = format::bl_from_json(&text).unwrap();
        prop_assert_eq!(&back, &kite);
        prop_assert_eq!(format::bl_to_json(&back), text);
    }
}

fn kite_fits(h: &FiniteHoop, spec: &KiteSpec) -> bool {
    let n = h.size();
    n.pow(spec.j_size() as u32) + n.pow(spec.i_size() as u32) <= 600
}
