//! Shared sweep generators and brute-force oracles for the acceptance suite.
//! Oracles here must stay independent of the implementation paths they
//! check.
#![allow(dead_code)] // each test binary uses its own slice of the helpers

use kitebl_core::{
    injections, Algebra, FilterSet, FiniteBl, FiniteHoop, KiteSpec, OpTable,
};

/// Every spec with `i <= max_i`, `j <= min(i, max_j)`, and all injective
/// map pairs, in deterministic order.
pub fn sweep_specs(max_i: usize, max_j: usize) -> Vec<KiteSpec> {
    let mut specs = Vec::new();
    for i in 0..=max_i {
        for j in 0..=i.min(max_j) {
            for lambda in injections(i, j) {
                for rho in injections(i, j) {
                    specs.push(KiteSpec::new(i, j, lambda.clone(), rho).unwrap());
                }
            }
        }
    }
    specs
}

/// Carrier size of the kite over a hoop of size `n`.
pub fn kite_size(n: usize, spec: &KiteSpec) -> usize {
    n.pow(spec.j_size() as u32) + n.pow(spec.i_size() as u32)
}

/// All normal filters by testing every unit-containing subset: the
/// exponential oracle guarding the closure-based enumerator.
pub fn normal_filters_by_subsets<A: Algebra>(alg: &A) -> Vec<FilterSet> {
    let n = alg.size();
    assert!(n <= 20, "subset oracle is exponential; carrier too large");
    let unit = alg.unit();
    let mut found = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & (1 << unit) == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
        let set = FilterSet::from_members(members.iter().copied());

        let is_filter = members.iter().all(|&a| {
            members.iter().all(|&b| set.contains(alg.mul(a, b)))
                && (0..n).all(|b| !alg.leq(a, b) || set.contains(b))
        });
        if !is_filter {
            continue;
        }
        let normal = (0..n).all(|a| {
            (0..n).all(|b| set.contains(alg.rdiv(b, a)) == set.contains(alg.ldiv(a, b)))
        });
        if normal {
            found.push(set);
        }
    }
    found.sort_by_key(|f| (f.len(), f.to_vec()));
    found
}

/// Components of `I` via the literal definition: pure forward powers of
/// `rho . lambda^-1` and pure backward powers, up to `|I|` steps. Asserts
/// along the way that the relation is symmetric, then partitions.
#[allow(clippy::needless_range_loop)] // indices are the I-elements
pub fn components_by_orbits(spec: &KiteSpec) -> Vec<Vec<usize>> {
    let n = spec.i_size();
    let lambda_inv = spec.lambda_preimage();
    let rho_inv = spec.rho_preimage();
    let forward = |i: usize| lambda_inv[i].map(|j| spec.rho()[j]);
    let backward = |i: usize| rho_inv[i].map(|j| spec.lambda()[j]);

    let mut related = vec![vec![false; n]; n];
    for i in 0..n {
        let mut walk = |step: &dyn Fn(usize) -> Option<usize>| {
            let mut at = i;
            related[i][i] = true;
            for _ in 0..n {
                match step(at) {
                    Some(next) => {
                        related[i][next] = true;
                        at = next;
                    }
                    None => break,
                }
            }
        };
        walk(&|x| forward(x));
        walk(&|x| backward(x));
    }
    for i in 0..n {
        for j in 0..n {
            assert_eq!(related[i][j], related[j][i], "orbit relation must be symmetric");
        }
    }

    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&j| related[i][j]).collect();
        for &j in &members {
            assert!(!seen[j], "orbit relation must be transitive");
            seen[j] = true;
        }
        components.push(members);
    }
    components
}

/// A hand-built two-element Boolean algebra, the reference object for the
/// degenerate kites.
pub fn boolean_algebra_2() -> FiniteBl {
    let rows = |r: [[usize; 2]; 2]| OpTable::from_rows(&[r[0].to_vec(), r[1].to_vec()]).unwrap();
    FiniteBl {
        name: Some("boolean-2".into()),
        zero: 0,
        one: 1,
        mul: rows([[0, 0], [0, 1]]),
        ldiv: rows([[1, 1], [0, 1]]),
        rdiv: rows([[1, 0], [1, 1]]),
        meet: rows([[0, 0], [0, 1]]),
        join: rows([[0, 1], [1, 1]]),
        elements: None,
        provenance: None,
    }
}

/// The four acceptance hoops.
pub fn acceptance_hoops() -> Vec<FiniteHoop> {
    vec![
        kitebl_core::trivial_hoop(),
        kitebl_core::godel_chain(2).unwrap(),
        kitebl_core::godel_chain(3).unwrap(),
        kitebl_core::lukasiewicz_chain(3).unwrap(),
    ]
}

pub fn g2() -> FiniteHoop {
    kitebl_core::godel_chain(2).unwrap()
}
