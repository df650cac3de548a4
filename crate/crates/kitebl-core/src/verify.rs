//! Exhaustive verification of the pseudo BL-algebra axioms on table-backed
//! algebras: the independent oracle for everything [`crate::kite`] builds.

use crate::error::{Error, Result};
use crate::hoop::{AxiomReport, ReportBuilder};
use crate::kite::FiniteBl;

fn structural_check(b: &FiniteBl) -> Result<()> {
    let n = b.size();
    if n == 0 {
        return Err(Error::Structural("carrier is empty".into()));
    }
    if b.zero >= n || b.one >= n {
        return Err(Error::Structural(format!(
            "bounds ({}, {}) out of range for size {n}",
            b.zero, b.one
        )));
    }
    for (label, table) in [
        ("mul", &b.mul),
        ("ldiv", &b.ldiv),
        ("rdiv", &b.rdiv),
        ("meet", &b.meet),
        ("join", &b.join),
    ] {
        if table.size() != n {
            return Err(Error::Structural(format!(
                "{label} table size {} does not match carrier size {n}",
                table.size()
            )));
        }
        if !table.entries_below(n) {
            return Err(Error::Structural(format!(
                "{label} table contains entries outside 0..{n}"
            )));
        }
    }
    if let Some(elems) = &b.elements {
        if elems.len() != n {
            return Err(Error::Structural(format!(
                "{} element labels for carrier size {n}",
                elems.len()
            )));
        }
    }
    Ok(())
}

/// Checks the full pseudo BL-algebra axiom set by exhaustive sweep:
/// bounded-lattice laws, monoid laws, residuation against the lattice order,
/// the meet-divisibility law `x(x\(x/\y)) = x/\y = ((x/\y)/x)x`, divisibility
/// `x(x\y) = x/\y = (y/x)x`, and prelinearity
/// `(x\y) \/ (y\x) = 1 = (y/x) \/ (x/y)`.
///
/// Malformed tables are a structural error, distinct from axiom violations.
pub fn check_pseudo_bl(b: &FiniteBl) -> Result<AxiomReport> {
    check_pseudo_bl_with(b, 1)
}

/// As [`check_pseudo_bl`], collecting up to `witness_limit` witnesses per
/// axiom (0 = all of them).
pub fn check_pseudo_bl_with(b: &FiniteBl, witness_limit: usize) -> Result<AxiomReport> {
    structural_check(b)?;
    let n = b.size();
    let mut report = ReportBuilder::new(witness_limit);

    let meet = |x: usize, y: usize| b.meet.get(x, y);
    let join = |x: usize, y: usize| b.join.get(x, y);
    let mul = |x: usize, y: usize| b.mul.get(x, y);
    let ldiv = |x: usize, y: usize| b.ldiv.get(x, y);
    let rdiv = |x: usize, y: usize| b.rdiv.get(x, y);
    let leq = |x: usize, y: usize| meet(x, y) == x;

    'lattice: for x in 0..n {
        if meet(x, b.one) != x
            || join(x, b.zero) != x
            || meet(x, b.zero) != b.zero
            || join(x, b.one) != b.one
            || meet(x, x) != x
            || join(x, x) != x
        {
            report.record("bounded-lattice", &[x]);
            if report.saturated("bounded-lattice") {
                break 'lattice;
            }
        }
        for y in 0..n {
            if meet(x, y) != meet(y, x)
                || join(x, y) != join(y, x)
                || meet(x, join(x, y)) != x
                || join(x, meet(x, y)) != x
            {
                report.record("bounded-lattice", &[x, y]);
                if report.saturated("bounded-lattice") {
                    break 'lattice;
                }
            }
            for z in 0..n {
                if meet(meet(x, y), z) != meet(x, meet(y, z))
                    || join(join(x, y), z) != join(x, join(y, z))
                {
                    report.record("bounded-lattice", &[x, y, z]);
                    if report.saturated("bounded-lattice") {
                        break 'lattice;
                    }
                }
            }
        }
    }

    'monoid: for x in 0..n {
        if mul(x, b.one) != x || mul(b.one, x) != x {
            report.record("monoid", &[x]);
            if report.saturated("monoid") {
                break 'monoid;
            }
        }
        for y in 0..n {
            for z in 0..n {
                if mul(mul(x, y), z) != mul(x, mul(y, z)) {
                    report.record("monoid", &[x, y, z]);
                    if report.saturated("monoid") {
                        break 'monoid;
                    }
                }
            }
        }
    }

    'residuation: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let prod_le = leq(mul(x, y), z);
                if prod_le != leq(y, ldiv(x, z)) || prod_le != leq(x, rdiv(z, y)) {
                    report.record("residuation", &[x, y, z]);
                    if report.saturated("residuation") {
                        break 'residuation;
                    }
                }
            }
        }
    }

    'meet_div: for x in 0..n {
        for y in 0..n {
            let m = meet(x, y);
            if mul(x, ldiv(x, m)) != m || mul(rdiv(m, x), x) != m {
                report.record("meet-divisibility", &[x, y]);
                if report.saturated("meet-divisibility") {
                    break 'meet_div;
                }
            }
        }
    }

    'divisibility: for x in 0..n {
        for y in 0..n {
            let m = meet(x, y);
            if mul(x, ldiv(x, y)) != m || mul(rdiv(y, x), x) != m {
                report.record("divisibility", &[x, y]);
                if report.saturated("divisibility") {
                    break 'divisibility;
                }
            }
        }
    }

    'prelinearity: for x in 0..n {
        for y in 0..n {
            if join(ldiv(x, y), ldiv(y, x)) != b.one || join(rdiv(y, x), rdiv(x, y)) != b.one {
                report.record("prelinearity", &[x, y]);
                if report.saturated("prelinearity") {
                    break 'prelinearity;
                }
            }
        }
    }

    Ok(report.finish())
}

/// First pair `(x, y)` in canonical order with `x*y != y*x`, if any.
pub fn find_noncommutative_witness(b: &FiniteBl) -> Option<(usize, usize)> {
    let n = b.size();
    for x in 0..n {
        for y in 0..n {
            if b.mul.get(x, y) != b.mul.get(y, x) {
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hoop::{godel_chain, lukasiewicz_chain, trivial_hoop};
    use crate::kite::{build_kite, KiteElement, KiteSpec};

    fn six_element_kite() -> FiniteBl {
        let h = godel_chain(2).unwrap();
        let s = KiteSpec::new(2, 1, vec![0], vec![1]).unwrap();
        build_kite(&h, &s).unwrap()
    }

    #[test]
    fn two_element_boolean_algebra_passes() {
        let b = build_kite(
            &trivial_hoop(),
            &KiteSpec::new(0, 0, vec![], vec![]).unwrap(),
        )
        .unwrap();
        assert!(check_pseudo_bl(&b).unwrap().passed());
    }

    #[test]
    fn kites_with_empty_j_pass_for_every_catalog_hoop() {
        for h in [
            godel_chain(2).unwrap(),
            godel_chain(3).unwrap(),
            lukasiewicz_chain(3).unwrap(),
        ] {
            for i_size in 0..=2 {
                if i_size == 0 {
                    continue;
                }
                let s = KiteSpec::new(i_size, 0, vec![], vec![]).unwrap();
                let b = build_kite(&h, &s).unwrap();
                let report = check_pseudo_bl(&b).unwrap();
                assert!(report.passed(), "{:?}: {:?}", b.name, report.violations);
            }
        }
    }

    /// The six-element kite over the two-element chain is residuated and
    /// prelinear but NOT divisible: with x = U<t,1> and y = L<t> the residual
    /// x\y is L<t*t> = L<t>, yet x*(x\y) = L<(t*t)/t> = L<1> = 0 < y = x/\y.
    /// Divisibility would need (f*a)/a = f, which no finite non-trivial hoop
    /// satisfies (multiplication by a < 1 maps into the down-set of a, so it
    /// cannot be injective).
    #[test]
    fn six_element_kite_fails_exactly_the_divisibility_axioms() {
        let b = six_element_kite();
        let report = check_pseudo_bl(&b).unwrap();
        assert!(!report.passed());
        let mut axioms = report.axioms();
        axioms.sort();
        axioms.dedup();
        assert_eq!(axioms, vec!["divisibility", "meet-divisibility"]);
    }

    #[test]
    fn every_single_mul_mutation_of_a_passing_algebra_is_caught() {
        let h = godel_chain(2).unwrap();
        let s = KiteSpec::new(2, 0, vec![], vec![]).unwrap();
        let b = build_kite(&h, &s).unwrap();
        assert!(check_pseudo_bl(&b).unwrap().passed());
        for a in 0..b.size() {
            for c in 0..b.size() {
                for v in 0..b.size() {
                    if v == b.mul.get(a, c) {
                        continue;
                    }
                    let mut mutant = b.clone();
                    mutant.mul.set(a, c, v);
                    assert!(
                        !check_pseudo_bl(&mutant).unwrap().passed(),
                        "mutation at ({a},{c}) -> {v} went unnoticed"
                    );
                }
            }
        }
    }

    #[test]
    fn noncommutativity_witness_on_the_six_element_kite() {
        let b = six_element_kite();
        let (x, y) = find_noncommutative_witness(&b).unwrap();
        let elems = b.elements.as_ref().unwrap();
        let pair: std::collections::BTreeSet<&KiteElement> = [&elems[x], &elems[y]].into();
        let expected: std::collections::BTreeSet<KiteElement> = [
            KiteElement::lower(vec![0]),
            KiteElement::upper(vec![0, 1]),
        ]
        .into();
        assert_eq!(pair, expected.iter().collect());
    }

    #[test]
    fn equal_maps_give_commutative_kites_over_commutative_hoops() {
        let h = godel_chain(2).unwrap();
        let s = KiteSpec::new(2, 2, vec![1, 0], vec![1, 0]).unwrap();
        let b = build_kite(&h, &s).unwrap();
        assert_eq!(find_noncommutative_witness(&b), None);

        let ba = build_kite(
            &trivial_hoop(),
            &KiteSpec::new(0, 0, vec![], vec![]).unwrap(),
        )
        .unwrap();
        assert_eq!(find_noncommutative_witness(&ba), None);
    }

    #[test]
    fn structural_problems_are_not_axiom_violations() {
        let mut b = six_element_kite();
        b.zero = 99;
        assert!(matches!(
            check_pseudo_bl(&b),
            Err(crate::error::Error::Structural(_))
        ));
    }
}
