//! Finite pseudo hoops: operation tables, exhaustive axiom checking, and the
//! catalog of stock examples (Gödel chains, Łukasiewicz chains, products,
//! ordinal sums).
//!
//! A pseudo hoop is a residuated integral monoid with two divisions. On a
//! finite carrier everything is decidable by sweeping tuples, and the sweeps
//! double as the independent oracle for every construction in this crate.

use crate::alg::Algebra;
use crate::error::{Error, Result};
use crate::table::{OpTable, Relation};

/// A finite pseudo hoop presented by operation tables over carrier `0..size`.
///
/// `mul[a][b]` is the product, `ldiv[a][b]` is `a \ b`, and `rdiv[a][b]` is
/// `a / b`. The derived order is `a <= b` iff `a \ b = unit`; a valid hoop
/// has the unit as top element and a meet for every pair.
///
/// Construction performs no validation: a value of this type is a candidate
/// until [`check_pseudo_hoop`] accepts it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteHoop {
    name: Option<String>,
    unit: usize,
    mul: OpTable,
    ldiv: OpTable,
    rdiv: OpTable,
}

impl FiniteHoop {
    pub fn new(
        name: Option<String>,
        unit: usize,
        mul: OpTable,
        ldiv: OpTable,
        rdiv: OpTable,
    ) -> Self {
        FiniteHoop {
            name,
            unit,
            mul,
            ldiv,
            rdiv,
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    pub fn mul_table(&self) -> &OpTable {
        &self.mul
    }

    pub fn ldiv_table(&self) -> &OpTable {
        &self.ldiv
    }

    pub fn rdiv_table(&self) -> &OpTable {
        &self.rdiv
    }

    pub fn mul_table_mut(&mut self) -> &mut OpTable {
        &mut self.mul
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    /// Display label for a carrier element: the unit prints as `1`, the
    /// non-unit of a two-element hoop as `t`, anything else as `e<i>`.
    pub fn element_name(&self, index: usize) -> String {
        if index == self.unit {
            "1".to_owned()
        } else if self.size() == 2 {
            "t".to_owned()
        } else {
            format!("e{index}")
        }
    }

    /// Inverse of [`FiniteHoop::element_name`], also accepting bare indices.
    pub fn parse_element(&self, text: &str) -> Result<usize> {
        let fail = || Error::Parse(format!("unknown element name {text:?}"));
        if text == "1" {
            return Ok(self.unit);
        }
        if text == "t" && self.size() == 2 {
            return Ok(1 - self.unit);
        }
        let digits = text.strip_prefix('e').unwrap_or(text);
        let index: usize = digits.parse().map_err(|_| fail())?;
        if index < self.size() {
            Ok(index)
        } else {
            Err(fail())
        }
    }
}

impl Algebra for FiniteHoop {
    fn size(&self) -> usize {
        self.mul.size()
    }

    fn unit(&self) -> usize {
        self.unit
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    fn ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv.get(a, b)
    }

    fn rdiv(&self, a: usize, b: usize) -> usize {
        self.rdiv.get(a, b)
    }
}

/// One axiom violation: the axiom label and the first witness tuple found in
/// canonical sweep order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
}

/// Outcome of an exhaustive axiom sweep. `passed` iff `violations` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn axioms(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.axiom.as_str()).collect()
    }
}

/// Collects at most `limit` witnesses per axiom label (0 = unlimited).
pub(crate) struct ReportBuilder {
    limit: usize,
    violations: Vec<Violation>,
}

impl ReportBuilder {
    pub(crate) fn new(limit: usize) -> Self {
        ReportBuilder {
            limit,
            violations: Vec::new(),
        }
    }

    pub(crate) fn record(&mut self, axiom: &str, witness: &[usize]) {
        if self.limit > 0 {
            let seen = self
                .violations
                .iter()
                .filter(|v| v.axiom == axiom)
                .count();
            if seen >= self.limit {
                return;
            }
        }
        self.violations.push(Violation {
            axiom: axiom.to_owned(),
            witness: witness.to_vec(),
        });
    }

    pub(crate) fn saturated(&self, axiom: &str) -> bool {
        self.limit > 0
            && self
                .violations
                .iter()
                .filter(|v| v.axiom == axiom)
                .count()
                >= self.limit
    }

    pub(crate) fn finish(self) -> AxiomReport {
        AxiomReport {
            violations: self.violations,
        }
    }
}

fn structural_check(h: &FiniteHoop) -> Result<()> {
    let n = h.size();
    if n == 0 {
        return Err(Error::Structural("carrier is empty".into()));
    }
    if h.unit >= n {
        return Err(Error::Structural(format!(
            "unit index {} out of range for size {n}",
            h.unit
        )));
    }
    for (label, table) in [("mul", &h.mul), ("ldiv", &h.ldiv), ("rdiv", &h.rdiv)] {
        if table.size() != n {
            return Err(Error::Structural(format!(
                "{label} table is {}x{} but size is {n}",
                table.size(),
                table.size()
            )));
        }
        if !table.entries_below(n) {
            return Err(Error::Structural(format!(
                "{label} table contains entries outside 0..{n}"
            )));
        }
    }
    Ok(())
}

/// Verifies every pseudo hoop axiom by exhaustive sweep: unit neutrality,
/// self-division, both division/product compatibilities, the four meet
/// expressions, residuation, and well-formedness of the derived order
/// (including that the meet expression really is the greatest lower bound).
///
/// Malformed tables are a structural error; axiom failures are reported with
/// their first witness per axiom.
///
/// # Example
///
/// ```
/// use kitebl_core::{check_pseudo_hoop, lukasiewicz_chain};
///
/// let chain = lukasiewicz_chain(4)?;
/// assert!(check_pseudo_hoop(&chain)?.passed());
/// # Ok::<(), kitebl_core::Error>(())
/// ```
pub fn check_pseudo_hoop(h: &FiniteHoop) -> Result<AxiomReport> {
    check_pseudo_hoop_with(h, 1)
}

/// As [`check_pseudo_hoop`], collecting up to `witness_limit` witnesses per
/// axiom (0 = all of them).
pub fn check_pseudo_hoop_with(h: &FiniteHoop, witness_limit: usize) -> Result<AxiomReport> {
    structural_check(h)?;
    let n = h.size();
    let u = h.unit;
    let mut report = ReportBuilder::new(witness_limit);

    for a in 0..n {
        if h.mul(a, u) != a || h.mul(u, a) != a {
            report.record("neutrality", &[a]);
        }
        if h.ldiv(a, a) != u || h.rdiv(a, a) != u {
            report.record("self-division", &[a]);
        }
    }

    'rdiv_product: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if h.rdiv(c, h.mul(a, b)) != h.rdiv(h.rdiv(c, b), a) {
                    report.record("rdiv-product", &[a, b, c]);
                    if report.saturated("rdiv-product") {
                        break 'rdiv_product;
                    }
                }
            }
        }
    }

    'ldiv_product: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if h.ldiv(h.mul(a, b), c) != h.ldiv(b, h.ldiv(a, c)) {
                    report.record("ldiv-product", &[a, b, c]);
                    if report.saturated("ldiv-product") {
                        break 'ldiv_product;
                    }
                }
            }
        }
    }

    for a in 0..n {
        for b in 0..n {
            let m1 = h.mul(h.rdiv(b, a), a);
            let m2 = h.mul(h.rdiv(a, b), b);
            let m3 = h.mul(a, h.ldiv(a, b));
            let m4 = h.mul(b, h.ldiv(b, a));
            if !(m1 == m2 && m2 == m3 && m3 == m4) {
                report.record("meet-forms", &[a, b]);
            }
        }
    }

    'residuation: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let prod_le = h.leq(h.mul(x, y), z);
                let left = h.leq(y, h.ldiv(x, z));
                let right = h.leq(x, h.rdiv(z, y));
                if prod_le != left || prod_le != right {
                    report.record("residuation", &[x, y, z]);
                    if report.saturated("residuation") {
                        break 'residuation;
                    }
                }
            }
        }
    }

    for a in 0..n {
        if !h.leq(a, u) {
            report.record("partial-order", &[a]);
        }
        for b in 0..n {
            if (h.ldiv(a, b) == u) != (h.rdiv(b, a) == u) {
                report.record("partial-order", &[a, b]);
            }
            if a != b && h.leq(a, b) && h.leq(b, a) {
                report.record("partial-order", &[a, b]);
            }
            for c in 0..n {
                if h.leq(a, b) && h.leq(b, c) && !h.leq(a, c) {
                    report.record("partial-order", &[a, b, c]);
                }
            }
        }
    }

    'meet_glb: for a in 0..n {
        for b in 0..n {
            let m = h.mul(h.rdiv(b, a), a);
            if !h.leq(m, a) || !h.leq(m, b) {
                report.record("meet-glb", &[a, b]);
                if report.saturated("meet-glb") {
                    break 'meet_glb;
                }
                continue;
            }
            for z in 0..n {
                if h.leq(z, a) && h.leq(z, b) && !h.leq(z, m) {
                    report.record("meet-glb", &[a, b, z]);
                    if report.saturated("meet-glb") {
                        break 'meet_glb;
                    }
                }
            }
        }
    }

    Ok(report.finish())
}

/// The derived order `a <= b` iff `a \ b = unit` as an explicit relation.
pub fn derive_order(h: &FiniteHoop) -> Relation {
    Relation::from_fn(h.size(), |a, b| h.leq(a, b))
}

/// The meet `a /\ b`, computed as `(b / a) * a`.
pub fn meet(h: &FiniteHoop, a: usize, b: usize) -> usize {
    h.mul(h.rdiv(b, a), a)
}

/// Both basicness inequalities, swept over all triples:
/// `c/(b/a) <= c/(c/(a/b))` and `(a\b)\c <= ((b\a)\c)\c`.
pub fn check_basic(h: &FiniteHoop) -> bool {
    let n = h.size();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !h.leq(h.rdiv(c, h.rdiv(b, a)), h.rdiv(c, h.rdiv(c, h.rdiv(a, b)))) {
                    return false;
                }
                if !h.leq(
                    h.ldiv(h.ldiv(a, b), c),
                    h.ldiv(h.ldiv(h.ldiv(b, a), c), c),
                ) {
                    return false;
                }
            }
        }
    }
    true
}

/// The two Wajsberg identities, swept over all pairs:
/// `(b/a)\b = (a/b)\a` and `b/(a\b) = a/(b\a)`.
pub fn check_wajsberg(h: &FiniteHoop) -> bool {
    let n = h.size();
    for a in 0..n {
        for b in 0..n {
            if h.ldiv(h.rdiv(b, a), b) != h.ldiv(h.rdiv(a, b), a) {
                return false;
            }
            if h.rdiv(b, h.ldiv(a, b)) != h.rdiv(a, h.ldiv(b, a)) {
                return false;
            }
        }
    }
    true
}

/// Whether multiplication is commutative. For a valid pseudo hoop this is
/// equivalent to the two divisions agreeing as residuation operations, i.e.
/// `a \ b = b / a` for all pairs; the sweep asserts that equivalence.
pub fn check_commutative(h: &FiniteHoop) -> bool {
    let symmetric = h.mul_table().is_symmetric();
    let divisions_agree = (0..h.size())
        .all(|a| (0..h.size()).all(|b| h.ldiv(a, b) == h.rdiv(b, a)));
    debug_assert_eq!(symmetric, divisions_agree);
    symmetric
}

/// The one-element hoop.
pub fn trivial_hoop() -> FiniteHoop {
    godel_chain(1)
        .map(|mut h| {
            h.set_name(Some("trivial".into()));
            h
        })
        .expect("size 1 is valid")
}

/// The Gödel chain `e_0 < ... < e_{n-1} = 1` with `mul = min` and the Gödel
/// residuum.
pub fn godel_chain(n: usize) -> Result<FiniteHoop> {
    if n == 0 {
        return Err(Error::InvalidSize("chain length must be at least 1".into()));
    }
    let unit = n - 1;
    let mul = OpTable::from_fn(n, |a, b| a.min(b));
    let ldiv = OpTable::from_fn(n, |a, b| if a <= b { unit } else { b });
    let rdiv = OpTable::from_fn(n, |a, b| if b <= a { unit } else { a });
    Ok(FiniteHoop::new(
        Some(format!("godel:{n}")),
        unit,
        mul,
        ldiv,
        rdiv,
    ))
}

/// The Łukasiewicz chain `e_0 < ... < e_{n-1} = 1` with
/// `e_i * e_j = e_max(0, i+j-(n-1))` and residuum `e_min(n-1, n-1-i+j)`.
pub fn lukasiewicz_chain(n: usize) -> Result<FiniteHoop> {
    if n == 0 {
        return Err(Error::InvalidSize("chain length must be at least 1".into()));
    }
    let top = n - 1;
    let mul = OpTable::from_fn(n, |a, b| (a + b).saturating_sub(top));
    let ldiv = OpTable::from_fn(n, |a, b| (top - a + b).min(top));
    let rdiv = OpTable::from_fn(n, |a, b| (top - b + a).min(top));
    Ok(FiniteHoop::new(
        Some(format!("lukasiewicz:{n}")),
        top,
        mul,
        ldiv,
        rdiv,
    ))
}

/// Coordinatewise product on the carrier `h1 x h2`, indexed `a1 * |h2| + a2`.
pub fn direct_product(h1: &FiniteHoop, h2: &FiniteHoop) -> FiniteHoop {
    let (n1, n2) = (h1.size(), h2.size());
    let n = n1 * n2;
    let split = |x: usize| (x / n2, x % n2);
    let table = |f: &dyn Fn(usize, usize, usize, usize) -> usize| {
        OpTable::from_fn(n, |x, y| {
            let ((x1, x2), (y1, y2)) = (split(x), split(y));
            f(x1, x2, y1, y2)
        })
    };
    let mul = table(&|x1, x2, y1, y2| h1.mul(x1, y1) * n2 + h2.mul(x2, y2));
    let ldiv = table(&|x1, x2, y1, y2| h1.ldiv(x1, y1) * n2 + h2.ldiv(x2, y2));
    let rdiv = table(&|x1, x2, y1, y2| h1.rdiv(x1, y1) * n2 + h2.rdiv(x2, y2));
    let name = format!(
        "product:({},{})",
        h1.name().unwrap_or("hoop"),
        h2.name().unwrap_or("hoop")
    );
    FiniteHoop::new(Some(name), h1.unit * n2 + h2.unit, mul, ldiv, rdiv)
}

/// Ordinal sum: `h1` minus its unit sits strictly below all of `h2`, the unit
/// of `h2` becoming the shared unit. Within each part the operations are
/// inherited; across parts, for `x` low and `y` high:
/// `x*y = y*x = x`, `x\y = 1`, `y\x = x`, `x/y = x`, `y/x = 1`.
pub fn ordinal_sum(h1: &FiniteHoop, h2: &FiniteHoop) -> FiniteHoop {
    let low_count = h1.size() - 1;
    let n = low_count + h2.size();
    let unit = low_count + h2.unit;

    // indices 0..low_count are h1's non-unit elements in their original order
    let low_of = |x1: usize| -> usize {
        if x1 > h1.unit {
            x1 - 1
        } else {
            x1
        }
    };
    let h1_of = |x: usize| -> usize {
        if x < h1.unit {
            x
        } else {
            x + 1
        }
    };
    let embed1 = |r: usize| -> usize {
        if r == h1.unit {
            unit
        } else {
            low_of(r)
        }
    };

    let table = |op1: &dyn Fn(usize, usize) -> usize,
                 op2: &dyn Fn(usize, usize) -> usize,
                 low_high: &dyn Fn(usize) -> usize,
                 high_low: &dyn Fn(usize) -> usize| {
        OpTable::from_fn(n, |x, y| {
            let x_low = x < low_count;
            let y_low = y < low_count;
            match (x_low, y_low) {
                (true, true) => embed1(op1(h1_of(x), h1_of(y))),
                (false, false) => low_count + op2(x - low_count, y - low_count),
                (true, false) => low_high(x),
                (false, true) => high_low(y),
            }
        })
    };

    let mul = table(
        &|a, b| h1.mul(a, b),
        &|a, b| h2.mul(a, b),
        &|x| x,
        &|y| y,
    );
    let ldiv = table(
        &|a, b| h1.ldiv(a, b),
        &|a, b| h2.ldiv(a, b),
        &|_| unit,
        &|y| y,
    );
    let rdiv = table(
        &|a, b| h1.rdiv(a, b),
        &|a, b| h2.rdiv(a, b),
        &|x| x,
        &|_| unit,
    );
    let name = format!(
        "osum:({},{})",
        h1.name().unwrap_or("hoop"),
        h2.name().unwrap_or("hoop")
    );
    FiniteHoop::new(Some(name), unit, mul, ldiv, rdiv)
}
