//! The kite construction: from a finite basic pseudo hoop `A` and injections
//! `lambda, rho: J -> I`, a bounded two-part algebra on `(A-bar)^J (+) A^I`.
//!
//! The lower part is a mirrored copy of `A^J` (order reversed), the upper
//! part is `A^I` ordered coordinatewise, and every lower element sits below
//! every upper element. `0` is the lower all-unit tuple, `1` the upper one.

use std::collections::BTreeSet;

use crate::alg::Algebra;
use crate::error::{Error, Result};
use crate::hoop::{check_basic, check_pseudo_hoop, FiniteHoop};
use crate::table::{OpTable, Relation};

/// Hard cap on kite carrier size; five dense tables are materialized.
pub const KITE_SIZE_LIMIT: usize = 4096;

/// Index sets `I`, `J` (as sizes) together with the injections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KiteSpec {
    i_size: usize,
    j_size: usize,
    lambda: Vec<usize>,
    rho: Vec<usize>,
}

impl KiteSpec {
    pub fn new(i_size: usize, j_size: usize, lambda: Vec<usize>, rho: Vec<usize>) -> Result<Self> {
        if j_size > i_size {
            return Err(Error::NotInjective(format!(
                "no injection from a {j_size}-element set into an {i_size}-element set"
            )));
        }
        for (label, map) in [("lambda", &lambda), ("rho", &rho)] {
            if map.len() != j_size {
                return Err(Error::Structural(format!(
                    "{label} has {} entries, expected {j_size}",
                    map.len()
                )));
            }
            if map.iter().any(|&i| i >= i_size) {
                return Err(Error::Structural(format!(
                    "{label} contains an index outside 0..{i_size}"
                )));
            }
            let distinct: BTreeSet<_> = map.iter().collect();
            if distinct.len() != map.len() {
                return Err(Error::NotInjective(format!("{label} repeats a value")));
            }
        }
        Ok(KiteSpec {
            i_size,
            j_size,
            lambda,
            rho,
        })
    }

    pub fn i_size(&self) -> usize {
        self.i_size
    }

    pub fn j_size(&self) -> usize {
        self.j_size
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn rho(&self) -> &[usize] {
        &self.rho
    }

    /// `lambda^{-1}` as an `I`-indexed vector of optional `J`-indices.
    pub fn lambda_preimage(&self) -> Vec<Option<usize>> {
        let mut inv = vec![None; self.i_size];
        for (j, &i) in self.lambda.iter().enumerate() {
            inv[i] = Some(j);
        }
        inv
    }

    /// `rho^{-1}` as an `I`-indexed vector of optional `J`-indices.
    pub fn rho_preimage(&self) -> Vec<Option<usize>> {
        let mut inv = vec![None; self.i_size];
        for (j, &i) in self.rho.iter().enumerate() {
            inv[i] = Some(j);
        }
        inv
    }

    pub fn lambda_image(&self) -> BTreeSet<usize> {
        self.lambda.iter().copied().collect()
    }

    pub fn rho_image(&self) -> BTreeSet<usize> {
        self.rho.iter().copied().collect()
    }

    /// `lambda(J) = rho(J)` as sets: the structural test for goodness.
    pub fn images_equal(&self) -> bool {
        self.lambda_image() == self.rho_image()
    }

    /// `lambda(J) = I = rho(J)`: the structural test for the double
    /// negations being the identity.
    pub fn images_cover(&self) -> bool {
        self.lambda_image().len() == self.i_size && self.rho_image().len() == self.i_size
    }

    /// Short deterministic label, used in generated algebra names.
    pub fn label(&self) -> String {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "I={},J={},l=[{}],r=[{}]",
            self.i_size,
            self.j_size,
            join(&self.lambda),
            join(&self.rho)
        )
    }
}

/// Which half of the carrier an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum KitePart {
    Lower,
    Upper,
}

/// A kite element: a `J`-tuple over the mirrored copy (`Lower`) or an
/// `I`-tuple (`Upper`), with coordinates in the hoop carrier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct KiteElement {
    pub part: KitePart,
    pub coords: Vec<usize>,
}

impl KiteElement {
    pub fn lower(coords: Vec<usize>) -> Self {
        KiteElement {
            part: KitePart::Lower,
            coords,
        }
    }

    pub fn upper(coords: Vec<usize>) -> Self {
        KiteElement {
            part: KitePart::Upper,
            coords,
        }
    }

    /// Index literal such as `U#0,1` or `L#` (empty tuple).
    pub fn index_literal(&self) -> String {
        let tag = match self.part {
            KitePart::Lower => "L",
            KitePart::Upper => "U",
        };
        let coords = self
            .coords
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("{tag}#{coords}")
    }

    /// Name literal such as `L:t` or `U:t,1`, using hoop element names.
    pub fn name_literal(&self, hoop: &FiniteHoop) -> String {
        let tag = match self.part {
            KitePart::Lower => "L",
            KitePart::Upper => "U",
        };
        let coords = self
            .coords
            .iter()
            .map(|&c| hoop.element_name(c))
            .collect::<Vec<_>>()
            .join(",");
        format!("{tag}:{coords}")
    }
}

fn tuple_of_rank(mut rank: usize, len: usize, base: usize) -> Vec<usize> {
    let mut coords = vec![0; len];
    for slot in (0..len).rev() {
        coords[slot] = rank % base;
        rank /= base;
    }
    coords
}

fn rank_of_tuple(coords: &[usize], base: usize) -> usize {
    coords.iter().fold(0, |acc, &c| acc * base + c)
}

/// Evaluates the kite operations element-by-element over `(hoop, spec)`,
/// without materializing tables. [`build_kite`] uses this to fill tables; it
/// is public so callers can evaluate single products on large kites.
pub struct Kite<'a> {
    hoop: &'a FiniteHoop,
    spec: &'a KiteSpec,
    lambda_inv: Vec<Option<usize>>,
    rho_inv: Vec<Option<usize>>,
    lower_count: usize,
    upper_count: usize,
}

impl<'a> Kite<'a> {
    pub fn new(hoop: &'a FiniteHoop, spec: &'a KiteSpec) -> Result<Self> {
        let n = hoop.size();
        let lower_count = n
            .checked_pow(spec.j_size as u32)
            .ok_or(Error::TooLarge {
                size: usize::MAX,
                limit: KITE_SIZE_LIMIT,
            })?;
        let upper_count = n
            .checked_pow(spec.i_size as u32)
            .ok_or(Error::TooLarge {
                size: usize::MAX,
                limit: KITE_SIZE_LIMIT,
            })?;
        let total = lower_count
            .checked_add(upper_count)
            .ok_or(Error::TooLarge {
                size: usize::MAX,
                limit: KITE_SIZE_LIMIT,
            })?;
        if total > KITE_SIZE_LIMIT {
            return Err(Error::TooLarge {
                size: total,
                limit: KITE_SIZE_LIMIT,
            });
        }
        Ok(Kite {
            hoop,
            spec,
            lambda_inv: spec.lambda_preimage(),
            rho_inv: spec.rho_preimage(),
            lower_count,
            upper_count,
        })
    }

    /// Carrier size: `|A|^|J| + |A|^|I|`.
    pub fn size(&self) -> usize {
        self.lower_count + self.upper_count
    }

    pub fn hoop(&self) -> &FiniteHoop {
        self.hoop
    }

    pub fn spec(&self) -> &KiteSpec {
        self.spec
    }

    /// Canonical enumeration: all lower tuples in lexicographic coordinate
    /// order, then all upper tuples likewise.
    pub fn element(&self, index: usize) -> KiteElement {
        let n = self.hoop.size();
        if index < self.lower_count {
            KiteElement::lower(tuple_of_rank(index, self.spec.j_size, n))
        } else {
            KiteElement::upper(tuple_of_rank(index - self.lower_count, self.spec.i_size, n))
        }
    }

    pub fn index(&self, element: &KiteElement) -> usize {
        let n = self.hoop.size();
        match element.part {
            KitePart::Lower => rank_of_tuple(&element.coords, n),
            KitePart::Upper => self.lower_count + rank_of_tuple(&element.coords, n),
        }
    }

    pub fn zero(&self) -> KiteElement {
        KiteElement::lower(vec![self.hoop.unit(); self.spec.j_size])
    }

    pub fn one(&self) -> KiteElement {
        KiteElement::upper(vec![self.hoop.unit(); self.spec.i_size])
    }

    /// Kite multiplication, by the four part cases:
    /// - `U<a> * U<b>`: coordinatewise product;
    /// - `U<a> * L<f>`: lower tuple `f_j / a_lambda(j)`;
    /// - `L<f> * U<a>`: lower tuple `a_rho(j) \ f_j`;
    /// - `L * L = 0`.
    pub fn mul(&self, x: &KiteElement, y: &KiteElement) -> KiteElement {
        let h = self.hoop;
        match (x.part, y.part) {
            (KitePart::Upper, KitePart::Upper) => KiteElement::upper(
                x.coords
                    .iter()
                    .zip(&y.coords)
                    .map(|(&a, &b)| h.mul(a, b))
                    .collect(),
            ),
            (KitePart::Upper, KitePart::Lower) => KiteElement::lower(
                (0..self.spec.j_size)
                    .map(|j| h.rdiv(y.coords[j], x.coords[self.spec.lambda[j]]))
                    .collect(),
            ),
            (KitePart::Lower, KitePart::Upper) => KiteElement::lower(
                (0..self.spec.j_size)
                    .map(|j| h.ldiv(y.coords[self.spec.rho[j]], x.coords[j]))
                    .collect(),
            ),
            (KitePart::Lower, KitePart::Lower) => self.zero(),
        }
    }

    /// Left division `x \ y`, by the four part cases:
    /// - `U<a> \ U<b>`: coordinatewise `a_i \ b_i`;
    /// - `U<a> \ L<f>`: lower tuple `f_j * a_lambda(j)`;
    /// - `L<f> \ L<g>`: upper tuple `f_rho^-1(i) / g_rho^-1(i)` where
    ///   defined, `1` elsewhere;
    /// - `L \ U = 1`.
    pub fn ldiv(&self, x: &KiteElement, y: &KiteElement) -> KiteElement {
        let h = self.hoop;
        match (x.part, y.part) {
            (KitePart::Upper, KitePart::Upper) => KiteElement::upper(
                x.coords
                    .iter()
                    .zip(&y.coords)
                    .map(|(&a, &b)| h.ldiv(a, b))
                    .collect(),
            ),
            (KitePart::Upper, KitePart::Lower) => KiteElement::lower(
                (0..self.spec.j_size)
                    .map(|j| h.mul(y.coords[j], x.coords[self.spec.lambda[j]]))
                    .collect(),
            ),
            (KitePart::Lower, KitePart::Lower) => KiteElement::upper(
                (0..self.spec.i_size)
                    .map(|i| match self.rho_inv[i] {
                        Some(j) => h.rdiv(x.coords[j], y.coords[j]),
                        None => h.unit(),
                    })
                    .collect(),
            ),
            (KitePart::Lower, KitePart::Upper) => self.one(),
        }
    }

    /// Right division `x / y`, by the four part cases:
    /// - `U<b> / U<a>`: coordinatewise `b_i / a_i`;
    /// - `L<f> / U<a>`: lower tuple `a_rho(j) * f_j`;
    /// - `L<g> / L<f>`: upper tuple `g_lambda^-1(i) \ f_lambda^-1(i)` where
    ///   defined, `1` elsewhere;
    /// - `U / L = 1`.
    pub fn rdiv(&self, x: &KiteElement, y: &KiteElement) -> KiteElement {
        let h = self.hoop;
        match (x.part, y.part) {
            (KitePart::Upper, KitePart::Upper) => KiteElement::upper(
                x.coords
                    .iter()
                    .zip(&y.coords)
                    .map(|(&b, &a)| h.rdiv(b, a))
                    .collect(),
            ),
            (KitePart::Lower, KitePart::Upper) => KiteElement::lower(
                (0..self.spec.j_size)
                    .map(|j| h.mul(y.coords[self.spec.rho[j]], x.coords[j]))
                    .collect(),
            ),
            (KitePart::Lower, KitePart::Lower) => KiteElement::upper(
                (0..self.spec.i_size)
                    .map(|i| match self.lambda_inv[i] {
                        Some(j) => h.ldiv(x.coords[j], y.coords[j]),
                        None => h.unit(),
                    })
                    .collect(),
            ),
            (KitePart::Upper, KitePart::Lower) => self.one(),
        }
    }

    /// The kite order: coordinatewise on the upper part, reversed
    /// coordinatewise on the lower part, and lower below upper.
    pub fn leq(&self, x: &KiteElement, y: &KiteElement) -> bool {
        let h = self.hoop;
        match (x.part, y.part) {
            (KitePart::Upper, KitePart::Upper) => x
                .coords
                .iter()
                .zip(&y.coords)
                .all(|(&a, &b)| h.leq(a, b)),
            (KitePart::Lower, KitePart::Lower) => y
                .coords
                .iter()
                .zip(&x.coords)
                .all(|(&g, &f)| h.leq(g, f)),
            (KitePart::Lower, KitePart::Upper) => true,
            (KitePart::Upper, KitePart::Lower) => false,
        }
    }

    /// The pair `(x^-, x~) = (0 / x, x \ 0)`.
    pub fn negations(&self, x: &KiteElement) -> (KiteElement, KiteElement) {
        let zero = self.zero();
        (self.rdiv(&zero, x), self.ldiv(x, &zero))
    }
}

/// Provenance of a derived algebra (currently: quotients).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub parent: String,
    pub filter: Vec<usize>,
}

/// A finite bounded residuated structure given by full tables: the output of
/// [`build_kite`], of quotients, or loaded from a file.
///
/// Nothing is assumed about the tables; [`crate::verify::check_pseudo_bl`]
/// decides whether they satisfy the pseudo BL-algebra axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBl {
    pub name: Option<String>,
    pub zero: usize,
    pub one: usize,
    pub mul: OpTable,
    pub ldiv: OpTable,
    pub rdiv: OpTable,
    pub meet: OpTable,
    pub join: OpTable,
    /// Kite element labels in canonical order, when the algebra is a kite.
    pub elements: Option<Vec<KiteElement>>,
    pub provenance: Option<Provenance>,
}

impl FiniteBl {
    pub fn size(&self) -> usize {
        self.mul.size()
    }

    pub fn element_label(&self, index: usize) -> String {
        match &self.elements {
            Some(elems) => elems[index].index_literal(),
            None => format!("#{index}"),
        }
    }

    /// Indices of the upper block, when this algebra is a kite.
    pub fn upper_block(&self) -> Option<Vec<usize>> {
        self.elements.as_ref().map(|elems| {
            elems
                .iter()
                .enumerate()
                .filter(|(_, e)| e.part == KitePart::Upper)
                .map(|(i, _)| i)
                .collect()
        })
    }
}

impl Algebra for FiniteBl {
    fn size(&self) -> usize {
        self.mul.size()
    }

    fn unit(&self) -> usize {
        self.one
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

    fn lattice_tables(&self) -> Option<(&OpTable, &OpTable)> {
        Some((&self.meet, &self.join))
    }

    fn bottom(&self) -> Option<usize> {
        Some(self.zero)
    }
}

/// Builds the kite over a verified basic pseudo hoop, materializing all five
/// operation tables. The hoop is checked first and rejected if it fails the
/// hoop axioms or basicness.
///
/// # Example
///
/// ```
/// use kitebl_core::{build_kite, godel_chain, is_good, KiteSpec};
///
/// let hoop = godel_chain(2)?;
/// let spec = KiteSpec::new(2, 1, vec![0], vec![1])?;
/// let kite = build_kite(&hoop, &spec)?;
///
/// // 2^1 lower elements plus 2^2 upper elements
/// assert_eq!(kite.size(), 6);
/// // the two negations do not commute on this one
/// assert!(!is_good(&kite).0);
/// # Ok::<(), kitebl_core::Error>(())
/// ```
pub fn build_kite(hoop: &FiniteHoop, spec: &KiteSpec) -> Result<FiniteBl> {
    let report = check_pseudo_hoop(hoop)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::NotAHoop {
            axiom: v.axiom.clone(),
            witness: v.witness.clone(),
        });
    }
    if !check_basic(hoop) {
        return Err(Error::NotBasic);
    }
    build_kite_unchecked(hoop, spec)
}

/// As [`build_kite`] but skipping the hoop-axiom and basicness checks, for
/// experiments with arbitrary tables. Construction still fails if the
/// resulting order is not a lattice.
pub fn build_kite_unchecked(hoop: &FiniteHoop, spec: &KiteSpec) -> Result<FiniteBl> {
    let kite = Kite::new(hoop, spec)?;
    let n = kite.size();
    let elements: Vec<KiteElement> = (0..n).map(|i| kite.element(i)).collect();

    let order = Relation::from_fn(n, |a, b| kite.leq(&elements[a], &elements[b]));
    let mut meet = OpTable::from_fn(n, |_, _| 0);
    let mut join = OpTable::from_fn(n, |_, _| 0);
    for a in 0..n {
        for b in 0..n {
            let m = order.glb(a, b).ok_or(Error::NotALattice {
                kind: "meet",
                a,
                b,
            })?;
            let j = order.lub(a, b).ok_or(Error::NotALattice {
                kind: "join",
                a,
                b,
            })?;
            meet.set(a, b, m);
            join.set(a, b, j);
        }
    }

    let mul = OpTable::from_fn(n, |a, b| kite.index(&kite.mul(&elements[a], &elements[b])));
    let ldiv = OpTable::from_fn(n, |a, b| kite.index(&kite.ldiv(&elements[a], &elements[b])));
    let rdiv = OpTable::from_fn(n, |a, b| kite.index(&kite.rdiv(&elements[a], &elements[b])));

    let name = format!(
        "kite[{}]({})",
        spec.label(),
        hoop.name().unwrap_or("hoop")
    );
    Ok(FiniteBl {
        name: Some(name),
        zero: kite.index(&kite.zero()),
        one: kite.index(&kite.one()),
        mul,
        ldiv,
        rdiv,
        meet,
        join,
        elements: Some(elements),
        provenance: None,
    })
}

/// The pair `(x^-, x~) = (0 / x, x \ 0)` on a table-backed algebra.
pub fn negations(b: &FiniteBl, x: usize) -> (usize, usize) {
    (b.rdiv.get(b.zero, x), b.ldiv.get(x, b.zero))
}

/// Semantic goodness: `x^-~ = x~^-` for every element. Returns the first
/// failing element otherwise.
pub fn is_good(b: &FiniteBl) -> (bool, Option<usize>) {
    for x in 0..b.size() {
        let (neg, til) = negations(b, x);
        let neg_til = b.ldiv.get(neg, b.zero);
        let til_neg = b.rdiv.get(b.zero, til);
        if neg_til != til_neg {
            return (false, Some(x));
        }
    }
    (true, None)
}

/// Semantic test for `x^-~ = x = x~^-` everywhere. Returns the first failing
/// element otherwise.
pub fn is_pseudo_mv(b: &FiniteBl) -> (bool, Option<usize>) {
    for x in 0..b.size() {
        let (neg, til) = negations(b, x);
        let neg_til = b.ldiv.get(neg, b.zero);
        let til_neg = b.rdiv.get(b.zero, til);
        if neg_til != x || til_neg != x {
            return (false, Some(x));
        }
    }
    (true, None)
}

/// All injections from a `j_size`-element set into `0..i_size`, in
/// lexicographic order. Enumeration helper for sweeps and tests.
pub fn injections(i_size: usize, j_size: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    if j_size > i_size {
        return Vec::new();
    }
    (0..i_size).permutations(j_size).collect()
}
