//! Filters, normal filters, congruences, quotients, and subdirect
//! irreducibility for finite table-backed algebras.
//!
//! A filter is an upward-closed, product-closed subset containing the unit;
//! it is normal when `b/a` and `a\b` always land inside or outside it
//! together. Normal filters correspond to congruences via
//! `a ~ b  iff  a\b and b\a both belong to the filter`, with the filter as
//! the class of the unit.

use std::collections::BTreeSet;

use crate::alg::Algebra;
use crate::error::{Error, Result};
use crate::hoop::FiniteHoop;
use crate::kite::{FiniteBl, Provenance};
use crate::table::OpTable;

/// Default carrier-size bound for whole-lattice filter enumeration.
pub const DEFAULT_ENUM_BOUND: usize = 16;

/// A subset of the carrier, kept sorted. Valid filters contain the unit, are
/// upward closed, and are closed under multiplication.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FilterSet {
    members: BTreeSet<usize>,
}

impl FilterSet {
    pub fn from_members(members: impl IntoIterator<Item = usize>) -> Self {
        FilterSet {
            members: members.into_iter().collect(),
        }
    }

    pub fn unit_only<A: Algebra>(alg: &A) -> Self {
        FilterSet::from_members([alg.unit()])
    }

    pub fn whole<A: Algebra>(alg: &A) -> Self {
        FilterSet::from_members(0..alg.size())
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The filter `{1}` induces the identity congruence.
    pub fn is_unit_only(&self) -> bool {
        self.members.len() == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.iter().copied().collect()
    }

    pub fn intersection(&self, other: &FilterSet) -> FilterSet {
        FilterSet {
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }
}

/// Whether `set` is a filter of `alg`.
pub fn is_filter<A: Algebra>(alg: &A, set: &FilterSet) -> bool {
    if !set.contains(alg.unit()) {
        return false;
    }
    for a in set.iter() {
        for b in set.iter() {
            if !set.contains(alg.mul(a, b)) {
                return false;
            }
        }
        for b in 0..alg.size() {
            if alg.leq(a, b) && !set.contains(b) {
                return false;
            }
        }
    }
    true
}

/// Least filter containing `seed`: closes under upward closure and products
/// to a fixpoint.
pub fn filter_closure<A: Algebra>(alg: &A, seed: &[usize]) -> FilterSet {
    let mut members: BTreeSet<usize> = seed.iter().copied().collect();
    members.insert(alg.unit());
    loop {
        let mut next = members.clone();
        for &a in &members {
            for b in 0..alg.size() {
                if alg.leq(a, b) {
                    next.insert(b);
                }
            }
            for &b in &members {
                next.insert(alg.mul(a, b));
            }
        }
        if next.len() == members.len() {
            return FilterSet { members };
        }
        members = next;
    }
}

/// Whether the filter is normal: `b/a` in `F` iff `a\b` in `F`, for all
/// pairs. Rejects sets that are not filters at all.
pub fn is_normal<A: Algebra>(alg: &A, filter: &FilterSet) -> Result<bool> {
    if !is_filter(alg, filter) {
        return Err(Error::NotAFilter(format!(
            "{:?} is not upward closed and product closed",
            filter.to_vec()
        )));
    }
    for a in 0..alg.size() {
        for b in 0..alg.size() {
            if filter.contains(alg.rdiv(b, a)) != filter.contains(alg.ldiv(a, b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All filters, generated by closing singletons and then joining pairs of
/// found filters to a fixpoint. Complete: every filter is a finite join of
/// singleton closures.
fn enumerate_filters<A: Algebra>(alg: &A) -> Vec<FilterSet> {
    let mut found: BTreeSet<FilterSet> = (0..alg.size())
        .map(|x| filter_closure(alg, &[x]))
        .collect();
    loop {
        let mut fresh: Vec<FilterSet> = Vec::new();
        for f in &found {
            for g in &found {
                let seed: Vec<usize> = f.iter().chain(g.iter()).collect();
                let joined = filter_closure(alg, &seed);
                if !found.contains(&joined) {
                    fresh.push(joined);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        found.extend(fresh);
    }
    found.insert(FilterSet::unit_only(alg));
    let mut all: Vec<FilterSet> = found.into_iter().collect();
    all.sort_by_key(|f| (f.len(), f.to_vec()));
    all
}

/// All normal filters, sorted by size then membership. Refuses carriers
/// larger than `bound`.
pub fn enumerate_normal_filters<A: Algebra>(alg: &A, bound: usize) -> Result<Vec<FilterSet>> {
    if alg.size() > bound {
        return Err(Error::EnumBoundExceeded {
            size: alg.size(),
            bound,
        });
    }
    Ok(enumerate_filters(alg)
        .into_iter()
        .filter(|f| is_normal(alg, f).unwrap_or(false))
        .collect())
}

/// The partition induced by a congruence, with classes sorted by least
/// member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruencePartition {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl CongruencePartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }
}

/// Partition of the carrier by `a ~ b iff a\b, b\a in F`, for a normal
/// filter `F`. Compatibility with every available operation is asserted;
/// a failure there signals an upstream bug, never expected on valid input.
pub fn congruence_of<A: Algebra>(alg: &A, filter: &FilterSet) -> Result<CongruencePartition> {
    if !is_normal(alg, filter)? {
        return Err(Error::NotNormal(format!("{:?}", filter.to_vec())));
    }
    let n = alg.size();
    let related = |a: usize, b: usize| {
        filter.contains(alg.ldiv(a, b)) && filter.contains(alg.ldiv(b, a))
    };

    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    #[allow(clippy::needless_range_loop)] // indices are the carrier elements
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = Vec::new();
        for b in a..n {
            if class_of[b] == usize::MAX && related(a, b) {
                class_of[b] = id;
                class.push(b);
            }
        }
        classes.push(class);
    }
    let partition = CongruencePartition { classes, class_of };

    // post-hoc compatibility assertion over every operation table
    type Op<'a> = Box<dyn Fn(usize, usize) -> usize + 'a>;
    let mut ops: Vec<(&str, Op<'_>)> = vec![
        ("mul", Box::new(|a, b| alg.mul(a, b))),
        ("ldiv", Box::new(|a, b| alg.ldiv(a, b))),
        ("rdiv", Box::new(|a, b| alg.rdiv(a, b))),
    ];
    if let Some((meet, join)) = alg.lattice_tables() {
        ops.push(("meet", Box::new(move |a, b| meet.get(a, b))));
        ops.push(("join", Box::new(move |a, b| join.get(a, b))));
    }
    for (label, op) in &ops {
        for class in &partition.classes {
            let rep = class[0];
            for &a in class {
                for b in 0..n {
                    assert!(
                        partition.same_class(op(a, b), op(rep, b))
                            && partition.same_class(op(b, a), op(b, rep)),
                        "congruence of {:?} not compatible with {label} at ({a}, {b})",
                        filter.to_vec()
                    );
                }
            }
        }
    }
    Ok(partition)
}

fn quotient_table(
    op: impl Fn(usize, usize) -> usize,
    partition: &CongruencePartition,
) -> OpTable {
    OpTable::from_fn(partition.class_count(), |a, b| {
        partition.class_of[op(partition.classes[a][0], partition.classes[b][0])]
    })
}

/// Quotient of a bounded algebra by a normal filter. Carries provenance
/// naming the parent and the filter; element labels do not survive.
pub fn quotient(b: &FiniteBl, filter: &FilterSet) -> Result<FiniteBl> {
    let partition = congruence_of(b, filter)?;
    let name = b.name.clone().unwrap_or_else(|| "bl".into());
    Ok(FiniteBl {
        name: Some(format!("{name}/{{{}}}", join_indices(filter))),
        zero: partition.class_of[b.zero],
        one: partition.class_of[b.one],
        mul: quotient_table(|a, c| b.mul.get(a, c), &partition),
        ldiv: quotient_table(|a, c| b.ldiv.get(a, c), &partition),
        rdiv: quotient_table(|a, c| b.rdiv.get(a, c), &partition),
        meet: quotient_table(|a, c| b.meet.get(a, c), &partition),
        join: quotient_table(|a, c| b.join.get(a, c), &partition),
        elements: None,
        provenance: Some(Provenance {
            parent: name,
            filter: filter.to_vec(),
        }),
    })
}

/// Quotient of a hoop by a normal filter.
pub fn quotient_hoop(h: &FiniteHoop, filter: &FilterSet) -> Result<FiniteHoop> {
    let partition = congruence_of(h, filter)?;
    let name = format!(
        "{}/{{{}}}",
        h.name().unwrap_or("hoop"),
        join_indices(filter)
    );
    Ok(FiniteHoop::new(
        Some(name),
        partition.class_of[h.unit()],
        quotient_table(|a, b| h.mul(a, b), &partition),
        quotient_table(|a, b| h.ldiv(a, b), &partition),
        quotient_table(|a, b| h.rdiv(a, b), &partition),
    ))
}

fn join_indices(filter: &FilterSet) -> String {
    filter
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Subdirect irreducibility: a non-trivial algebra is subdirectly
/// irreducible iff the intersection of all its non-trivial normal filters
/// (the monolith) is itself non-trivial. One-element algebras are not
/// subdirectly irreducible by convention.
///
/// # Example
///
/// ```
/// use kitebl_core::{build_kite, godel_chain, is_subdirectly_irreducible, KiteSpec};
///
/// let kite = build_kite(
///     &godel_chain(2)?,
///     &KiteSpec::new(2, 1, vec![0], vec![1])?,
/// )?;
/// let (irreducible, monolith) = is_subdirectly_irreducible(&kite, 16)?;
/// assert!(irreducible);
/// // the monolith is the upper block
/// assert_eq!(monolith.unwrap().len(), 4);
/// # Ok::<(), kitebl_core::Error>(())
/// ```
pub fn is_subdirectly_irreducible<A: Algebra>(
    alg: &A,
    bound: usize,
) -> Result<(bool, Option<FilterSet>)> {
    if alg.size() == 1 {
        return Ok((false, None));
    }
    let normal = enumerate_normal_filters(alg, bound)?;
    let mut monolith = FilterSet::whole(alg);
    for f in normal.iter().filter(|f| !f.is_unit_only()) {
        monolith = monolith.intersection(f);
    }
    if monolith.is_unit_only() {
        Ok((false, None))
    } else {
        Ok((true, Some(monolith)))
    }
}

/// Whether a proper filter is maximal: every one-step extension closes to
/// the whole carrier.
pub fn is_maximal_filter<A: Algebra>(alg: &A, filter: &FilterSet) -> Result<bool> {
    if !is_filter(alg, filter) {
        return Err(Error::NotAFilter(format!("{:?}", filter.to_vec())));
    }
    if filter.len() == alg.size() {
        return Err(Error::NotProper(
            "the whole carrier has no proper extensions".into(),
        ));
    }
    for x in 0..alg.size() {
        if filter.contains(x) {
            continue;
        }
        let mut seed = filter.to_vec();
        seed.push(x);
        if filter_closure(alg, &seed).len() != alg.size() {
            return Ok(false);
        }
    }
    Ok(true)
}
