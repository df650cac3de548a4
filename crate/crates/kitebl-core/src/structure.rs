//! Connectivity of the index maps, the structural test for subdirect
//! irreducibility of a kite, shape classification, and subdirect
//! decomposition into irreducible factors.

use std::collections::BTreeSet;

use crate::alg::Algebra;
use crate::error::{Error, Result};
use crate::filter::{
    congruence_of, enumerate_normal_filters, is_normal, is_subdirectly_irreducible, quotient,
    quotient_hoop, FilterSet,
};
use crate::hoop::FiniteHoop;
use crate::iso::find_isomorphism;
use crate::kite::{build_kite, FiniteBl, Kite, KitePart, KiteSpec};

/// Partition of `I` into connected components of the index-map graph, with
/// the `J`-indices attached to each component.
///
/// Two indices are connected when an alternating chain of
/// `rho . lambda^-1` / `lambda . rho^-1` steps joins them; equivalently,
/// they lie in the same component of the undirected graph with an edge
/// `{lambda(j), rho(j)}` per `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    /// Components sorted by least member, each sorted ascending.
    pub components: Vec<Vec<usize>>,
    /// For each component, the sorted `j` with `lambda(j)` in it (equal to
    /// the `rho`-preimage).
    pub j_of: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

/// Connected components of the `(lambda, rho)` graph on `I`.
pub fn connected_components(spec: &KiteSpec) -> ComponentPartition {
    let n = spec.i_size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for j in 0..spec.j_size() {
        let a = root(&mut parent, spec.lambda()[j]);
        let b = root(&mut parent, spec.rho()[j]);
        parent[a] = b;
    }

    let mut by_root: Vec<(usize, Vec<usize>)> = Vec::new();
    for i in 0..n {
        let r = root(&mut parent, i);
        match by_root.iter_mut().find(|(rr, _)| *rr == r) {
            Some((_, members)) => members.push(i),
            None => by_root.push((r, vec![i])),
        }
    }
    let mut components: Vec<Vec<usize>> = by_root.into_iter().map(|(_, m)| m).collect();
    components.sort_by_key(|c| c[0]);

    let j_of: Vec<Vec<usize>> = components
        .iter()
        .map(|c| {
            let set: BTreeSet<usize> = c.iter().copied().collect();
            let from_lambda: Vec<usize> = (0..spec.j_size())
                .filter(|&j| set.contains(&spec.lambda()[j]))
                .collect();
            let from_rho: Vec<usize> = (0..spec.j_size())
                .filter(|&j| set.contains(&spec.rho()[j]))
                .collect();
            assert_eq!(
                from_lambda, from_rho,
                "lambda- and rho-preimages of a component must coincide"
            );
            from_lambda
        })
        .collect();

    ComponentPartition { components, j_of }
}

/// Structural test for subdirect irreducibility of the kite built from
/// `(h, spec)`: the hoop must be subdirectly irreducible and the index maps
/// must connect all of `I`.
///
/// An empty `I` yields the two-element Boolean algebra, which is simple, so
/// the test returns `true` for it regardless of the hoop. Trivial hoops are
/// rejected: every kite over them collapses to the same two-element algebra
/// and the test carries no information.
pub fn si_criterion(h: &FiniteHoop, spec: &KiteSpec, bound: usize) -> Result<bool> {
    if h.is_trivial() {
        return Err(Error::TrivialHoop(
            "the structural test requires a non-trivial hoop".into(),
        ));
    }
    if spec.i_size() == 0 {
        return Ok(true);
    }
    let (si, _) = is_subdirectly_irreducible(h, bound)?;
    Ok(si && connected_components(spec).count() == 1)
}

/// Shape of a kite spec up to relabeling of `I` and `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KiteClass {
    /// `|I| = |J| = 0`.
    Degenerate00,
    /// `|I| = 1`, `|J| = 0`.
    Degenerate10,
    /// `|I| = |J| = 1` with both maps the identity.
    Degenerate11,
    /// `|I| = |J| = n` with the maps forming a single `n`-cycle, i.e.
    /// `lambda(j) = j`, `rho(j) = j+1 (mod n)` after relabeling.
    CyclicNN(usize),
    /// `|I| = n+1`, `|J| = n` with the maps forming a single path, i.e.
    /// `lambda(j) = j`, `rho(j) = j+1` after relabeling.
    ChainN1N(usize),
    /// Any shape that cannot underlie a subdirectly irreducible kite.
    NotSIPattern(String),
}

impl std::fmt::Display for KiteClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KiteClass::Degenerate00 => write!(f, "Degenerate00"),
            KiteClass::Degenerate10 => write!(f, "Degenerate10"),
            KiteClass::Degenerate11 => write!(f, "Degenerate11"),
            KiteClass::CyclicNN(n) => write!(f, "CyclicNN({n})"),
            KiteClass::ChainN1N(n) => write!(f, "ChainN1N({n})"),
            KiteClass::NotSIPattern(reason) => write!(f, "NotSIPattern({reason})"),
        }
    }
}

/// Classifies the spec shape up to relabeling.
///
/// Injective maps give every vertex at most one `lambda`-edge and one
/// `rho`-edge, so a connected graph is a single path or a single cycle and
/// the orientation forced by injectivity realizes the canonical maps; a
/// structural check on sizes and the component count therefore decides the
/// class. Anything disconnected cannot underlie a subdirectly irreducible
/// kite.
pub fn classify_finite(spec: &KiteSpec) -> KiteClass {
    let (i, j) = (spec.i_size(), spec.j_size());
    if i == 0 {
        return KiteClass::Degenerate00;
    }
    let comps = connected_components(spec);
    if comps.count() != 1 {
        return KiteClass::NotSIPattern("disconnected".into());
    }
    match (i, j) {
        (1, 0) => KiteClass::Degenerate10,
        (1, 1) => KiteClass::Degenerate11,
        (i, j) if i == j => KiteClass::CyclicNN(i),
        (i, j) if i == j + 1 => KiteClass::ChainN1N(j),
        _ => KiteClass::NotSIPattern("disconnected".into()),
    }
}

/// One factor of the component-wise decomposition of a kite.
#[derive(Clone, Debug)]
pub struct ComponentFactor {
    /// Original `I`-indices of the component, sorted.
    pub component: Vec<usize>,
    /// Original `J`-indices attached to it, sorted.
    pub j_indices: Vec<usize>,
    /// The restriction of the maps to the component, relabeled.
    pub spec: KiteSpec,
    /// The normal filter of the parent kite whose congruence collapses
    /// everything outside the component: the upper elements that are the
    /// unit on every component coordinate.
    pub filter: FilterSet,
}

fn restricted_spec(spec: &KiteSpec, component: &[usize], j_indices: &[usize]) -> KiteSpec {
    let pos_i = |i: usize| component.iter().position(|&x| x == i).unwrap();
    let lambda: Vec<usize> = j_indices.iter().map(|&j| pos_i(spec.lambda()[j])).collect();
    let rho: Vec<usize> = j_indices.iter().map(|&j| pos_i(spec.rho()[j])).collect();
    KiteSpec::new(component.len(), j_indices.len(), lambda, rho)
        .expect("restriction of injective maps stays injective")
}

fn component_filter(parent: &FiniteBl, component: &[usize], unit: usize) -> FilterSet {
    let elems = parent.elements.as_ref().expect("parent kite carries labels");
    FilterSet::from_members(elems.iter().enumerate().filter_map(|(idx, e)| {
        (e.part == KitePart::Upper && component.iter().all(|&i| e.coords[i] == unit))
            .then_some(idx)
    }))
}

fn restrict_element_map(
    parent_kite: &Kite<'_>,
    factor_kite: &Kite<'_>,
    component: &[usize],
    j_indices: &[usize],
    hoop_class_of: Option<&[usize]>,
) -> Vec<usize> {
    (0..parent_kite.size())
        .map(|idx| {
            let mut e = parent_kite.element(idx);
            if let Some(classes) = hoop_class_of {
                for c in e.coords.iter_mut() {
                    *c = classes[*c];
                }
            }
            let keep: &[usize] = match e.part {
                KitePart::Upper => component,
                KitePart::Lower => j_indices,
            };
            e.coords = keep.iter().map(|&k| e.coords[k]).collect();
            factor_kite.index(&e)
        })
        .collect()
}

fn assert_jointly_injective(maps: &[Vec<usize>], size: usize, context: &str) {
    let mut images: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..size {
        let image: Vec<usize> = maps.iter().map(|m| m[x]).collect();
        assert!(
            images.insert(image),
            "{context}: joint factor map is not injective at element {x}"
        );
    }
}

/// Splits the kite over `(h, spec)` along the connected components of the
/// maps. Each factor gets the restricted spec and the normal filter of the
/// parent kite inducing it; the quotient by that filter is checked
/// isomorphic to the kite built directly from the restriction, and the joint
/// quotient map is checked injective. With at most one component the kite is
/// returned as its own single factor.
pub fn decompose(h: &FiniteHoop, spec: &KiteSpec) -> Result<Vec<ComponentFactor>> {
    let parent = build_kite(h, spec)?;
    let comps = connected_components(spec);

    if comps.count() <= 1 {
        return Ok(vec![ComponentFactor {
            component: (0..spec.i_size()).collect(),
            j_indices: (0..spec.j_size()).collect(),
            spec: spec.clone(),
            filter: FilterSet::unit_only(&parent),
        }]);
    }

    let mut factors = Vec::new();
    let mut maps = Vec::new();
    for (component, j_indices) in comps.components.iter().zip(&comps.j_of) {
        let rspec = restricted_spec(spec, component, j_indices);
        let filter = component_filter(&parent, component, h.unit());
        assert!(
            is_normal(&parent, &filter)?,
            "component filter must be normal"
        );

        let factor_bl = build_kite(h, &rspec)?;
        let q = quotient(&parent, &filter)?;
        assert!(
            find_isomorphism(&q, &factor_bl).is_some(),
            "quotient by the component filter must match the restricted kite"
        );
        maps.push(congruence_of(&parent, &filter)?.class_of);
        factors.push(ComponentFactor {
            component: component.clone(),
            j_indices: j_indices.clone(),
            spec: rspec,
            filter,
        });
    }
    assert_jointly_injective(&maps, parent.size(), "component decomposition");
    Ok(factors)
}

/// One subdirectly irreducible factor of a kite, with the surjection from
/// the parent kite's canonical element indices.
#[derive(Clone, Debug)]
pub struct SubdirectFactor {
    pub kite: FiniteBl,
    /// Parent element index -> factor element index.
    pub map: Vec<usize>,
    /// The hoop-side normal filter this factor quotients by.
    pub hoop_filter: FilterSet,
    /// Original `I`-indices of the component this factor restricts to.
    pub component: Vec<usize>,
    pub spec: KiteSpec,
}

/// A minimal family of normal filters with subdirectly irreducible quotients
/// whose intersection is the unit: the hoop-side subdirect representation.
fn si_quotient_family(h: &FiniteHoop, bound: usize) -> Result<Vec<FilterSet>> {
    let all = enumerate_normal_filters(h, bound)?;
    let mut candidates = Vec::new();
    for f in &all {
        let q = quotient_hoop(h, f)?;
        if is_subdirectly_irreducible(&q, bound)?.0 {
            candidates.push(f.clone());
        }
    }

    let mut chosen: Vec<FilterSet> = Vec::new();
    let mut inter = FilterSet::whole(h);
    while !inter.is_unit_only() {
        let best = candidates
            .iter()
            .min_by_key(|f| (inter.intersection(f).len(), f.to_vec()))
            .cloned();
        let next = best.expect("finite hoops always admit separating s.i. quotients");
        let shrunk = inter.intersection(&next);
        assert!(shrunk.len() < inter.len(), "selection must make progress");
        inter = shrunk;
        chosen.push(next);
    }

    // drop members whose removal keeps the intersection trivial
    let mut idx = 0;
    while idx < chosen.len() {
        let without: Vec<&FilterSet> = chosen
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, f)| f)
            .collect();
        let mut inter = FilterSet::whole(h);
        for f in &without {
            inter = inter.intersection(f);
        }
        if !without.is_empty() && inter.is_unit_only() {
            chosen.remove(idx);
        } else {
            idx += 1;
        }
    }
    chosen.sort_by_key(|f| (f.len(), f.to_vec()));
    Ok(chosen)
}

/// Represents the kite over `(h, spec)` as a subdirect product of
/// subdirectly irreducible kites: first over the subdirectly irreducible
/// quotients of the hoop, then along connected components. Every factor is
/// checked against [`si_criterion`] and the joint map is checked injective.
///
/// A trivial hoop yields the two-element Boolean algebra, which is returned
/// as its own single factor.
pub fn subdirect_representation(
    h: &FiniteHoop,
    spec: &KiteSpec,
    bound: usize,
) -> Result<Vec<SubdirectFactor>> {
    let parent = build_kite(h, spec)?;

    if h.is_trivial() {
        let (si, _) = is_subdirectly_irreducible(&parent, bound)?;
        assert!(si, "the two-element Boolean algebra is simple");
        return Ok(vec![SubdirectFactor {
            map: (0..parent.size()).collect(),
            kite: parent,
            hoop_filter: FilterSet::unit_only(h),
            component: (0..spec.i_size()).collect(),
            spec: spec.clone(),
        }]);
    }

    let family = si_quotient_family(h, bound)?;
    let comps = connected_components(spec);
    let pieces: Vec<(Vec<usize>, Vec<usize>)> = if comps.count() <= 1 {
        vec![(
            (0..spec.i_size()).collect(),
            (0..spec.j_size()).collect(),
        )]
    } else {
        comps
            .components
            .iter()
            .cloned()
            .zip(comps.j_of.iter().cloned())
            .collect()
    };

    let parent_kite = Kite::new(h, spec)?;
    let mut factors = Vec::new();
    for hoop_filter in family {
        let hq = quotient_hoop(h, &hoop_filter)?;
        let class_of = congruence_of(h, &hoop_filter)?.class_of;
        for (component, j_indices) in &pieces {
            let rspec = restricted_spec(spec, component, j_indices);
            assert!(
                si_criterion(&hq, &rspec, bound)?,
                "every factor must test subdirectly irreducible"
            );
            let kite_bl = build_kite(&hq, &rspec)?;
            let factor_kite = Kite::new(&hq, &rspec)?;
            let map = restrict_element_map(
                &parent_kite,
                &factor_kite,
                component,
                j_indices,
                Some(&class_of),
            );
            factors.push(SubdirectFactor {
                kite: kite_bl,
                map,
                hoop_filter: hoop_filter.clone(),
                component: component.clone(),
                spec: rspec,
            });
        }
    }

    let maps: Vec<Vec<usize>> = factors.iter().map(|f| f.map.clone()).collect();
    assert_jointly_injective(&maps, parent.size(), "subdirect representation");
    Ok(factors)
}
