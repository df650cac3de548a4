//! Finite pseudo hoops, the kite construction over them, and the machinery
//! to analyze what comes out: a full axiom verifier for bounded residuated
//! structures, filters and congruences, quotients, subdirect irreducibility,
//! shape classification, and subdirect decomposition.
//!
//! Everything is table-backed and checked by exhaustive sweep at desk scale;
//! the sweeps double as independent oracles for the constructions.

pub mod alg;
pub mod catalog;
pub mod error;
pub mod filter;
pub mod format;
pub mod hoop;
pub mod iso;
pub mod kite;
pub mod structure;
pub mod table;
pub mod verify;

pub use alg::Algebra;
pub use error::{Error, Result};
pub use filter::{
    congruence_of, enumerate_normal_filters, filter_closure, is_filter, is_maximal_filter,
    is_normal, is_subdirectly_irreducible, quotient, quotient_hoop, CongruencePartition,
    FilterSet, DEFAULT_ENUM_BOUND,
};
pub use hoop::{
    check_basic, check_commutative, check_pseudo_hoop, check_pseudo_hoop_with, check_wajsberg,
    derive_order, direct_product, godel_chain, lukasiewicz_chain, meet, ordinal_sum,
    trivial_hoop, AxiomReport, FiniteHoop, Violation,
};
pub use iso::{are_isomorphic, find_isomorphism};
pub use kite::{
    build_kite, build_kite_unchecked, injections, is_good, is_pseudo_mv, negations, FiniteBl,
    Kite, KiteElement, KitePart, KiteSpec, Provenance, KITE_SIZE_LIMIT,
};
pub use structure::{
    classify_finite, connected_components, decompose, si_criterion, subdirect_representation,
    ComponentFactor, ComponentPartition, KiteClass, SubdirectFactor,
};
pub use table::{OpTable, Relation};
pub use verify::{check_pseudo_bl, check_pseudo_bl_with, find_noncommutative_witness};
