use thiserror::Error;

/// Errors shared across the crate.
///
/// Structural problems (malformed tables, bad indices) are kept distinct from
/// semantic findings (axiom violations), which are reported through
/// [`crate::hoop::AxiomReport`] rather than through this type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("not a pseudo hoop: axiom {axiom} fails at witness {witness:?}")]
    NotAHoop { axiom: String, witness: Vec<usize> },

    #[error("hoop is not basic; pass the unchecked builder to construct anyway")]
    NotBasic,

    #[error("hoop is trivial: {0}")]
    TrivialHoop(String),

    #[error("index maps must be injective: {0}")]
    NotInjective(String),

    #[error("carrier too large: {size} elements exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("order is not a lattice: no {kind} for pair ({a}, {b})")]
    NotALattice { kind: &'static str, a: usize, b: usize },

    #[error("enumeration refused: carrier size {size} exceeds the bound {bound}")]
    EnumBoundExceeded { size: usize, bound: usize },

    #[error("not a filter: {0}")]
    NotAFilter(String),

    #[error("filter is not normal: {0}")]
    NotNormal(String),

    #[error("not a proper filter: {0}")]
    NotProper(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
