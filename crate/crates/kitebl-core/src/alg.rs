//! A common table-level view of finite residuated structures.

use crate::table::OpTable;

/// Table access shared by finite hoops and finite BL-algebras.
///
/// Filters, congruences, quotients, and isomorphism search only need the
/// residuated signature plus, when present, the lattice tables, so they are
/// written against this trait.
pub trait Algebra {
    fn size(&self) -> usize;

    /// The monoid unit (the top element of the derived order).
    fn unit(&self) -> usize;

    fn mul(&self, a: usize, b: usize) -> usize;

    /// Left division `a \ b`.
    fn ldiv(&self, a: usize, b: usize) -> usize;

    /// Right division `a / b`.
    fn rdiv(&self, a: usize, b: usize) -> usize;

    /// Materialized lattice tables `(meet, join)`, for bounded structures.
    fn lattice_tables(&self) -> Option<(&OpTable, &OpTable)> {
        None
    }

    /// The bottom element, for bounded structures.
    fn bottom(&self) -> Option<usize> {
        None
    }

    /// `a <= b` iff `a \ b = 1`.
    fn leq(&self, a: usize, b: usize) -> bool {
        self.ldiv(a, b) == self.unit()
    }
}
