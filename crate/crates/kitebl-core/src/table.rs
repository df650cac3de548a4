//! Square operation tables and binary relations over an indexed carrier.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A `size x size` table of carrier indices, stored flat in row-major order.
///
/// `get(a, b)` is the entry for row `a`, column `b`. Serializes as a nested
/// array of rows so table files stay readable.
#[derive(Clone, PartialEq, Eq)]
pub struct OpTable {
    size: usize,
    data: Vec<usize>,
}

impl OpTable {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut data = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                data.push(f(a, b));
            }
        }
        OpTable { size, data }
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let size = rows.len();
        let mut data = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::Structural(format!(
                    "row {i} has length {} in a table of {size} rows",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(OpTable { size, data })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.data[a * self.size + b]
    }

    pub fn set(&mut self, a: usize, b: usize, value: usize) {
        self.data[a * self.size + b] = value;
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|a| self.data[a * self.size..(a + 1) * self.size].to_vec())
            .collect()
    }

    /// All entries are valid indices below `bound`.
    pub fn entries_below(&self, bound: usize) -> bool {
        self.data.iter().all(|&v| v < bound)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.get(a, b) == self.get(b, a)))
    }
}

impl std::fmt::Debug for OpTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OpTable{:?}", self.rows())
    }
}

impl Serialize for OpTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.rows())
    }
}

impl<'de> Deserialize<'de> for OpTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<usize>> = Vec::deserialize(deserializer)?;
        OpTable::from_rows(&rows).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// A binary relation on `0..size`, used for derived partial orders.
#[derive(Clone, PartialEq, Eq)]
pub struct Relation {
    size: usize,
    data: Vec<bool>,
}

impl Relation {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut data = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                data.push(f(a, b));
            }
        }
        Relation { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn holds(&self, a: usize, b: usize) -> bool {
        self.data[a * self.size + b]
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|a| self.holds(a, a))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.size)
            .all(|a| (0..self.size).all(|b| a == b || !(self.holds(a, b) && self.holds(b, a))))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.size).all(|a| {
            (0..self.size).all(|b| {
                !self.holds(a, b)
                    || (0..self.size).all(|c| !self.holds(b, c) || self.holds(a, c))
            })
        })
    }

    /// Greatest lower bound of `a` and `b`, if the order has one.
    pub fn glb(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.size)
            .filter(|&z| self.holds(z, a) && self.holds(z, b))
            .collect();
        let mut best = *lower.first()?;
        for &z in &lower {
            if self.holds(best, z) {
                best = z;
            }
        }
        lower.iter().all(|&z| self.holds(z, best)).then_some(best)
    }

    /// Least upper bound of `a` and `b`, if the order has one.
    pub fn lub(&self, a: usize, b: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.size)
            .filter(|&z| self.holds(a, z) && self.holds(b, z))
            .collect();
        let mut best = *upper.first()?;
        for &z in &upper {
            if self.holds(z, best) {
                best = z;
            }
        }
        upper.iter().all(|&z| self.holds(best, z)).then_some(best)
    }
}

impl std::fmt::Debug for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<Vec<u8>> = (0..self.size)
            .map(|a| (0..self.size).map(|b| self.holds(a, b) as u8).collect())
            .collect();
        write!(f, "Relation{rows:?}")
    }
}
