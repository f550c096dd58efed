//! Fixed-length vectors over a prime field: Hamming weight, support, the
//! entrywise agreement operator, and linear combinations.

use crate::field::PrimeField;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VectorError {
    #[error("vector length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u16, u16),
    #[error("entry {value} at position {index} is not a residue mod {q}")]
    EntryOutOfRange { index: usize, value: u16, q: u16 },
    #[error("vectors must have length at least 1")]
    Empty,
}

/// A vector in GF(q)^n with entries kept as canonical residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldVector {
    field: PrimeField,
    entries: Vec<u16>,
}

impl FieldVector {
    pub fn new(field: PrimeField, entries: Vec<u16>) -> Result<Self, VectorError> {
        if entries.is_empty() {
            return Err(VectorError::Empty);
        }
        let q = field.q();
        for (index, &value) in entries.iter().enumerate() {
            if value >= q {
                return Err(VectorError::EntryOutOfRange { index, value, q });
            }
        }
        Ok(Self { field, entries })
    }

    /// Construction bypassing validation, for values already known canonical.
    pub(crate) fn from_raw(field: PrimeField, entries: Vec<u16>) -> Self {
        debug_assert!(!entries.is_empty());
        debug_assert!(entries.iter().all(|&e| e < field.q()));
        Self { field, entries }
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        assert!(n >= 1, "vectors must have length at least 1");
        Self { field, entries: vec![0; n] }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[allow(clippy::len_without_is_empty)] // length 1 is the minimum by construction
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u16] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> u16 {
        self.entries[i]
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<(), VectorError> {
        if self.field != other.field {
            return Err(VectorError::FieldMismatch(self.field.q(), other.field.q()));
        }
        if self.entries.len() != other.entries.len() {
            return Err(VectorError::LengthMismatch(self.entries.len(), other.entries.len()));
        }
        Ok(())
    }

    /// Entrywise agreement: position i keeps `a_i` when `a_i = b_i != 0`,
    /// and is zeroed otherwise.
    pub fn cap(&self, other: &Self) -> Result<Self, VectorError> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| if a == b && a != 0 { a } else { 0 })
            .collect();
        Ok(Self { field: self.field, entries })
    }

    /// True when the support of `other` is contained in the support of `self`.
    pub fn covers(&self, other: &Self) -> Result<bool, VectorError> {
        self.check_compatible(other)?;
        Ok(support_contained(other.entries(), self.entries()))
    }

    /// `self + c * other`, entrywise.
    pub fn combine(&self, c: u16, other: &Self) -> Result<Self, VectorError> {
        self.check_compatible(other)?;
        if c >= self.field.q() {
            return Err(VectorError::EntryOutOfRange { index: 0, value: c, q: self.field.q() });
        }
        let f = self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.add(a, f.mul(c, b)))
            .collect();
        Ok(Self { field: self.field, entries })
    }

    /// `c * self`, entrywise.
    pub fn scale(&self, c: u16) -> Self {
        let f = self.field;
        let entries = self.entries.iter().map(|&a| f.mul(c, a)).collect();
        Self { field: self.field, entries }
    }
}

/// Support containment on raw entry slices: supp(b) ⊆ supp(a).
pub(crate) fn support_contained(b: &[u16], a: &[u16]) -> bool {
    b.iter().zip(a).all(|(&bi, &ai)| bi == 0 || ai != 0)
}
