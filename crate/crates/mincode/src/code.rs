//! Linear codes as generator matrices, with deterministic codeword
//! enumeration and exact weight distributions.
//!
//! Enumeration order is part of the contract: messages are the base-q
//! integers `0 .. q^k - 1`, most significant digit first, and digit `i`
//! multiplies generator row `i`. File outputs and reported witnesses are
//! bit-exact across runs (and thread counts) because of this ordering.

use crate::field::PrimeField;
use crate::vector::{FieldVector, VectorError};
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("generator has no rows")]
    EmptyGenerator,
    #[error(transparent)]
    Rows(#[from] VectorError),
    #[error("generator rank {rank} is less than the row count {k}")]
    RankDeficient { rank: usize, k: usize },
    #[error("{q}^{k} codewords exceed the enumerable range")]
    TooLarge { q: u16, k: usize },
}

/// A k-dimensional linear code of length n over GF(q), held as its
/// generator matrix. Rows are checked to be linearly independent at
/// construction; rank deficiency is an error, never a silent re-dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: PrimeField,
    n: usize,
    k: usize,
    rows: Vec<FieldVector>,
    size: u64,
    /// suffix[j] = rows[j] + rows[j+1] + ... + rows[k-1], the codeword delta
    /// when message digit j increments and all lower digits wrap.
    suffix: Vec<Vec<u16>>,
}

impl LinearCode {
    pub fn new(rows: Vec<FieldVector>) -> Result<Self, CodeError> {
        let first = rows.first().ok_or(CodeError::EmptyGenerator)?;
        let field = first.field();
        let n = first.len();
        for row in &rows[1..] {
            if row.field() != field {
                return Err(VectorError::FieldMismatch(field.q(), row.field().q()).into());
            }
            if row.len() != n {
                return Err(VectorError::LengthMismatch(n, row.len()).into());
            }
        }
        let k = rows.len();
        let rank = rank(field, &rows);
        if rank < k {
            return Err(CodeError::RankDeficient { rank, k });
        }
        let size = (field.q() as u64)
            .checked_pow(u32::try_from(k).map_err(|_| CodeError::TooLarge { q: field.q(), k })?)
            .ok_or(CodeError::TooLarge { q: field.q(), k })?;
        let mut suffix = vec![vec![0u16; n]; k];
        suffix[k - 1] = rows[k - 1].entries().to_vec();
        for j in (0..k - 1).rev() {
            let (head, tail) = suffix.split_at_mut(j + 1);
            for ((s, &next), &r) in head[j].iter_mut().zip(&tail[0]).zip(rows[j].entries()) {
                *s = field.add(next, r);
            }
        }
        Ok(Self { field, n, k, rows, size, suffix })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of codewords, `q^k`.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn rows(&self) -> &[FieldVector] {
        &self.rows
    }

    /// Base-q digits of a message index, most significant first.
    pub fn message_digits(&self, index: u64) -> Vec<u16> {
        assert!(index < self.size, "message index out of range");
        let q = self.field.q() as u64;
        let mut digits = vec![0u16; self.k];
        let mut rem = index;
        for d in digits.iter_mut().rev() {
            *d = (rem % q) as u16;
            rem /= q;
        }
        digits
    }

    /// The codeword encoding the given message index.
    pub fn codeword(&self, index: u64) -> FieldVector {
        let digits = self.message_digits(index);
        let mut entries = vec![0u16; self.n];
        for (c, row) in digits.iter().zip(&self.rows) {
            if *c == 0 {
                continue;
            }
            for (e, &r) in entries.iter_mut().zip(row.entries()) {
                *e = self.field.add(*e, self.field.mul(*c, r));
            }
        }
        FieldVector::from_raw(self.field, entries)
    }

    /// All `q^k` codewords exactly once, in message order.
    pub fn codewords(&self) -> Codewords<'_> {
        Codewords {
            code: self,
            next_index: 0,
            digits: vec![0u16; self.k],
            current: vec![0u16; self.n],
        }
    }

    /// Walks message indices `start..end`, passing each codeword's entries
    /// and Hamming weight. Incremental: one suffix-sum addition per step.
    pub(crate) fn visit_range<F>(&self, start: u64, end: u64, mut f: F)
    where
        F: FnMut(u64, &[u16], usize),
    {
        debug_assert!(start <= end && end <= self.size);
        if start == end {
            return;
        }
        let mut digits = self.message_digits(start);
        let mut current = self.codeword(start).entries().to_vec();
        let mut weight = current.iter().filter(|&&e| e != 0).count();
        let mut idx = start;
        loop {
            f(idx, &current, weight);
            idx += 1;
            if idx == end {
                return;
            }
            let j = advance(self.field.q(), &mut digits);
            for (cur, &s) in current.iter_mut().zip(&self.suffix[j]) {
                if s == 0 {
                    continue;
                }
                let was = *cur;
                let now = self.field.add(was, s);
                *cur = now;
                if was == 0 {
                    weight += 1;
                } else if now == 0 {
                    weight -= 1;
                }
            }
        }
    }

    /// Exact weight distribution by full enumeration, partitioned over
    /// message-index ranges. The result is independent of the partitioning.
    pub fn weight_distribution(&self) -> WeightDistribution {
        let chunk = (self.size / (rayon::current_num_threads() as u64 * 4)).clamp(1024, u64::MAX);
        let starts: Vec<u64> = (0..self.size).step_by(chunk.min(self.size) as usize).collect();
        let counts = starts
            .par_iter()
            .map(|&start| {
                let end = (start + chunk).min(self.size);
                let mut local = vec![0u64; self.n + 1];
                self.visit_range(start, end, |_, _, w| local[w] += 1);
                local
            })
            .reduce(
                || vec![0u64; self.n + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            );
        let mut map = BTreeMap::new();
        for (w, &c) in counts.iter().enumerate() {
            if c > 0 {
                map.insert(w, c);
            }
        }
        WeightDistribution { counts: map }
    }
}

/// Increments the base-q odometer and returns the most significant digit
/// position that changed. Callers guarantee the odometer is not saturated.
fn advance(q: u16, digits: &mut [u16]) -> usize {
    let mut j = digits.len() - 1;
    while digits[j] == q - 1 {
        digits[j] = 0;
        j -= 1;
    }
    digits[j] += 1;
    j
}

/// Iterator over all codewords in message order.
pub struct Codewords<'a> {
    code: &'a LinearCode,
    next_index: u64,
    digits: Vec<u16>,
    current: Vec<u16>,
}

impl Iterator for Codewords<'_> {
    type Item = FieldVector;

    fn next(&mut self) -> Option<FieldVector> {
        if self.next_index == self.code.size {
            return None;
        }
        let out = FieldVector::from_raw(self.code.field, self.current.clone());
        self.next_index += 1;
        if self.next_index < self.code.size {
            let j = advance(self.code.field.q(), &mut self.digits);
            for (cur, &s) in self.current.iter_mut().zip(&self.code.suffix[j]) {
                *cur = self.code.field.add(*cur, s);
            }
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.code.size - self.next_index).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

/// Rank over GF(q) by Gaussian elimination on a working copy.
fn rank(field: PrimeField, rows: &[FieldVector]) -> usize {
    let mut m: Vec<Vec<u16>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let nrows = m.len();
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = field.inv(m[rank][col]).expect("pivot is nonzero");
        for v in m[rank][col..].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (v, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *v = field.sub(*v, field.mul(factor, p));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exact census of codeword weights: `counts[w]` is the number of codewords
/// of Hamming weight `w`. Keys are ascending; absent weights have count 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightDistribution {
    counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn from_counts(counts: BTreeMap<usize, u64>) -> Self {
        let counts = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        Self { counts }
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }

    /// Least weight w > 0 with a positive count.
    pub fn w_min(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// Greatest weight w > 0 with a positive count.
    pub fn w_max(&self) -> Option<usize> {
        self.counts.keys().copied().rfind(|&w| w > 0)
    }

    /// The two nonzero weights `(w1, w2)` with `w1 < w2`, when the
    /// distribution has exactly two of them.
    pub fn two_weights(&self) -> Option<(usize, usize)> {
        let nonzero: Vec<usize> = self.counts.keys().copied().filter(|&w| w > 0).collect();
        match nonzero.as_slice() {
            [w1, w2] => Some((*w1, *w2)),
            _ => None,
        }
    }

    pub(crate) fn add_count(&mut self, w: usize, c: u64) {
        if c > 0 {
            *self.counts.entry(w).or_insert(0) += c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn code(q: u64, rows: &[&[u16]]) -> LinearCode {
        let f = gf(q);
        LinearCode::new(rows.iter().map(|r| FieldVector::new(f, r.to_vec()).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn enumeration_order_scalar_multiples() {
        let c = code(3, &[&[1, 2]]);
        let words: Vec<Vec<u16>> = c.codewords().map(|w| w.entries().to_vec()).collect();
        assert_eq!(words, vec![vec![0, 0], vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn enumeration_covers_full_space_once() {
        let c = code(2, &[&[1, 0], &[0, 1]]);
        let words: Vec<Vec<u16>> = c.codewords().map(|w| w.entries().to_vec()).collect();
        assert_eq!(words, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn codeword_at_matches_iteration() {
        let c = code(3, &[&[1, 2, 0, 1], &[0, 1, 1, 1], &[2, 0, 1, 0]]);
        for (idx, w) in c.codewords().enumerate() {
            assert_eq!(c.codeword(idx as u64), w);
        }
    }

    #[test]
    fn rank_deficient_is_rejected() {
        let f = gf(3);
        let rows = vec![
            FieldVector::new(f, vec![1, 2, 0]).unwrap(),
            FieldVector::new(f, vec![2, 1, 0]).unwrap(),
        ];
        assert_eq!(LinearCode::new(rows), Err(CodeError::RankDeficient { rank: 1, k: 2 }));
        assert_eq!(LinearCode::new(vec![]), Err(CodeError::EmptyGenerator));
    }

    #[test]
    fn zero_row_is_rank_deficient() {
        let f = gf(2);
        let rows = vec![FieldVector::zero(f, 3)];
        assert!(matches!(LinearCode::new(rows), Err(CodeError::RankDeficient { rank: 0, k: 1 })));
    }

    #[test]
    fn repetition_code_distribution() {
        let c = code(3, &[&[1, 1, 1]]);
        let dist = c.weight_distribution();
        let expected: BTreeMap<usize, u64> = [(0, 1), (3, 2)].into();
        assert_eq!(dist.counts(), &expected);
        assert_eq!(dist.w_min(), Some(3));
        assert_eq!(dist.w_max(), Some(3));
    }

    // Coordinate-functional code on GF(3)^3: one nonzero weight 18 = 27 - 9,
    // carried by all 26 nonzero codewords.
    #[test]
    fn coordinate_functional_code_is_one_weight() {
        let f = gf(3);
        let mut rows = vec![vec![0u16; 26]; 3];
        for x in 1..27usize {
            let digits = [(x / 9) as u16, (x / 3 % 3) as u16, (x % 3) as u16];
            for (i, row) in rows.iter_mut().enumerate() {
                row[x - 1] = digits[i];
            }
        }
        let c = LinearCode::new(
            rows.into_iter().map(|r| FieldVector::new(f, r).unwrap()).collect(),
        )
        .unwrap();
        let dist = c.weight_distribution();
        let expected: BTreeMap<usize, u64> = [(0, 1), (18, 26)].into();
        assert_eq!(dist.counts(), &expected);
    }

    #[test]
    fn distribution_totals_are_code_size() {
        let c = code(3, &[&[1, 2, 0, 1, 1], &[0, 1, 1, 1, 0], &[2, 0, 1, 0, 2]]);
        let dist = c.weight_distribution();
        assert_eq!(dist.total(), 27);
        assert_eq!(dist.count(0), 1);
    }

    #[test]
    fn distribution_is_partition_independent() {
        let c = code(3, &[&[1, 2, 0, 1, 1, 2], &[0, 1, 1, 1, 0, 0], &[2, 0, 1, 0, 2, 1]]);
        let par = c.weight_distribution();
        // Single sequential pass as the reference.
        let mut seq = vec![0u64; c.n() + 1];
        c.visit_range(0, c.size(), |_, _, w| seq[w] += 1);
        for (w, &count) in seq.iter().enumerate() {
            assert_eq!(par.count(w), count);
        }
    }

    #[test]
    fn visit_range_weights_match_vectors() {
        let c = code(5, &[&[1, 2, 3], &[0, 1, 4]]);
        c.visit_range(0, c.size(), |idx, entries, w| {
            assert_eq!(entries.iter().filter(|&&e| e != 0).count(), w);
            assert_eq!(c.codeword(idx).entries(), entries);
        });
    }
}
