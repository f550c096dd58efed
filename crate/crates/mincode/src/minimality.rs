//! Minimality checkers for linear codes.
//!
//! A codeword is minimal when its support contains the support of no
//! codeword outside its own scalar line; a code is minimal when every
//! codeword is. Four independent procedures are provided:
//!
//! * [`is_minimal_definitional`] — scans ordered codeword pairs and tests
//!   support containment directly.
//! * [`is_minimal_weight_criterion`] — scans the same pairs but decides via
//!   the weight-sum identity `sum_c wt(a + c*b) = (q-1) wt(a) - wt(b)`,
//!   which holds exactly when b is covered by a.
//! * [`two_weight_sufficient`] — the shortcut for two-weight codes:
//!   minimal whenever `j*w1 != (j-1)*w2` for every `2 <= j <= q`.
//! * [`ashikhmin_barg`] — the classical ratio screen
//!   `w_min / w_max > (q-1)/q`, decided by integer cross-multiplication.
//!
//! The pair scans run in deterministic message order: the reported witness
//! is always the violation with the least `(index(a), index(b))`, whatever
//! the thread count.

use crate::code::{LinearCode, WeightDistribution};
use crate::field::PrimeField;
use crate::vector::{support_contained, FieldVector, VectorError};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MinimalityError {
    #[error("two-weight check needs 0 < w1 < w2, got w1={w1}, w2={w2}")]
    InvalidWeightPair { w1: usize, w2: usize },
    #[error("weight distribution has no nonzero weight")]
    EmptyDistribution,
}

/// Which procedure produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Definitional,
    WeightCriterion,
    TwoWeight,
    AbRatio,
    Walsh,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Definitional => "definitional",
            Method::WeightCriterion => "weight_criterion",
            Method::TwoWeight => "two_weight",
            Method::AbRatio => "ab_ratio",
            Method::Walsh => "walsh",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Minimal,
    NotMinimal,
    Inconclusive,
}

impl Outcome {
    pub fn name(&self) -> &'static str {
        match self {
            Outcome::Minimal => "minimal",
            Outcome::NotMinimal => "not_minimal",
            Outcome::Inconclusive => "inconclusive",
        }
    }
}

/// Result of a sufficient condition, which can certify minimality but
/// never refute it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sufficiency {
    Minimal,
    Inconclusive,
}

impl Sufficiency {
    pub fn outcome(&self) -> Outcome {
        match self {
            Sufficiency::Minimal => Outcome::Minimal,
            Sufficiency::Inconclusive => Outcome::Inconclusive,
        }
    }
}

/// A pair of linearly independent codewords with `b` covered by `a`,
/// demonstrating non-minimality. Indices are message indices in
/// enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverWitness {
    pub a_index: u64,
    pub b_index: u64,
    pub a: FieldVector,
    pub b: FieldVector,
}

/// Which of the two spectral inequalities a Walsh-scan violation hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalshInequality {
    /// `2Re(w1) + 2Re(w2) - 4Re(w3) = 2*3^m`
    Asymmetric,
    /// `2Re(w1) + 2Re(w2) + 2Re(w3) = 2*3^m`
    Symmetric,
}

/// A violating spectral triple `w1 + w2 + w3 = 0`, by canonical index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshWitness {
    pub w1: usize,
    pub w2: usize,
    pub w3: usize,
    pub inequality: WalshInequality,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Cover(CoverWitness),
    Walsh(WalshWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityVerdict {
    pub outcome: Outcome,
    pub method: Method,
    pub witness: Option<Witness>,
}

impl MinimalityVerdict {
    pub fn is_minimal(&self) -> bool {
        self.outcome == Outcome::Minimal
    }

    pub fn cover_witness(&self) -> Option<&CoverWitness> {
        match &self.witness {
            Some(Witness::Cover(w)) => Some(w),
            _ => None,
        }
    }
}

/// Decides `b` covered-by `a` from weights alone:
/// `sum_{c in GF(q)*} wt(a + c*b) = (q-1) wt(a) - wt(b)`.
pub fn cover_by_weights(a: &FieldVector, b: &FieldVector) -> Result<bool, VectorError> {
    a.check_compatible(b)?;
    Ok(weight_sum_hits_bound(a.entries(), b.entries(), a.field().q() as u32))
}

/// One-pass evaluation of the weight-sum identity on raw entries.
fn weight_sum_hits_bound(a: &[u16], b: &[u16], q: u32) -> bool {
    let mut wt_a = 0i64;
    let mut wt_b = 0i64;
    let mut sum = 0i64;
    for (&ai, &bi) in a.iter().zip(b) {
        let ai = ai as u32;
        let bi = bi as u32;
        if ai != 0 {
            wt_a += 1;
        }
        if bi == 0 {
            if ai != 0 {
                sum += (q - 1) as i64;
            }
        } else {
            wt_b += 1;
            for c in 1..q {
                if !(ai + c * bi).is_multiple_of(q) {
                    sum += 1;
                }
            }
        }
    }
    sum == (q as i64 - 1) * wt_a - wt_b
}

/// Flattened codeword table plus the canonical projective representative of
/// each message, used to skip scalar-multiple pairs in O(q^k) total.
struct ScanTable {
    n: usize,
    size: u64,
    flat: Vec<u16>,
    canon: Vec<u64>,
}

impl ScanTable {
    fn build(code: &LinearCode) -> Self {
        let n = code.n();
        let size = code.size();
        let len = (size as usize).checked_mul(n).expect("codeword table fits memory");
        let mut flat = vec![0u16; len];
        code.visit_range(0, size, |idx, entries, _| {
            let at = idx as usize * n;
            flat[at..at + n].copy_from_slice(entries);
        });
        let field = code.field();
        let q = field.q() as u64;
        let mut canon = vec![0u64; size as usize];
        for (idx, slot) in canon.iter_mut().enumerate() {
            let digits = code.message_digits(idx as u64);
            let Some(&lead) = digits.iter().find(|&&d| d != 0) else {
                continue; // zero message is its own representative
            };
            let inv = field.inv(lead).expect("leading digit is nonzero");
            let mut rep = 0u64;
            for &d in &digits {
                rep = rep * q + field.mul(inv, d) as u64;
            }
            *slot = rep;
        }
        Self { n, size, flat, canon }
    }

    fn row(&self, idx: u64) -> &[u16] {
        let at = idx as usize * self.n;
        &self.flat[at..at + self.n]
    }
}

/// Scans ordered pairs of nonzero, non-proportional codewords in message
/// order and returns the least violating `(index(a), index(b))`. The outer
/// loop is parallel; `find_map_first` keeps the result deterministic.
fn scan_pairs<V>(table: &ScanTable, violates: V) -> Option<(u64, u64)>
where
    V: Fn(&[u16], &[u16]) -> bool + Sync,
{
    (1..table.size).into_par_iter().find_map_first(|ia| {
        let a = table.row(ia);
        let canon_a = table.canon[ia as usize];
        (1..table.size)
            .filter(|&ib| table.canon[ib as usize] != canon_a)
            .find(|&ib| violates(a, table.row(ib)))
            .map(|ib| (ia, ib))
    })
}

fn witness_from(code: &LinearCode, ia: u64, ib: u64) -> CoverWitness {
    let a = code.codeword(ia);
    let b = code.codeword(ib);
    debug_assert!(a.covers(&b).unwrap());
    debug_assert!(cover_by_weights(&a, &b).unwrap());
    CoverWitness { a_index: ia, b_index: ib, a, b }
}

/// Definitional pair scan: looks for a nonzero codeword pair with `b`
/// covered by `a` and `b` outside the scalar line of `a`, testing support
/// containment directly.
pub fn is_minimal_definitional(code: &LinearCode) -> MinimalityVerdict {
    let table = ScanTable::build(code);
    match scan_pairs(&table, |a, b| support_contained(b, a)) {
        None => MinimalityVerdict {
            outcome: Outcome::Minimal,
            method: Method::Definitional,
            witness: None,
        },
        Some((ia, ib)) => MinimalityVerdict {
            outcome: Outcome::NotMinimal,
            method: Method::Definitional,
            witness: Some(Witness::Cover(witness_from(code, ia, ib))),
        },
    }
}

/// Weight-sum criterion: the code is minimal iff no linearly independent
/// pair satisfies `sum_c wt(a + c*b) = (q-1) wt(a) - wt(b)`. Decides from
/// weights only, independently of the support scan.
pub fn is_minimal_weight_criterion(code: &LinearCode) -> MinimalityVerdict {
    let table = ScanTable::build(code);
    let q = code.field().q() as u32;
    match scan_pairs(&table, |a, b| weight_sum_hits_bound(a, b, q)) {
        None => MinimalityVerdict {
            outcome: Outcome::Minimal,
            method: Method::WeightCriterion,
            witness: None,
        },
        Some((ia, ib)) => MinimalityVerdict {
            outcome: Outcome::NotMinimal,
            method: Method::WeightCriterion,
            witness: Some(Witness::Cover(witness_from(code, ia, ib))),
        },
    }
}

/// Sufficient condition for two-weight codes with nonzero weights
/// `w1 < w2`: minimal when `j*w1 != (j-1)*w2` for every `2 <= j <= q`.
pub fn two_weight_sufficient(q: u16, w1: usize, w2: usize) -> Result<Sufficiency, MinimalityError> {
    if w1 == 0 || w1 >= w2 {
        return Err(MinimalityError::InvalidWeightPair { w1, w2 });
    }
    for j in 2..=q as u128 {
        if j * w1 as u128 == (j - 1) * w2 as u128 {
            return Ok(Sufficiency::Inconclusive);
        }
    }
    Ok(Sufficiency::Minimal)
}

/// Ashikhmin-Barg screen: minimal when `w_min/w_max > (q-1)/q`, decided
/// exactly as `q*w_min > (q-1)*w_max`.
pub fn ashikhmin_barg(
    dist: &WeightDistribution,
    field: PrimeField,
) -> Result<Sufficiency, MinimalityError> {
    let (Some(w_min), Some(w_max)) = (dist.w_min(), dist.w_max()) else {
        return Err(MinimalityError::EmptyDistribution);
    };
    let q = field.q() as u128;
    if q * w_min as u128 > (q - 1) * w_max as u128 {
        Ok(Sufficiency::Minimal)
    } else {
        Ok(Sufficiency::Inconclusive)
    }
}
