//! Ternary codes built from functions f: GF(3)^m -> GF(3), together with
//! their exact Walsh spectra, spectral weight distributions, and the
//! spectral minimality scan. Includes the g_(m,k) indicator family (1 on
//! the nonzero vectors of weight at most k) and its closed-form weight
//! distribution, plus the prime-q generalization of the construction.
//!
//! Complex numbers never appear: the spectrum is carried as the exact
//! integer `2*Re(f^(w)) = 3*N0(w) - 3^m`, where `N0(w)` counts the points
//! with `f(x) = w.x`. Doubling turns every spectral criterion used here
//! into an integer (in)equality, so no verdict can be lost to rounding.
//!
//! Points of GF(3)^m are indexed canonically: x is read as an m-digit
//! base-3 integer, first coordinate most significant. Code coordinates run
//! over x = 1 .. 3^m - 1 in that order.

use crate::code::{CodeError, LinearCode, WeightDistribution};
use crate::field::PrimeField;
use crate::krawtchouk::{binomial, lloyd, KrawtchoukError};
use crate::minimality::{
    Method, MinimalityVerdict, Outcome, WalshInequality, WalshWitness, Witness,
};
use crate::vector::FieldVector;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("value table has length {got}, expected {expected}")]
    WrongTableLength { got: usize, expected: usize },
    #[error("table value {value} at index {index} is not a residue mod {q}")]
    ValueOutOfRange { index: usize, value: u16, q: u16 },
    #[error("f(0) must be 0")]
    NonzeroAtOrigin,
    #[error("dimension m={0} is outside the tabulated range")]
    DimensionTooLarge(usize),
    #[error("weight bound k={k} must lie in 1..={m}")]
    WeightBoundOutOfRange { k: usize, m: usize },
    #[error("parameters m={m}, k={k} violate m >= 5 and 2 <= k <= (m-1)/2")]
    ParamsOutOfRange { m: usize, k: usize },
    #[error("function coincides with a linear form, so the code drops a dimension")]
    LinearForm,
    #[error("spectral entry not divisible by 3: the table is corrupted")]
    InexactDivision,
    #[error("closed-form quantity exceeds the supported integer range")]
    Overflow,
    #[error(transparent)]
    Code(#[from] CodeError),
}

impl From<KrawtchoukError> for ConstructionError {
    fn from(_: KrawtchoukError) -> Self {
        ConstructionError::Overflow
    }
}

fn pow3(m: usize) -> Result<usize, ConstructionError> {
    3usize
        .checked_pow(u32::try_from(m).map_err(|_| ConstructionError::DimensionTooLarge(m))?)
        .ok_or(ConstructionError::DimensionTooLarge(m))
}

/// Base-3 digits of a canonical point index, first coordinate first.
fn digits_base3(m: usize, mut idx: usize) -> Vec<u8> {
    let mut d = vec![0u8; m];
    for slot in d.iter_mut().rev() {
        *slot = (idx % 3) as u8;
        idx /= 3;
    }
    d
}

/// Index of -x for the point with canonical index `idx`.
fn neg_index(m: usize, idx: usize) -> usize {
    let mut out = 0usize;
    for d in digits_base3(m, idx) {
        out = out * 3 + usize::from((3 - d) % 3);
    }
    out
}

/// A function f: GF(3)^m -> GF(3) with f(0) = 0, held as its value table
/// in canonical point order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryFunction {
    m: usize,
    values: Vec<u8>,
}

impl TernaryFunction {
    pub fn new(m: usize, values: Vec<u8>) -> Result<Self, ConstructionError> {
        let expected = pow3(m)?;
        if m == 0 || values.len() != expected {
            return Err(ConstructionError::WrongTableLength { got: values.len(), expected });
        }
        for (index, &value) in values.iter().enumerate() {
            if value >= 3 {
                return Err(ConstructionError::ValueOutOfRange { index, value: value as u16, q: 3 });
            }
        }
        if values[0] != 0 {
            return Err(ConstructionError::NonzeroAtOrigin);
        }
        Ok(Self { m, values })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Value at the point with the given canonical index.
    pub fn value(&self, idx: usize) -> u8 {
        self.values[idx]
    }
}

/// The exact doubled real parts of a Walsh spectrum: entry `w` holds
/// `2*Re(f^(w))`. Every entry is `3*N0(w) - 3^m`, hence divisible by 3,
/// and bounded by `2*3^m` in absolute value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshTable {
    m: usize,
    doubled_re: Vec<i64>,
}

impl WalshTable {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn doubled_re(&self) -> &[i64] {
        &self.doubled_re
    }

    pub fn entry(&self, w: usize) -> i64 {
        self.doubled_re[w]
    }

    /// True when no entry reaches `2*3^m`, i.e. the function differs from
    /// every linear form and the code below keeps dimension m + 1.
    pub fn dimension_ok(&self) -> bool {
        let top = 2 * 3i64.pow(self.m as u32);
        self.doubled_re.iter().all(|&d| d < top)
    }
}

/// Computes the Walsh table of `f`: for each w it counts
/// `N0(w) = #{x : f(x) = w.x}` and stores `2*Re(f^(w)) = 3*N0(w) - 3^m`.
/// The per-w counts run in parallel; the result does not depend on the
/// partitioning.
pub fn walsh_table(f: &TernaryFunction) -> WalshTable {
    let m = f.m;
    let size = f.values.len();
    let total = size as i64;
    let doubled_re: Vec<i64> = (0..size)
        .into_par_iter()
        .map(|w| {
            let wd = digits_base3(m, w);
            let mut digits = vec![0u8; m];
            let mut dot: u8 = 0;
            let mut n0 = 0i64;
            for x in 0..size {
                if f.values[x] == dot {
                    n0 += 1;
                }
                if x + 1 == size {
                    break;
                }
                // Advance the point odometer. Each processed digit adds its
                // w-coordinate to the inner product: stepping a digit by +1
                // adds w_j, and a wrap 2 -> 0 adds -2*w_j = w_j (mod 3).
                let mut j = m - 1;
                loop {
                    dot = (dot + wd[j]) % 3;
                    if digits[j] < 2 {
                        digits[j] += 1;
                        break;
                    }
                    digits[j] = 0;
                    j -= 1;
                }
            }
            3 * n0 - total
        })
        .collect();
    WalshTable { m, doubled_re }
}

/// True when `f` differs from every linear form `x -> w.x`, the hypothesis
/// under which the code of [`build_cf`] has dimension m + 1.
pub fn dimension_ok(f: &TernaryFunction) -> bool {
    walsh_table(f).dimension_ok()
}

/// Builds the `[3^m - 1, m + 1]` ternary code whose generator rows are the
/// value table of `f` over the nonzero points followed by the m coordinate
/// functionals, columns in canonical point order.
pub fn build_cf(f: &TernaryFunction) -> Result<LinearCode, ConstructionError> {
    if !dimension_ok(f) {
        return Err(ConstructionError::LinearForm);
    }
    let field = PrimeField::new(3).expect("3 is prime");
    Ok(LinearCode::new(function_rows(field, f.m, |idx| f.values[idx] as u16))
        .expect("full rank is guaranteed by the spectral check"))
}

/// Generator rows for the function construction over GF(q): the function
/// row followed by the coordinate-functional rows, x = 1 .. q^m - 1.
fn function_rows(field: PrimeField, m: usize, value_at: impl Fn(usize) -> u16) -> Vec<FieldVector> {
    let q = field.q() as usize;
    let size = q.pow(m as u32);
    let n = size - 1;
    let mut rows = vec![vec![0u16; n]; m + 1];
    for x in 1..size {
        rows[0][x - 1] = value_at(x);
        let mut rem = x;
        for i in (1..=m).rev() {
            rows[i][x - 1] = (rem % q) as u16;
            rem /= q;
        }
    }
    rows.into_iter().map(|r| FieldVector::from_raw(field, r)).collect()
}

/// The `[q^m - 1, m]` one-weight code of all coordinate-functional
/// evaluations over the nonzero points of GF(q)^m.
pub fn coordinate_code(field: PrimeField, m: usize) -> Result<LinearCode, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::DimensionTooLarge(0));
    }
    let q = field.q() as usize;
    q.checked_pow(m as u32).ok_or(ConstructionError::DimensionTooLarge(m))?;
    let rows = function_rows(field, m, |_| 0);
    Ok(LinearCode::new(rows[1..].to_vec())?)
}

/// Assembles the weight distribution of the code of [`build_cf`] from the
/// Walsh table alone: weight 0 once; weight `3^m - 3^(m-1)` for the
/// `3^m - 1` nonzero linear rows; and for u in {1, 2} paired with every v,
/// weight `3^m - 3^(m-1) - 2Re(f^(-v))/3` resp. `... - 2Re(f^(v))/3`.
/// The divisions are exact by the table invariant.
pub fn distribution_from_walsh(f: &TernaryFunction) -> Result<WeightDistribution, ConstructionError> {
    let table = walsh_table(f);
    if !table.dimension_ok() {
        return Err(ConstructionError::LinearForm);
    }
    let m = f.m;
    let size = f.values.len();
    let base = (size - size / 3) as i64; // 3^m - 3^(m-1)
    let mut dist = WeightDistribution::default();
    dist.add_count(0, 1);
    dist.add_count(base as usize, size as u64 - 1);
    for v in 0..size {
        for w_idx in [neg_index(m, v), v] {
            let d = table.entry(w_idx);
            if d.rem_euclid(3) != 0 {
                return Err(ConstructionError::InexactDivision);
            }
            let weight = base - d / 3;
            debug_assert!((0..size as i64).contains(&weight));
            dist.add_count(weight as usize, 1);
        }
    }
    Ok(dist)
}

/// Spectral minimality scan: the code of [`build_cf`] is minimal exactly
/// when, over the pairwise distinct triples `w1 + w2 + w3 = 0`, the doubled
/// spectrum avoids both `D(w1) + D(w2) - 2 D(w3) = 2*3^m` and
/// `D(w1) + D(w2) + D(w3) = 2*3^m`. Iterating ordered pairs `(w1, w2)` with
/// `w3` forced puts every element of each triple in the asymmetric slot.
/// The scan parallelizes over `w1` and reports the least violating triple.
pub fn is_minimal_walsh(f: &TernaryFunction) -> Result<MinimalityVerdict, ConstructionError> {
    let table = walsh_table(f);
    if !table.dimension_ok() {
        return Err(ConstructionError::LinearForm);
    }
    let m = f.m;
    let size = f.values.len();
    let target = 2 * size as i64;
    // Flat digit table so each w3 lookup is a handful of adds.
    let mut digit_table = vec![0u8; size * m];
    for idx in 0..size {
        digit_table[idx * m..(idx + 1) * m].copy_from_slice(&digits_base3(m, idx));
    }
    let entries = table.doubled_re();
    let violation = (0..size).into_par_iter().find_map_first(|w1| {
        let d1 = entries[w1];
        let dig1 = &digit_table[w1 * m..(w1 + 1) * m];
        for w2 in 0..size {
            if w2 == w1 {
                continue;
            }
            let dig2 = &digit_table[w2 * m..(w2 + 1) * m];
            let mut w3 = 0usize;
            for (a, b) in dig1.iter().zip(dig2) {
                w3 = w3 * 3 + usize::from((6 - a - b) % 3);
            }
            if w3 == w1 || w3 == w2 {
                continue;
            }
            let d2 = entries[w2];
            let d3 = entries[w3];
            if d1 + d2 - 2 * d3 == target {
                return Some(WalshWitness { w1, w2, w3, inequality: WalshInequality::Asymmetric });
            }
            if d1 + d2 + d3 == target {
                return Some(WalshWitness { w1, w2, w3, inequality: WalshInequality::Symmetric });
            }
        }
        None
    });
    Ok(match violation {
        None => MinimalityVerdict { outcome: Outcome::Minimal, method: Method::Walsh, witness: None },
        Some(w) => MinimalityVerdict {
            outcome: Outcome::NotMinimal,
            method: Method::Walsh,
            witness: Some(Witness::Walsh(w)),
        },
    })
}

/// The indicator g_(m,k): value 1 on the nonzero points of Hamming weight
/// at most k, value 0 elsewhere (in particular at the origin).
pub fn make_gmk(m: usize, k: usize) -> Result<TernaryFunction, ConstructionError> {
    if k == 0 || k > m {
        return Err(ConstructionError::WeightBoundOutOfRange { k, m });
    }
    let size = pow3(m)?;
    let mut values = vec![0u8; size];
    for (idx, v) in values.iter_mut().enumerate().skip(1) {
        let weight = digits_base3(m, idx).iter().filter(|&&d| d != 0).count();
        if weight <= k {
            *v = 1;
        }
    }
    TernaryFunction::new(m, values)
}

/// Parameter window in which the g_(m,k) code is certified minimal:
/// m >= 5 and 2 <= k <= (m-1)/2. Derived quantities use exact integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GmkParams {
    m: usize,
    k: usize,
}

impl GmkParams {
    pub fn new(m: usize, k: usize) -> Result<Self, ConstructionError> {
        if m >= 5 && k >= 2 && 2 * k < m {
            Ok(Self { m, k })
        } else {
            Err(ConstructionError::ParamsOutOfRange { m, k })
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Code length, `3^m - 1`.
    pub fn n(&self) -> Result<i128, ConstructionError> {
        Ok(pow3_i128(self.m)? - 1)
    }

    pub fn dimension(&self) -> usize {
        self.m + 1
    }

    /// Minimum distance `|S(m,k)| = sum_{j=1..k} 2^j C(m,j)`.
    pub fn min_weight(&self) -> Result<i128, ConstructionError> {
        ball_size(self.m, self.k)
    }

    /// Maximum weight `3^m - 3^(m-1) + 2^k C(m-1,k) - 1`.
    pub fn max_weight(&self) -> Result<i128, ConstructionError> {
        let base = pow3_i128(self.m)? - pow3_i128(self.m - 1)?;
        let peak = checked_pow2(self.k)?
            .checked_mul(binomial((self.m - 1) as u32, self.k as u32)?)
            .ok_or(ConstructionError::Overflow)?;
        Ok(base + peak - 1)
    }
}

fn pow3_i128(m: usize) -> Result<i128, ConstructionError> {
    3i128
        .checked_pow(u32::try_from(m).map_err(|_| ConstructionError::Overflow)?)
        .ok_or(ConstructionError::Overflow)
}

fn checked_pow2(e: usize) -> Result<i128, ConstructionError> {
    2i128
        .checked_pow(u32::try_from(e).map_err(|_| ConstructionError::Overflow)?)
        .ok_or(ConstructionError::Overflow)
}

/// `|S(m,k)| = sum_{j=1..k} 2^j C(m,j)`, the number of nonzero points of
/// weight at most k.
fn ball_size(m: usize, k: usize) -> Result<i128, ConstructionError> {
    let mut sum = 0i128;
    for j in 1..=k {
        let term = checked_pow2(j)?
            .checked_mul(binomial(m as u32, j as u32)?)
            .ok_or(ConstructionError::Overflow)?;
        sum = sum.checked_add(term).ok_or(ConstructionError::Overflow)?;
    }
    Ok(sum)
}

/// Closed-form weight distribution of the g_(m,k) code: weight 0 once;
/// for i = 1..m, weight `3^m - 3^(m-1) + Psi_k(i,m) - 1` with count
/// `2^(i+1) C(m,i)`; weight `|S(m,k)|` twice more; weight `3^m - 3^(m-1)`
/// another `3^m - 1` times. Coinciding weights merge by addition. Valid for
/// any 1 <= k <= m; the minimality certificate needs the tighter
/// [`GmkParams`] window.
pub fn distribution_gmk_closed(m: usize, k: usize) -> Result<WeightDistribution, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::DimensionTooLarge(0));
    }
    if k == 0 || k > m {
        return Err(ConstructionError::WeightBoundOutOfRange { k, m });
    }
    let base = pow3_i128(m)? - pow3_i128(m - 1)?;
    let mut dist = WeightDistribution::default();
    dist.add_count(0, 1);
    for i in 1..=m {
        let weight = base + lloyd(3, m as u32, k as u32, i as u32)? - 1;
        let count = checked_pow2(i + 1)?
            .checked_mul(binomial(m as u32, i as u32)?)
            .ok_or(ConstructionError::Overflow)?;
        dist.add_count(to_usize(weight)?, to_u64(count)?);
    }
    dist.add_count(to_usize(ball_size(m, k)?)?, 2);
    dist.add_count(to_usize(base)?, to_u64(pow3_i128(m)? - 1)?);
    Ok(dist)
}

fn to_usize(v: i128) -> Result<usize, ConstructionError> {
    usize::try_from(v).map_err(|_| ConstructionError::Overflow)
}

fn to_u64(v: i128) -> Result<u64, ConstructionError> {
    u64::try_from(v).map_err(|_| ConstructionError::Overflow)
}

/// Exact-integer certificate for a g_(m,k) code in the certified window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GmkCertificate {
    pub m: usize,
    pub k: usize,
    /// Code length, `3^m - 1`.
    pub n: u64,
    /// Dimension, m + 1.
    pub dim: usize,
    /// Minimum distance, `|S(m,k)|`.
    pub d: u64,
    pub w_min: u64,
    pub w_max: u64,
    /// Whether `w_min / w_max <= 2/3`, by the cross-multiplied inequality
    /// `3*|S(m,k)| <= 2*(3^m - 3^(m-1)) + 2^(k+1) C(m-1,k) - 2`.
    pub ratio_le_two_thirds: bool,
    /// Whether the Ashikhmin-Barg screen applies, i.e. `3*w_min > 2*w_max`.
    pub ab_satisfied: bool,
    /// Whether `|S(m,k)| != -2*(Psi_k(i,m) - 1)` for every 1 <= i <= m,
    /// ruling out spectral cover violations on triples through the origin.
    pub zero_triple_ok: bool,
}

/// Emits the closed-form certificate for the g_(m,k) code: parameters,
/// extreme weights, the exact ratio comparisons, and the origin-triple
/// check, all in integer arithmetic.
pub fn gmk_certificate(m: usize, k: usize) -> Result<GmkCertificate, ConstructionError> {
    let params = GmkParams::new(m, k)?;
    let d = params.min_weight()?;
    let w_max = params.max_weight()?;
    let base = pow3_i128(m)? - pow3_i128(m - 1)?;
    let peak2 = checked_pow2(k + 1)?
        .checked_mul(binomial((m - 1) as u32, k as u32)?)
        .ok_or(ConstructionError::Overflow)?;
    let ratio_le_two_thirds = 3 * d <= 2 * base + peak2 - 2;
    debug_assert_eq!(ratio_le_two_thirds, 3 * d <= 2 * w_max);
    let ab_satisfied = 3 * d > 2 * w_max;
    let mut zero_triple_ok = true;
    for i in 1..=m {
        if d == -2 * (lloyd(3, m as u32, k as u32, i as u32)? - 1) {
            zero_triple_ok = false;
        }
    }
    Ok(GmkCertificate {
        m,
        k,
        n: to_u64(params.n()?)?,
        dim: params.dimension(),
        d: to_u64(d)?,
        w_min: to_u64(d)?,
        w_max: to_u64(w_max)?,
        ratio_le_two_thirds,
        ab_satisfied,
        zero_triple_ok,
    })
}

/// A function f: GF(q)^m -> GF(q) with f(0) = 0 over an arbitrary prime
/// field, held as its value table in canonical point order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldFunction {
    field: PrimeField,
    m: usize,
    values: Vec<u16>,
}

impl FieldFunction {
    pub fn new(field: PrimeField, m: usize, values: Vec<u16>) -> Result<Self, ConstructionError> {
        let q = field.q() as usize;
        let expected = q
            .checked_pow(u32::try_from(m).map_err(|_| ConstructionError::DimensionTooLarge(m))?)
            .ok_or(ConstructionError::DimensionTooLarge(m))?;
        if m == 0 || values.len() != expected {
            return Err(ConstructionError::WrongTableLength { got: values.len(), expected });
        }
        for (index, &value) in values.iter().enumerate() {
            if value >= field.q() {
                return Err(ConstructionError::ValueOutOfRange { index, value, q: field.q() });
            }
        }
        if values[0] != 0 {
            return Err(ConstructionError::NonzeroAtOrigin);
        }
        Ok(Self { field, m, values })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[u16] {
        &self.values
    }

    /// Reinterprets a ternary table over GF(3).
    pub fn from_ternary(f: &TernaryFunction) -> Self {
        Self {
            field: PrimeField::new(3).expect("3 is prime"),
            m: f.m,
            values: f.values.iter().map(|&v| v as u16).collect(),
        }
    }

    /// Narrows to the ternary type when the field is GF(3).
    pub fn to_ternary(&self) -> Option<TernaryFunction> {
        if self.field.q() != 3 {
            return None;
        }
        TernaryFunction::new(self.m, self.values.iter().map(|&v| v as u8).collect()).ok()
    }
}

/// The prime-q generalization of [`build_cf`]: the `[q^m - 1, m + 1]` code
/// with the function row and the m coordinate rows. The full-dimension
/// hypothesis is checked by comparing `f` against all q^m linear forms
/// directly; no spectral shortcut is used, and minimality must be decided
/// by the generic checkers.
pub fn build_cf_general(f: &FieldFunction) -> Result<LinearCode, ConstructionError> {
    let q = f.field.q() as usize;
    let size = f.values.len();
    let m = f.m;
    // Direct comparison against every linear form w.x.
    let is_linear_form = (0..size).into_par_iter().any(|w| {
        let wd = {
            let mut d = vec![0u16; m];
            let mut rem = w;
            for slot in d.iter_mut().rev() {
                *slot = (rem % q) as u16;
                rem /= q;
            }
            d
        };
        (0..size).all(|x| {
            let mut dot = 0u32;
            let mut rem = x;
            for &wc in wd.iter().rev() {
                dot += (rem % q) as u32 * wc as u32;
                rem /= q;
            }
            f.values[x] as u32 == dot % q as u32
        })
    });
    if is_linear_form {
        return Err(ConstructionError::LinearForm);
    }
    Ok(LinearCode::new(function_rows(f.field, m, |idx| f.values[idx]))
        .expect("full rank is guaranteed by the linear-form check"))
}
