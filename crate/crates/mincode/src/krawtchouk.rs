//! Exact integer evaluation of Krawtchouk and Lloyd polynomials.
//!
//! `K_t(x, m)` with alphabet parameter `q` is
//!
//! ```text
//! K_t(x, m) = sum_{j=0..t} (-1)^j (q-1)^(t-j) C(x, j) C(m-x, t-j)
//! ```
//!
//! and the Lloyd polynomial is the partial sum `Psi_k(x, m) = sum_{t=0..k}
//! K_t(x, m)`. Everything here is 128-bit signed integer arithmetic with
//! checked operations: a value either comes out exact or the call reports
//! overflow, never a wrapped result.

use crate::field::PrimeField;
use crate::vector::FieldVector;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KrawtchoukError {
    #[error("parameter out of range: {0}")]
    OutOfRange(&'static str),
    #[error("exact value exceeds 128-bit signed range")]
    Overflow,
    #[error("residue class counts differ ({0} vs {1}); the character sum is not rational")]
    ResidueImbalance(u64, u64),
}

/// Binomial coefficient as an exact integer, via a Pascal-triangle table.
/// `C(n, k) = 0` for `k > n`, matching the summation convention above.
pub fn binomial(n: u32, k: u32) -> Result<i128, KrawtchoukError> {
    Ok(Pascal::build(n)?.choose(n as i64, k as i64))
}

/// Rows `0..=max_n` of Pascal's triangle with checked additions.
struct Pascal {
    rows: Vec<Vec<i128>>,
}

impl Pascal {
    fn build(max_n: u32) -> Result<Self, KrawtchoukError> {
        let mut rows: Vec<Vec<i128>> = Vec::with_capacity(max_n as usize + 1);
        rows.push(vec![1]);
        for n in 1..=max_n as usize {
            let prev = &rows[n - 1];
            let mut row = vec![1i128; n + 1];
            for k in 1..n {
                row[k] = prev[k - 1].checked_add(prev[k]).ok_or(KrawtchoukError::Overflow)?;
            }
            rows.push(row);
        }
        Ok(Self { rows })
    }

    /// `C(n, k)`, zero outside `0 <= k <= n`.
    fn choose(&self, n: i64, k: i64) -> i128 {
        if k < 0 || n < 0 || k > n {
            return 0;
        }
        self.rows[n as usize][k as usize]
    }
}

fn check_params(q: u64, m: u32, t: u32, x: u32) -> Result<(), KrawtchoukError> {
    if q < 2 {
        return Err(KrawtchoukError::OutOfRange("q must be at least 2"));
    }
    if m < 1 {
        return Err(KrawtchoukError::OutOfRange("m must be a positive integer"));
    }
    if t > m {
        return Err(KrawtchoukError::OutOfRange("degree t must satisfy 0 <= t <= m"));
    }
    if x > m {
        return Err(KrawtchoukError::OutOfRange("argument x must satisfy 0 <= x <= m"));
    }
    Ok(())
}

/// `K_t(x, m)` for alphabet parameter `q`.
pub fn krawtchouk(q: u64, m: u32, t: u32, x: u32) -> Result<i128, KrawtchoukError> {
    check_params(q, m, t, x)?;
    let pascal = Pascal::build(m)?;
    krawtchouk_with(&pascal, q, m, t, x)
}

fn krawtchouk_with(pascal: &Pascal, q: u64, m: u32, t: u32, x: u32) -> Result<i128, KrawtchoukError> {
    let qm1 = (q - 1) as i128;
    let mut sum = 0i128;
    for j in 0..=t {
        let c_x = pascal.choose(x as i64, j as i64);
        if c_x == 0 {
            continue;
        }
        let c_rest = pascal.choose((m - x) as i64, (t - j) as i64);
        if c_rest == 0 {
            continue;
        }
        let term = qm1
            .checked_pow(t - j)
            .and_then(|p| p.checked_mul(c_x))
            .and_then(|p| p.checked_mul(c_rest))
            .ok_or(KrawtchoukError::Overflow)?;
        sum = if j % 2 == 0 {
            sum.checked_add(term)
        } else {
            sum.checked_sub(term)
        }
        .ok_or(KrawtchoukError::Overflow)?;
    }
    Ok(sum)
}

/// Lloyd polynomial `Psi_k(x, m) = sum_{t=0..k} K_t(x, m)`.
pub fn lloyd(q: u64, m: u32, k: u32, x: u32) -> Result<i128, KrawtchoukError> {
    check_params(q, m, k, x)?;
    let pascal = Pascal::build(m)?;
    let mut sum = 0i128;
    for t in 0..=k {
        sum = sum
            .checked_add(krawtchouk_with(&pascal, q, m, t, x)?)
            .ok_or(KrawtchoukError::Overflow)?;
    }
    Ok(sum)
}

/// Brute-force evaluation of the character sum `sum_{wt(v)=t} zeta_q^(u.v)`.
///
/// Enumerates every weight-`t` vector `v` in GF(q)^m, tallies the residue
/// classes of `u.v`, and certifies that the classes `1..q-1` appear equally
/// often (which forces the complex sum onto the rational line for prime q).
/// Returns `c_0 - c_1`, the exact integer value of the sum. This is an
/// independent cross-check for [`krawtchouk`], not a fast path: the cost is
/// `C(m, t) * (q-1)^t` dot products.
pub fn character_sum_oracle(u: &FieldVector, t: usize) -> Result<i128, KrawtchoukError> {
    let m = u.len();
    if t > m {
        return Err(KrawtchoukError::OutOfRange("weight t must satisfy 0 <= t <= m"));
    }
    let field = u.field();
    let q = field.q() as usize;
    let mut counts = vec![0u64; q];
    tally(field, u.entries(), 0, t, 0, &mut counts);
    for j in 2..q {
        if counts[j] != counts[1] {
            return Err(KrawtchoukError::ResidueImbalance(counts[1], counts[j]));
        }
    }
    let c1 = if q > 1 { counts[1] } else { 0 };
    Ok(counts[0] as i128 - c1 as i128)
}

/// Recursively place `remaining` nonzero coordinates at positions
/// `>= start`, accumulating the inner product residue.
fn tally(field: PrimeField, u: &[u16], start: usize, remaining: usize, dot: u16, counts: &mut [u64]) {
    if remaining == 0 {
        counts[dot as usize] += 1;
        return;
    }
    let m = u.len();
    for pos in start..=(m - remaining) {
        for value in field.nonzero_elements() {
            let d = field.add(dot, field.mul(value, u[pos]));
            tally(field, u, pos + 1, remaining - 1, d, counts);
        }
    }
}
