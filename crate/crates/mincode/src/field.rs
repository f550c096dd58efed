//! Prime-field scalar arithmetic on canonical residues.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} does not fit the residue width")]
    TooLarge(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// The prime field GF(q), identified by its modulus.
///
/// Elements are canonical residues in `[0, q)` stored as `u16`; every
/// operation reduces back into that range. Primality is checked once at
/// construction so downstream code can rely on inverses existing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u16,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self, FieldError> {
        if q > u16::MAX as u64 {
            return Err(FieldError::TooLarge(q));
        }
        if !is_prime(q) {
            return Err(FieldError::NotPrime(q));
        }
        Ok(Self { q: q as u16 })
    }

    pub fn q(&self) -> u16 {
        self.q
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        ((a as u32 + b as u32) % self.q as u32) as u16
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        ((a as u32 + self.q as u32 - b as u32) % self.q as u32) as u16
    }

    pub fn neg(&self, a: u16) -> u16 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        ((a as u32 * b as u32) % self.q as u32) as u16
    }

    /// Multiplicative inverse by Fermat exponentiation; `inv(0)` is an error.
    pub fn inv(&self, a: u16) -> Result<u16, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.q as u32 - 2))
    }

    fn pow(&self, base: u16, mut exp: u32) -> u16 {
        let mut base = base % self.q;
        let mut acc: u16 = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// All residues `0..q`.
    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.q
    }

    /// The nonzero residues `1..q`.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = u16> {
        1..self.q
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
