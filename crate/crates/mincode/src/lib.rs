//! Exact-arithmetic construction and certification of minimal linear codes
//! over prime fields.
//!
//! The crate builds linear codes from generator matrices or from functions
//! f: GF(q)^m -> GF(q), computes exact weight distributions by exhaustive
//! enumeration or from Walsh spectra, and decides minimality by four
//! independent procedures: a definitional support scan, a weight-sum
//! criterion, a spectral scan for the ternary function construction, and
//! the Ashikhmin-Barg ratio screen. All arithmetic is exact integer
//! arithmetic; floating point appears nowhere.

pub mod code;
pub mod field;
pub mod format;
pub mod krawtchouk;
pub mod minimality;
pub mod ternary;
pub mod vector;

pub use code::{CodeError, LinearCode, WeightDistribution};
pub use field::{FieldError, PrimeField};
pub use vector::{FieldVector, VectorError};
