//! Text formats for generator matrices and function tables.
//!
//! Generator matrix: line 1 is `q n k` in decimal; lines 2..k+1 hold n
//! space-separated residues each. Function table: line 1 is `p m`; line 2
//! holds the p^m values in canonical point order. Both formats require a
//! trailing newline and admit no comments; writing then parsing reproduces
//! the object exactly.

use crate::code::{CodeError, LinearCode};
use crate::field::{FieldError, PrimeField};
use crate::ternary::{ConstructionError, FieldFunction};
use crate::vector::{FieldVector, VectorError};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing trailing newline")]
    MissingTrailingNewline,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Vector(#[from] VectorError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

fn strict_lines(text: &str) -> Result<Vec<&str>, FormatError> {
    let body = text.strip_suffix('\n').ok_or(FormatError::MissingTrailingNewline)?;
    Ok(body.split('\n').collect())
}

fn parse_number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, FormatError> {
    token.parse().map_err(|_| syntax(line, format!("invalid {what}: {token:?}")))
}

fn parse_residue_line(line_no: usize, line: &str, expected: usize, q: u16) -> Result<Vec<u16>, FormatError> {
    let mut out = Vec::with_capacity(expected);
    for token in line.split_whitespace() {
        let value: u16 = parse_number(line_no, token, "residue")?;
        if value >= q {
            return Err(syntax(line_no, format!("residue {value} is not reduced mod {q}")));
        }
        out.push(value);
    }
    if out.len() != expected {
        return Err(syntax(line_no, format!("expected {expected} residues, found {}", out.len())));
    }
    Ok(out)
}

/// Renders a generator matrix in the text format.
pub fn write_generator(code: &LinearCode) -> String {
    let mut out = String::new();
    writeln!(out, "{} {} {}", code.field().q(), code.n(), code.k()).unwrap();
    for row in code.rows() {
        let mut first = true;
        for &e in row.entries() {
            if !first {
                out.push(' ');
            }
            write!(out, "{e}").unwrap();
            first = false;
        }
        out.push('\n');
    }
    out
}

/// Parses a generator matrix, including the rank check of
/// [`LinearCode::new`].
pub fn parse_generator(text: &str) -> Result<LinearCode, FormatError> {
    let lines = strict_lines(text)?;
    let header: Vec<&str> = lines[0].split_whitespace().collect();
    let [q, n, k] = header.as_slice() else {
        return Err(syntax(1, "header must be `q n k`"));
    };
    let q: u64 = parse_number(1, q, "modulus")?;
    let n: usize = parse_number(1, n, "length")?;
    let k: usize = parse_number(1, k, "dimension")?;
    if n == 0 || k == 0 {
        return Err(syntax(1, "n and k must be positive"));
    }
    if lines.len() != k + 1 {
        return Err(syntax(lines.len(), format!("expected {} generator rows, found {}", k, lines.len() - 1)));
    }
    let field = PrimeField::new(q)?;
    let mut rows = Vec::with_capacity(k);
    for (i, line) in lines[1..].iter().enumerate() {
        let entries = parse_residue_line(i + 2, line, n, field.q())?;
        rows.push(FieldVector::new(field, entries)?);
    }
    Ok(LinearCode::new(rows)?)
}

/// Renders a function table in the text format.
pub fn write_function(f: &FieldFunction) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", f.field().q(), f.m()).unwrap();
    let mut first = true;
    for &v in f.values() {
        if !first {
            out.push(' ');
        }
        write!(out, "{v}").unwrap();
        first = false;
    }
    out.push('\n');
    out
}

/// Parses a function table, including the `f(0) = 0` check.
pub fn parse_function(text: &str) -> Result<FieldFunction, FormatError> {
    let lines = strict_lines(text)?;
    let header: Vec<&str> = lines[0].split_whitespace().collect();
    let [p, m] = header.as_slice() else {
        return Err(syntax(1, "header must be `p m`"));
    };
    let p: u64 = parse_number(1, p, "modulus")?;
    let m: usize = parse_number(1, m, "dimension")?;
    if lines.len() != 2 {
        return Err(syntax(lines.len(), "expected exactly one value line"));
    }
    let field = PrimeField::new(p)?;
    let expected = (field.q() as usize)
        .checked_pow(u32::try_from(m).map_err(|_| syntax(1, "dimension too large"))?)
        .ok_or_else(|| syntax(1, "dimension too large"))?;
    let values = parse_residue_line(2, lines[1], expected, field.q())?;
    Ok(FieldFunction::new(field, m, values)?)
}
