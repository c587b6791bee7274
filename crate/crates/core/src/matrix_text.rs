//! Plain-text matrices: one row per line, entries written `re±imj` and
//! separated by single spaces, `2ⁿ` rows.
//!
//! ```text
//! 0.5+0j 0+0.5j
//! 0-0.5j 0.5+0j
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::{Complex, Real};

/// Parse one `re±imj` entry.
pub fn parse_entry<T: Real>(token: &str) -> Result<Complex<T>> {
    let bad = || Error::Parse(format!("malformed entry {token:?}, expected re±imj"));
    let body = token.strip_suffix('j').ok_or_else(bad)?;
    let bytes = body.as_bytes();
    // the imaginary part starts at the last sign that is not an exponent sign
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'))
        .ok_or_else(bad)?;
    let (re, im) = body.split_at(split);
    let parse = |s: &str| -> Result<T> {
        let v: f64 = s.parse().map_err(|_| bad())?;
        if !v.is_finite() {
            return Err(Error::Parse(format!("non-finite entry {token:?}")));
        }
        Ok(T::of(v))
    };
    Ok(Complex::new(parse(re)?, parse(im)?))
}

/// Format one entry with the shortest decimal that reads back exactly.
pub fn format_entry<T: Real>(z: Complex<T>) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}j", z.re, sign, z.im.abs())
}

/// Parse a square matrix whose dimension is a power of two, at least 2.
/// Blank lines are ignored.
pub fn parse_matrix<T: Real>(text: &str) -> Result<ComplexMatrix<T>> {
    let mut data = Vec::new();
    let mut rows = 0;
    let mut cols = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let entries = line
            .split(' ')
            .map(parse_entry::<T>)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        match cols {
            None => cols = Some(entries.len()),
            Some(n) if n != entries.len() => {
                return Err(Error::Parse(format!(
                    "line {}: expected {n} entries, found {}",
                    lineno + 1,
                    entries.len()
                )));
            }
            Some(_) => {}
        }
        data.extend(entries);
        rows += 1;
    }
    let cols = cols.ok_or_else(|| Error::Parse("empty matrix".into()))?;
    if rows != cols {
        return Err(Error::Parse(format!(
            "matrix is {rows}×{cols}, expected square"
        )));
    }
    if rows < 2 || !rows.is_power_of_two() {
        return Err(Error::Parse(format!(
            "dimension {rows} is not a power of two ≥ 2"
        )));
    }
    ComplexMatrix::from_vec(rows, cols, data)
}

/// Inverse of [`parse_matrix`]; every row ends with `\n`.
pub fn format_matrix<T: Real>(m: &ComplexMatrix<T>) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if c > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", format_entry(m[(r, c)]));
        }
        out.push('\n');
    }
    out
}
