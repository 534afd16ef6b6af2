//! Golden files: canonical text of the known counting polynomials.
//!
//! The files under `golden/` pin the exact printed form of the
//! triangle-count polynomials for `n = 1..4` and the apex trapezoid
//! polynomials for `n = 1..6`.  They guard against regressions in both the
//! symbolic computation and the canonical printing order.  Each entry is a
//! `# <object> ...` header line followed by one polynomial per line in the
//! grammar of [`crate::text::parse_poly`].
//!
//! To regenerate after an intentional change, run
//! `cargo test -p monotri golden::tests::regenerate -- --ignored`.

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::text::parse_poly;

const ALPHA_TEXT: &str = include_str!("../golden/alpha.txt");
const GAMMA_TEXT: &str = include_str!("../golden/gamma.txt");

/// Sizes covered by the stored triangle-count polynomials.
pub const ALPHA_SIZES: std::ops::RangeInclusive<usize> = 1..=4;

/// Sizes covered by the stored apex trapezoid polynomials.
pub const GAMMA_SIZES: std::ops::RangeInclusive<usize> = 1..=6;

/// Raw stored text of the triangle-count polynomial for `n` rows.
pub fn alpha_text(n: usize) -> Result<&'static str> {
    entry_text(ALPHA_TEXT, &format!("# alpha n={n}"))
}

/// Raw stored text of the apex trapezoid polynomial of order `n`
/// (one variable: the apex entry over bottom row `(1, ..., n)`).
pub fn gamma_text(n: usize) -> Result<&'static str> {
    entry_text(GAMMA_TEXT, &format!("# gamma r={n} n={n}"))
}

/// The stored triangle-count polynomial, parsed.
pub fn alpha_entry(n: usize) -> Result<MultiPoly> {
    parse_poly(alpha_text(n)?, n)
}

/// The stored apex trapezoid polynomial, parsed (one variable).
pub fn gamma_entry(n: usize) -> Result<MultiPoly> {
    parse_poly(gamma_text(n)?, 1)
}

fn entry_text(file: &'static str, header: &str) -> Result<&'static str> {
    let mut lines = file.lines();
    while let Some(line) = lines.next() {
        if line.trim() == header {
            return match lines.next() {
                Some(poly) if !poly.trim().is_empty() => Ok(poly.trim()),
                _ => Err(Error::internal(format!(
                    "golden entry {header:?} has no polynomial line"
                ))),
            };
        }
    }
    Err(Error::internal(format!("no golden entry {header:?}")))
}
