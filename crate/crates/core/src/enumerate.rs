//! Brute-force enumeration of monotone triangles and trapezoids.
//!
//! Everything in this module counts by explicit generation of rows, with
//! memoization on the row.  It is exponential in principle and meant for
//! desk-scale ground truth (rows of length up to about 7), not production
//! counting; the closed-form routes live in [`crate::counting`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An integer row, ordered left to right.
///
/// Enumeration requires the entries to be strictly increasing; construction
/// does not enforce that, because the same row type is also used as an
/// evaluation point for counting polynomials, where any integers are legal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BottomRow(Vec<i64>);

impl BottomRow {
    pub fn new(entries: Vec<i64>) -> Self {
        BottomRow(entries)
    }

    /// The row `(1, 2, ..., n)`.
    pub fn consecutive(n: usize) -> Self {
        BottomRow((1..=n as i64).collect())
    }

    /// The row `(1, ..., k-1, k+1, ..., n)`: consecutive with `k` removed.
    pub fn punctured(n: usize, k: usize) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::usage(format!(
                "column {k} out of range 1..={n}"
            )));
        }
        Ok(BottomRow(
            (1..=n as i64).filter(|&v| v != k as i64).collect(),
        ))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    fn require_strictly_increasing(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::usage("row must not be empty"));
        }
        if !self.is_strictly_increasing() {
            return Err(Error::usage(format!(
                "row ({self}) is not strictly increasing"
            )));
        }
        Ok(())
    }
}

impl FromStr for BottomRow {
    type Err = Error;

    /// Parses comma-separated integers, e.g. `"1,2,3"`.  Whitespace around
    /// entries is ignored.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::parse(s, "expected comma-separated integers"));
        }
        let mut entries = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            match token.parse::<i64>() {
                Ok(v) => entries.push(v),
                Err(_) => {
                    return Err(Error::parse(
                        token,
                        "expected an integer row entry",
                    ))
                }
            }
        }
        Ok(BottomRow(entries))
    }
}

impl fmt::Display for BottomRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// All rows that may sit directly above `row` in a monotone triangle:
/// one entry shorter, `row[i] <= above[i] <= row[i+1]`, strictly increasing.
/// With `strict_se` the upper bound tightens to `row[i+1] - 1` (every
/// south-east step strict), which forces the strict increase by itself.
fn rows_above(row: &[i64], strict_se: bool) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(row.len() - 1);
    extend_rows_above(row, strict_se, &mut cur, &mut out);
    out
}

fn extend_rows_above(
    row: &[i64],
    strict_se: bool,
    cur: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    let i = cur.len();
    if i == row.len() - 1 {
        out.push(cur.clone());
        return;
    }
    let mut lo = row[i];
    let hi = if strict_se { row[i + 1] - 1 } else { row[i + 1] };
    if !strict_se {
        if let Some(&prev) = cur.last() {
            lo = lo.max(prev + 1);
        }
    }
    for v in lo..=hi {
        cur.push(v);
        extend_rows_above(row, strict_se, cur, out);
        cur.pop();
    }
}

fn count_rows_above(
    row: &[i64],
    strict_se: bool,
    memo: &mut HashMap<Box<[i64]>, BigInt>,
) -> BigInt {
    if row.len() == 1 {
        return BigInt::one();
    }
    if let Some(count) = memo.get(row) {
        return count.clone();
    }
    let mut total = BigInt::zero();
    for above in rows_above(row, strict_se) {
        total += count_rows_above(&above, strict_se, memo);
    }
    memo.insert(row.into(), total.clone());
    total
}

/// Counts monotone triangles with the given bottom row: rows strictly
/// increasing, both diagonal directions weakly increasing.
pub fn count_monotone_triangles(row: &BottomRow) -> Result<BigInt> {
    row.require_strictly_increasing()?;
    let mut memo = HashMap::new();
    Ok(count_rows_above(row.entries(), false, &mut memo))
}

/// Counts monotone triangles that additionally increase strictly along every
/// south-east diagonal step.
pub fn count_strict_se_triangles(row: &BottomRow) -> Result<BigInt> {
    row.require_strictly_increasing()?;
    let mut memo = HashMap::new();
    Ok(count_rows_above(row.entries(), true, &mut memo))
}

/// Counts monotone trapezoids: the bottom `top.len()..=n` rows of a monotone
/// triangle of order `n`, with prescribed top row `top` and bottom row
/// `(1, ..., n)`.  A top row of length `n` can only be `(1, ..., n)` itself
/// and leaves the single-row trapezoid.
pub fn count_trapezoids(top: &BottomRow, n: usize) -> Result<BigInt> {
    top.require_strictly_increasing()?;
    if top.len() > n {
        return Err(Error::usage(format!(
            "top row ({top}) is longer than the bottom row (1,...,{n})"
        )));
    }
    if top.entries().iter().any(|&v| v < 1 || v > n as i64) {
        return Err(Error::usage(format!(
            "top row ({top}) has entries outside 1..={n}"
        )));
    }
    // Walk upward from the fixed bottom row, keeping a count per reachable
    // row, until the rows have the same length as `top`.
    let mut level: HashMap<Box<[i64]>, BigInt> = HashMap::new();
    level.insert(
        BottomRow::consecutive(n).entries().into(),
        BigInt::one(),
    );
    for _ in top.len()..n {
        let mut next: HashMap<Box<[i64]>, BigInt> = HashMap::new();
        for (row, count) in &level {
            for above in rows_above(row, false) {
                *next.entry(above.into()).or_insert_with(BigInt::zero) +=
                    count;
            }
        }
        level = next;
    }
    Ok(level
        .get(top.entries())
        .cloned()
        .unwrap_or_else(BigInt::zero))
}

/// Counts monotone triangles of order `n` whose bottom row is `(1, ..., n)`
/// and whose next-to-bottom row omits exactly the value `k`, i.e. triangles
/// with bottom row `(1, ..., k-1, k+1, ..., n)` of length `n - 1`.  Under the
/// bijection with alternating sign matrices this is the number of matrices
/// whose bottom row has its 1 in column `k`.
pub fn refined_bottom_count(n: usize, k: usize) -> Result<BigInt> {
    if k < 1 || k > n {
        return Err(Error::usage(format!("column {k} out of range 1..={n}")));
    }
    if n == 1 {
        return Ok(BigInt::one());
    }
    count_monotone_triangles(&BottomRow::punctured(n, k)?)
}
