//! Counting monotone triangles: the row recursion, the operator-product
//! formulas, the classical product formulas, and trapezoid polynomials.
//!
//! The count of monotone triangles with bottom row `(k_1, ..., k_n)` is a
//! polynomial function of the row.  [`alpha_poly`] computes that polynomial
//! by four independent symbolic routes, and [`alpha_eval`] evaluates it (or
//! falls back to direct enumeration).  The remaining functions cover the
//! classical exact product formulas that special rows reduce to, and the
//! polynomials counting monotone trapezoids.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::enumerate::{self, BottomRow};
use crate::error::{Error, Result};
use crate::number::{expect_integer, factorial, rat, rising_factorial};
use crate::operator::{self, DeltaFactoredOp, ShiftOperator};
use crate::poly::{MultiPoly, Var};
use crate::summation::{nested_sum, NestedSumSpec, SumBound};

/// Strategy for counting monotone triangles.
///
/// The four symbolic methods produce identical polynomials; brute force
/// enumerates triangles directly and is the ground truth the others are
/// tested against.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum AlphaMethod {
    /// Delete-last-row recursion, evaluated with symbolic nested sums.
    Recursion,
    /// Apply `prod_{p<q} (id + E_p D_q)` to the tableaux product.
    #[default]
    OperatorDirect,
    /// Apply `prod_{p<q} (id + E_q D_p)^-1`, each factor inverted by its
    /// terminating alternating series.
    OperatorInverse,
    /// Apply `prod_{p<q} (id + E_q^-1 D_p D_q)` to the shifted tableaux
    /// product.
    OperatorVariant,
    /// Enumerate the triangles row by row.
    BruteForce,
}

/// `prod_{i<j} (k_j - k_i) / (j - i)` in `n` variables.
///
/// At a strictly increasing integer row this is the number of semistandard
/// tableaux whose shape the row determines, equivalently the number of
/// monotone triangles over that row which increase strictly along every
/// south-east step.  It seeds the operator formulas.  Degree `n - 1` in
/// every variable.
pub fn ssyt_product_poly(n: usize) -> MultiPoly {
    assert!(n >= 1, "need at least one variable");
    let mut p = MultiPoly::one(n);
    for j in 2..=n {
        for i in 1..j {
            let d = &MultiPoly::variable(n, Var::new(j))
                - &MultiPoly::variable(n, Var::new(i));
            p = &p * &d.scale(&rat(1, (j - i) as i64));
        }
    }
    p
}

/// `prod_{i<j} (k_j - k_i + j - i) / (j - i)`, the seed of the
/// [`AlphaMethod::OperatorVariant`] formula.
fn shifted_ssyt_product_poly(n: usize) -> MultiPoly {
    let mut p = MultiPoly::one(n);
    for j in 2..=n {
        for i in 1..j {
            let mut d = &MultiPoly::variable(n, Var::new(j))
                - &MultiPoly::variable(n, Var::new(i));
            d += &MultiPoly::from_int(n, (j - i) as i64);
            p = &p * &d.scale(&rat(1, (j - i) as i64));
        }
    }
    p
}

/// All pairs `(p, q)` with `1 <= p < q <= n` in lexicographic order: the
/// factor index set of the operator products.  The factors commute, so the
/// order is a convention, not a requirement.
fn ordered_pairs(n: usize) -> Vec<(Var, Var)> {
    let mut pairs = Vec::new();
    for p in 1..=n {
        for q in (p + 1)..=n {
            pairs.push((Var::new(p), Var::new(q)));
        }
    }
    pairs
}

/// The polynomial in `n` variables whose value at any strictly increasing
/// integer row is the number of monotone triangles with that bottom row.
///
/// All symbolic methods return the same polynomial.  `BruteForce` is
/// rejected: it produces individual counts, not a polynomial.
pub fn alpha_poly(n: usize, method: AlphaMethod) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::usage("triangle size must be at least 1"));
    }
    match method {
        AlphaMethod::Recursion => Ok(alpha_by_recursion(n)),
        AlphaMethod::OperatorDirect => Ok(alpha_by_operator_direct(n)),
        AlphaMethod::OperatorInverse => Ok(alpha_by_operator_inverse(n)),
        AlphaMethod::OperatorVariant => Ok(alpha_by_operator_variant(n)),
        AlphaMethod::BruteForce => Err(Error::usage(
            "brute force yields counts, not polynomials; pick a symbolic method",
        )),
    }
}

fn alpha_by_recursion(n: usize) -> MultiPoly {
    // One row is a single unconstrained entry.
    let mut p = MultiPoly::one(1);
    for m in 2..=n {
        p = nested_sum(&p, &NestedSumSpec::row(m))
            .expect("row spec matches the summand arity");
    }
    p
}

fn alpha_by_operator_direct(n: usize) -> MultiPoly {
    let mut p = ssyt_product_poly(n);
    for (vp, vq) in ordered_pairs(n) {
        let op = &ShiftOperator::identity(n)
            + &(&ShiftOperator::shift(n, vp, 1) * &ShiftOperator::delta(n, vq));
        p = op.apply(&p);
    }
    p
}

fn alpha_by_operator_inverse(n: usize) -> MultiPoly {
    let mut p = ssyt_product_poly(n);
    for (vp, vq) in ordered_pairs(n) {
        let factor = DeltaFactoredOp::new(vp, ShiftOperator::shift(n, vq, 1));
        p = factor.inverse_apply(&p);
    }
    p
}

fn alpha_by_operator_variant(n: usize) -> MultiPoly {
    let mut p = shifted_ssyt_product_poly(n);
    for (vp, vq) in ordered_pairs(n) {
        let op = &ShiftOperator::identity(n)
            + &(&(&ShiftOperator::shift(n, vq, -1)
                * &ShiftOperator::delta(n, vp))
                * &ShiftOperator::delta(n, vq));
        p = op.apply(&p);
    }
    p
}

/// Counts monotone triangles with the given bottom row.
///
/// Symbolic methods evaluate [`alpha_poly`] at the row, which accepts any
/// integer entries; the result is the triangle count whenever the row is
/// strictly increasing.  `BruteForce` requires a strictly increasing row.
pub fn alpha_eval(row: &BottomRow, method: AlphaMethod) -> Result<BigInt> {
    if row.is_empty() {
        return Err(Error::usage("row must not be empty"));
    }
    if method == AlphaMethod::BruteForce {
        return enumerate::count_monotone_triangles(row);
    }
    let poly = alpha_poly(row.len(), method)?;
    let point: Vec<BigInt> =
        row.entries().iter().map(|&v| BigInt::from(v)).collect();
    expect_integer(&poly.eval(&point), "triangle count")
}

/// The number of `n x n` alternating sign matrices,
/// `prod_{j=1}^{n} (3j-2)! / (n+j-1)!`, equal to the number of monotone
/// triangles with bottom row `(1, ..., n)`.
pub fn asm_count(n: usize) -> BigInt {
    assert!(n >= 1, "size must be at least 1");
    let n = n as u64;
    let mut value = BigRational::one();
    for j in 1..=n {
        value *= BigRational::new(factorial(3 * j - 2), factorial(n + j - 1));
    }
    expect_integer(&value, "matrix count")
        .expect("the product of factorial ratios is an integer")
}

/// The number of `n x n` alternating sign matrices whose first row has its
/// unique 1 in column `k`:
/// `(k)_{n-1} (1+n-k)_{n-1} / (n-1)! * prod_{j=1}^{n-1} (3j-2)! / (n+j-1)!`
/// with `(x)_m` the rising factorial.
pub fn refined_asm(n: usize, k: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::usage("size must be at least 1"));
    }
    if k < 1 || k > n {
        return Err(Error::usage(format!("column {k} out of range 1..={n}")));
    }
    let m = (n - 1) as u64;
    let mut value = BigRational::new(
        rising_factorial(&BigInt::from(k), m)
            * rising_factorial(&BigInt::from(1 + n - k), m),
        factorial(m),
    );
    for j in 1..=m {
        value *=
            BigRational::new(factorial(3 * j - 2), factorial(n as u64 + j - 1));
    }
    expect_integer(&value, "refined matrix count")
}

/// The number of vertically symmetric `(2n+1) x (2n+1)` alternating sign
/// matrices, `n! / ((2n)! 2^n) * prod_{j=1}^{n} (6j-2)! / (2n+2j-1)!`,
/// equal to the number of monotone triangles with bottom row
/// `(1, 3, ..., 2n-1)`.
pub fn vsasm_count(n: usize) -> BigInt {
    assert!(n >= 1, "size must be at least 1");
    let n = n as u64;
    let mut value = BigRational::new(
        factorial(n),
        factorial(2 * n) * BigInt::from(2u8).pow(n as u32),
    );
    for j in 1..=n {
        value *= BigRational::new(
            factorial(6 * j - 2),
            factorial(2 * n + 2 * j - 1),
        );
    }
    expect_integer(&value, "symmetric matrix count")
        .expect("the product formula is integral")
}

/// Counts monotone triangles over the given bottom row that increase
/// strictly along every south-east step, by evaluating
/// [`ssyt_product_poly`].
pub fn beta_count(row: &BottomRow) -> Result<BigInt> {
    if row.is_empty() || !row.is_strictly_increasing() {
        return Err(Error::usage(format!(
            "row ({row}) must be strictly increasing"
        )));
    }
    let point: Vec<BigInt> =
        row.entries().iter().map(|&v| BigInt::from(v)).collect();
    expect_integer(
        &ssyt_product_poly(row.len()).eval(&point),
        "tableaux count",
    )
}

/// The polynomial in `n - r + 1` variables whose value at a strictly
/// increasing row inside `[1, n]` counts monotone trapezoids with that top
/// row and bottom row `(1, ..., n)` (the bottom `r` rows of a triangle of
/// order `n`).
///
/// Built by iterating the nested sum with the outer bounds pinned to the
/// constants 1 and `n`; a single row of any length is unconstrained, so the
/// `r = 1` polynomial is 1.  Degree at most `2r - 2` in every variable.
pub fn gamma_poly(r: usize, n: usize) -> Result<MultiPoly> {
    if r < 1 || n < 1 {
        return Err(Error::usage("sizes must be at least 1"));
    }
    if r > n {
        return Err(Error::usage(format!(
            "trapezoid with {r} rows does not fit in a triangle of order {n}"
        )));
    }
    let mut p = MultiPoly::one(n);
    for s in 2..=r {
        let out = n - s + 1;
        let mut bounds = Vec::with_capacity(out + 2);
        bounds.push(SumBound::int(1));
        for i in 1..=out {
            bounds.push(SumBound::var(Var::new(i)));
        }
        bounds.push(SumBound::int(n as i64));
        let spec = NestedSumSpec::new(bounds, out)?;
        p = nested_sum(&p, &spec)?;
    }
    Ok(p)
}

/// True iff the symmetrization operator on each adjacent variable pair
/// annihilates the triangle-count polynomial of order `n`.  This vanishing
/// is the structural property that pins the polynomial down.
pub fn t_prime_vanishing_check(n: usize) -> bool {
    assert!(n >= 1, "size must be at least 1");
    let alpha = alpha_poly(n, AlphaMethod::OperatorDirect)
        .expect("symbolic method cannot fail");
    (1..n).all(|i| operator::t_prime(&alpha, Var::new(i)).is_zero())
}
