//! Small exact-arithmetic helpers on top of `num-bigint` / `num-rational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Rising factorial `(x)_p = x (x+1) ... (x+p-1)`, with `(x)_0 = 1`.
pub fn rising_factorial(x: &BigInt, p: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..p {
        acc *= x + BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)` for machine-sized arguments.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Extracts the integer value of a rational, or reports an internal
/// consistency failure.  Used for formulas whose result is known to be an
/// integer; a fractional value is never rounded.
pub fn expect_integer(value: &BigRational, context: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::Internal(format!(
            "{context}: expected an integer, got {value}"
        )))
    }
}

/// Largest prime factor by trial division; intended for desk-scale values.
/// Returns `None` for `-1`, `0` and `1`.
pub fn largest_prime_factor(value: &BigInt) -> Option<BigInt> {
    let mut v = value.abs();
    if v <= BigInt::one() {
        return None;
    }
    let mut largest = BigInt::one();
    let two = BigInt::from(2);
    while (&v % &two).is_zero() {
        largest = two.clone();
        v /= &two;
    }
    let mut d = BigInt::from(3);
    while &d * &d <= v {
        while (&v % &d).is_zero() {
            largest = d.clone();
            v /= &d;
        }
        d += 2;
    }
    if v > BigInt::one() {
        largest = v;
    }
    Some(largest)
}
