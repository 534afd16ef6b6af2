//! Symbolic summation over integer intervals and interleaved regions.
//!
//! Interval sums are defined through the antidifference: if `q` is the
//! polynomial with `q(y) = p(0) + p(1) + ... + p(y)`, then
//! `sum_{x=lo}^{hi} p := q(hi) - q(lo-1)`.  On integer bounds this evaluates
//! to
//!
//! * `p(lo) + ... + p(hi)`          when `lo <= hi`,
//! * `0`                           when `hi = lo - 1`,
//! * `-(p(hi+1) + ... + p(lo-1))`  when `hi + 1 <= lo - 1`,
//!
//! the unique extension compatible with polynomial identities.  Bounds may
//! be integers or another variable plus an integer offset, so the result of
//! a sum is again a polynomial.
//!
//! The nested sum over a bound row `(b_1, ..., b_m)` sums a polynomial in
//! `(l_1, ..., l_{m-1})` over the interleaved region
//! `b_1 <= l_1 <= b_2 <= ... <= l_{m-1} <= b_m` with adjacent `l`'s
//! distinct.  For general bounds it is *defined* inductively by splitting
//! off the last summed variable:
//!
//! ```text
//! nested(b_1..b_m; A) = nested(b_1..b_{m-1}; sum_{l_{m-1}=b_{m-1}+1}^{b_m} A)
//!                     + nested(b_1..b_{m-2}, b_{m-1}-1; A[l_{m-1} := b_{m-1}])
//! ```
//!
//! with the single interval sum as base case.  For strictly increasing
//! integer bounds this agrees with direct enumeration of the region; the
//! inductive form extends it to arbitrary (symbolic) bounds.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Var};

/// One bound of a sum: an integer, or a variable plus an integer offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumBound {
    Int(i64),
    Shifted(Var, i64),
}

impl SumBound {
    pub fn int(value: i64) -> Self {
        SumBound::Int(value)
    }

    pub fn var(v: Var) -> Self {
        SumBound::Shifted(v, 0)
    }

    pub fn var_plus(v: Var, offset: i64) -> Self {
        SumBound::Shifted(v, offset)
    }

    /// The bound moved by a constant: `b + d`.
    pub fn offset_by(self, d: i64) -> Self {
        match self {
            SumBound::Int(c) => SumBound::Int(c + d),
            SumBound::Shifted(v, off) => SumBound::Shifted(v, off + d),
        }
    }

    fn referenced_var(&self) -> Option<Var> {
        match self {
            SumBound::Int(_) => None,
            SumBound::Shifted(v, _) => Some(*v),
        }
    }
}

impl std::fmt::Display for SumBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SumBound::Int(c) => write!(f, "{c}"),
            SumBound::Shifted(v, 0) => write!(f, "{v}"),
            SumBound::Shifted(v, off) if *off > 0 => write!(f, "{v}+{off}"),
            SumBound::Shifted(v, off) => write!(f, "{v}{off}"),
        }
    }
}

/// A nested sum: `bounds.len()` bounds over `bounds.len() - 1` summed
/// variables.  Bound variables refer to the output space of `out_vars`
/// variables; the summand lives in its own space of `bounds.len() - 1`
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedSumSpec {
    bounds: Vec<SumBound>,
    out_vars: usize,
}

impl NestedSumSpec {
    pub fn new(bounds: Vec<SumBound>, out_vars: usize) -> Result<Self> {
        if bounds.len() < 2 {
            return Err(Error::usage("a nested sum needs at least two bounds"));
        }
        for b in &bounds {
            if let Some(v) = b.referenced_var() {
                if v.id() > out_vars {
                    return Err(Error::usage(format!(
                        "bound variable {v} exceeds the output space ({out_vars} variables)"
                    )));
                }
            }
        }
        Ok(NestedSumSpec { bounds, out_vars })
    }

    /// The full variable row `(k_1, ..., k_n)` as bounds.
    pub fn row(n: usize) -> Self {
        assert!(n >= 2);
        NestedSumSpec {
            bounds: (1..=n).map(|i| SumBound::var(Var::new(i))).collect(),
            out_vars: n,
        }
    }

    pub fn bounds(&self) -> &[SumBound] {
        &self.bounds
    }

    pub fn out_vars(&self) -> usize {
        self.out_vars
    }

    pub fn summed_vars(&self) -> usize {
        self.bounds.len() - 1
    }
}

/// Builds `C(x + 1, m)` as a polynomial in `x`:
/// `(x+1) x (x-1) ... (x-m+2) / m!`.
fn binom_shifted(nvars: usize, x: Var, m: u32) -> MultiPoly {
    assert!(m >= 1);
    let xp = MultiPoly::variable(nvars, x);
    let mut acc = MultiPoly::one(nvars);
    for t in 0..m {
        acc = &acc * &(&xp + &MultiPoly::from_int(nvars, 1 - t as i64));
    }
    let m_fact = crate::number::factorial(m as u64);
    acc.scale(&num_rational::BigRational::new(1.into(), m_fact))
}

/// The unit antidifference of `p` in the variable `x`: the polynomial `q`
/// (in the same variable slot) with `q(y) = p(0) + p(1) + ... + p(y)`,
/// equivalently `q(y) - q(y-1) = p(y)` and `q(-1) = 0`.
///
/// Computed through the binomial basis: `p = sum_j c_j * C(x, j)` with
/// `c_j = (D_x^j p)|_{x=0}`, and `C(x, j)` sums to `C(y+1, j+1)`.
pub fn unit_antidifference(p: &MultiPoly, x: Var) -> MultiPoly {
    assert!(x.id() <= p.nvars());
    let nvars = p.nvars();
    let Some(deg) = p.degree(x) else {
        return MultiPoly::zero(nvars);
    };
    let zero = BigInt::zero();
    let mut cur = p.clone();
    let mut q = MultiPoly::zero(nvars);
    for j in 0..=deg {
        let c = cur.subst_int(x, &zero);
        if !c.is_zero() {
            q += &(&c * &binom_shifted(nvars, x, j + 1));
        }
        cur = cur.delta(x);
        if cur.is_zero() {
            break;
        }
    }
    q
}

/// Substitutes a bound for `x`: `x := bound + extra`.
fn subst_bound(q: &MultiPoly, x: Var, bound: &SumBound, extra: i64) -> MultiPoly {
    match bound {
        SumBound::Int(c) => q.subst_int(x, &BigInt::from(c + extra)),
        SumBound::Shifted(w, off) => {
            assert!(*w != x, "bound refers to the summed variable");
            q.subst_affine(x, *w, off + extra)
        }
    }
}

/// `sum_{x=lo}^{hi} p`, with the extension to arbitrary bounds described in
/// the module docs.  The bounds may reference other variables of `p`'s
/// space, never `x` itself; `x` does not occur in the result.
pub fn interval_sum(p: &MultiPoly, x: Var, lo: &SumBound, hi: &SumBound) -> MultiPoly {
    let q = unit_antidifference(p, x);
    &subst_bound(&q, x, hi, 0) - &subst_bound(&q, x, lo, -1)
}

/// Recursive nested sum over an ambient space: sums away `lvars` (none of
/// which may appear in any bound).
fn nested_over(p: &MultiPoly, bounds: &[SumBound], lvars: &[Var]) -> MultiPoly {
    debug_assert_eq!(bounds.len(), lvars.len() + 1);
    let m = bounds.len();
    if m == 2 {
        return interval_sum(p, lvars[0], &bounds[0], &bounds[1]);
    }
    let last = lvars[m - 2];
    // upper branch: the last variable strictly above its left bound
    let inner = interval_sum(p, last, &bounds[m - 2].offset_by(1), &bounds[m - 1]);
    let upper = nested_over(&inner, &bounds[..m - 1], &lvars[..m - 2]);
    // pinned branch: the last variable equal to its left bound, which then
    // shrinks by one for the previous variable
    let pinned = subst_bound(p, last, &bounds[m - 2], 0);
    let mut shrunk: Vec<SumBound> = bounds[..m - 2].to_vec();
    shrunk.push(bounds[m - 2].offset_by(-1));
    let lower = nested_over(&pinned, &shrunk, &lvars[..m - 2]);
    &upper + &lower
}

/// The nested sum of `p` over `spec`.  `p` must have exactly
/// `spec.summed_vars()` variables; the result has `spec.out_vars()`.
pub fn nested_sum(p: &MultiPoly, spec: &NestedSumSpec) -> Result<MultiPoly> {
    let m = spec.bounds.len();
    if p.nvars() != m - 1 {
        return Err(Error::usage(format!(
            "summand has {} variables, bounds need {}",
            p.nvars(),
            m - 1
        )));
    }
    let out = spec.out_vars;
    let ambient = out + (m - 1);
    let p_amb = p.shift_indices(out, ambient);
    let lvars: Vec<Var> = (1..=m - 1).map(|j| Var::new(out + j)).collect();
    let result = nested_over(&p_amb, &spec.bounds, &lvars);
    Ok(result.truncate_vars(out))
}

/// Checks the merge rule at an interior split position `i`
/// (`2 <= i <= m-1`, 1-based): with `y` the i-th bound and
///
/// `f(x, z) = nested(b_1..b_{i-1}, x; .) nested(z, b_{i+1}..b_m; .) p`,
///
/// the full nested sum must equal `f(y-1, y) + f(y, y+1) - f(y-1, y+1)`.
/// The comparison is between polynomials, so a `true` certifies the
/// identity for all integer values.
pub fn merge_rule_check(p: &MultiPoly, spec: &NestedSumSpec, i: usize) -> Result<bool> {
    let m = spec.bounds.len();
    if !(2..=m - 1).contains(&i) {
        return Err(Error::usage(format!(
            "split position {i} is not interior (2..={})",
            m - 1
        )));
    }
    if p.nvars() != m - 1 {
        return Err(Error::usage(format!(
            "summand has {} variables, bounds need {}",
            p.nvars(),
            m - 1
        )));
    }
    let out = spec.out_vars;
    // ambient: k_1..k_out, then x, z, then l_1..l_{m-1}
    let ambient = out + 2 + (m - 1);
    let x = Var::new(out + 1);
    let z = Var::new(out + 2);
    let p_amb = p.shift_indices(out + 2, ambient);
    let lvars: Vec<Var> = (1..=m - 1).map(|j| Var::new(out + 2 + j)).collect();

    // right part: bounds (z, b_{i+1}, ..., b_m) over l_i..l_{m-1}
    let mut right_bounds = vec![SumBound::var(z)];
    right_bounds.extend_from_slice(&spec.bounds[i..]);
    let right = nested_over(&p_amb, &right_bounds, &lvars[i - 1..]);

    // left part: bounds (b_1, ..., b_{i-1}, x) over l_1..l_{i-1}
    let mut left_bounds = spec.bounds[..i - 1].to_vec();
    left_bounds.push(SumBound::var(x));
    let f = nested_over(&right, &left_bounds, &lvars[..i - 1]);

    let y = &spec.bounds[i - 1];
    let merge = |dx: i64, dz: i64| -> MultiPoly {
        subst_bound(&subst_bound(&f, x, y, dx), z, y, dz)
    };
    let rhs = &(&merge(-1, 0) + &merge(0, 1)) - &merge(-1, 1);

    let lhs = nested_sum(p, spec)?.extend_vars(ambient);
    Ok(lhs == rhs)
}
