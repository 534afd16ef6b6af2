//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Invariants:
//! * every polynomial has a fixed variable count `nvars`; the variables are
//!   positional and print as `k1, k2, ...`;
//! * terms are keyed by exponent vectors of length `nvars`; a zero
//!   coefficient is never stored, so structural equality is polynomial
//!   equality;
//! * coefficients are reduced arbitrary-precision rationals (normalization
//!   is eager, in the constructor of `BigRational`).
//!
//! Operations with two operands require equal `nvars` and panic otherwise;
//! arity is a programming error, not an input error.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A positional variable id, 1-based: `Var::new(1)` prints as `k1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(usize);

impl Var {
    pub fn new(id: usize) -> Self {
        assert!(id >= 1, "variable ids are 1-based");
        Var(id)
    }

    pub fn id(self) -> usize {
        self.0
    }

    pub(crate) fn index(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k{}", self.0)
    }
}

type Key = Box<[u16]>;

/// Sparse polynomial in `nvars` variables over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Key, BigRational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, value: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars].into_boxed_slice(), value);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn from_int(nvars: usize, value: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(value)))
    }

    /// The monomial `k_v`.
    pub fn variable(nvars: usize, v: Var) -> Self {
        assert!(v.id() <= nvars, "variable {v} out of range (nvars = {nvars})");
        let mut exps = vec![0u16; nvars];
        exps[v.index()] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps.into_boxed_slice(), BigRational::one());
        p
    }

    /// A single term `coeff * k1^e1 * ... * kn^en`.
    pub fn monomial(nvars: usize, exps: &[u16], coeff: BigRational) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exps.to_vec().into_boxed_slice(), coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u16], &BigRational)> {
        self.terms.iter().map(|(k, c)| (k.as_ref(), c))
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, exps: &[u16]) -> BigRational {
        assert_eq!(exps.len(), self.nvars);
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// If the polynomial is constant, returns its value.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (key, c) = self.terms.iter().next().unwrap();
                key.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, key: Key, coeff: BigRational) {
        debug_assert_eq!(key.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, point: &[BigInt]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (key, coeff) in &self.terms {
            let mut m = BigInt::one();
            for (i, &e) in key.iter().enumerate() {
                if e > 0 {
                    m *= point[i].pow(e as u32);
                }
            }
            acc += coeff * BigRational::from_integer(m);
        }
        acc
    }

    pub fn eval_i64(&self, point: &[i64]) -> BigRational {
        let point: Vec<BigInt> = point.iter().map(|&x| BigInt::from(x)).collect();
        self.eval(&point)
    }

    /// Partial evaluation: substitutes the integer `value` for `v`, leaving a
    /// polynomial in the same variable space (with `v` no longer occurring).
    pub fn subst_int(&self, v: Var, value: &BigInt) -> Self {
        assert!(v.id() <= self.nvars);
        let idx = v.index();
        let mut out = Self::zero(self.nvars);
        for (key, coeff) in &self.terms {
            let e = key[idx];
            let mut new_key = key.clone();
            new_key[idx] = 0;
            let factor = if e == 0 {
                BigRational::from_integer(BigInt::one())
            } else {
                BigRational::from_integer(value.pow(e as u32))
            };
            out.add_term(new_key, coeff * factor);
        }
        out
    }

    /// Substitutes `v := w + offset`.  `w` may equal `v` (a pure shift) or be
    /// a different variable (then `v` no longer occurs in the result).
    pub fn subst_affine(&self, v: Var, w: Var, offset: i64) -> Self {
        assert!(v.id() <= self.nvars && w.id() <= self.nvars);
        let (vi, wi) = (v.index(), w.index());
        if vi == wi && offset == 0 {
            return self.clone();
        }
        let off = BigInt::from(offset);
        let mut out = Self::zero(self.nvars);
        for (key, coeff) in &self.terms {
            let e = key[vi];
            if e == 0 {
                out.add_term(key.clone(), coeff.clone());
                continue;
            }
            // (k_w + offset)^e expanded against the rest of the monomial
            let mut base = key.clone();
            base[vi] = 0;
            let mut c_pow = BigInt::one();
            for j in (0..=e).rev() {
                // exponent j on k_w, coefficient C(e, j) * offset^(e-j)
                let w_coef = crate::number::binomial(e as u64, j as u64) * &c_pow;
                if !w_coef.is_zero() {
                    let mut new_key = base.clone();
                    new_key[wi] = new_key[wi]
                        .checked_add(j)
                        .expect("exponent overflow");
                    out.add_term(new_key, coeff * BigRational::from_integer(w_coef));
                }
                c_pow *= &off;
            }
        }
        out
    }

    /// Shift of a single variable: `k_v := k_v + offset`.
    pub fn shift(&self, v: Var, offset: i64) -> Self {
        self.subst_affine(v, v, offset)
    }

    /// Simultaneous shift of all variables: `k_i := k_i + offsets[i]`.
    pub fn multi_shift(&self, offsets: &[i64]) -> Self {
        assert_eq!(offsets.len(), self.nvars);
        if offsets.iter().all(|&c| c == 0) {
            return self.clone();
        }
        let mut out = Self::zero(self.nvars);
        let mut partial: Vec<(Key, BigRational)> = Vec::new();
        for (key, coeff) in &self.terms {
            partial.clear();
            partial.push((vec![0u16; self.nvars].into_boxed_slice(), coeff.clone()));
            for (i, (&e, &c)) in key.iter().zip(offsets).enumerate() {
                if e == 0 {
                    continue;
                }
                if c == 0 {
                    for (k, _) in partial.iter_mut() {
                        k[i] = e;
                    }
                    continue;
                }
                // weights[j] = C(e, j) * c^(e-j), the coefficient of k_i^j
                let off = BigInt::from(c);
                let mut weights = vec![BigInt::zero(); e as usize + 1];
                let mut c_pow = BigInt::one();
                for j in (0..=e as usize).rev() {
                    weights[j] = crate::number::binomial(e as u64, j as u64) * &c_pow;
                    c_pow *= &off;
                }
                let mut next = Vec::with_capacity(partial.len() * (e as usize + 1));
                for (k, pc) in partial.iter() {
                    for (j, w) in weights.iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        let mut nk = k.clone();
                        nk[i] = j as u16;
                        next.push((nk, pc * BigRational::from_integer(w.clone())));
                    }
                }
                partial = next;
            }
            for (k, c) in partial.drain(..) {
                out.add_term(k, c);
            }
        }
        out
    }

    /// Forward difference in one variable: `p(.., k_v + 1, ..) - p`.
    pub fn delta(&self, v: Var) -> Self {
        &self.shift(v, 1) - self
    }

    /// Exchanges two variables.
    pub fn swap(&self, a: Var, b: Var) -> Self {
        assert!(a.id() <= self.nvars && b.id() <= self.nvars);
        if a == b {
            return self.clone();
        }
        let (ai, bi) = (a.index(), b.index());
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let mut nk = k.clone();
                    nk.swap(ai, bi);
                    (nk, c.clone())
                })
                .collect(),
        }
    }

    /// Degree in one variable; `None` is the degree of the zero polynomial
    /// (minus infinity).
    pub fn degree(&self, v: Var) -> Option<u32> {
        assert!(v.id() <= self.nvars);
        let idx = v.index();
        self.terms.keys().map(|k| k[idx] as u32).max()
    }

    /// Embeds into a wider space, mapping `k_i` to `k_{i+offset}`.
    pub(crate) fn shift_indices(&self, offset: usize, new_nvars: usize) -> Self {
        assert!(self.nvars + offset <= new_nvars);
        MultiPoly {
            nvars: new_nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let mut nk = vec![0u16; new_nvars];
                    nk[offset..offset + self.nvars].copy_from_slice(k);
                    (nk.into_boxed_slice(), c.clone())
                })
                .collect(),
        }
    }

    /// Widens the space by appending unused trailing variables.
    pub(crate) fn extend_vars(&self, new_nvars: usize) -> Self {
        self.shift_indices(0, new_nvars)
    }

    /// Drops trailing variables; panics if any of them occurs.
    pub(crate) fn truncate_vars(&self, new_nvars: usize) -> Self {
        assert!(new_nvars <= self.nvars);
        MultiPoly {
            nvars: new_nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    assert!(
                        k[new_nvars..].iter().all(|&e| e == 0),
                        "dropped variable still occurs"
                    );
                    (k[..new_nvars].to_vec().into_boxed_slice(), c.clone())
                })
                .collect(),
        }
    }

    /// Canonical term order used for printing: compare exponents of the last
    /// variable first, descending; ties move to earlier variables.
    pub(crate) fn canonical_cmp(a: &[u16], b: &[u16]) -> Ordering {
        for i in (0..a.len()).rev() {
            match b[i].cmp(&a[i]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }
}

/// `base * (base+1) * ... * (base+len-1)`; the empty product is 1.
pub fn rising_factorial_poly(base: &MultiPoly, len: u32) -> MultiPoly {
    let mut acc = MultiPoly::one(base.nvars());
    for i in 0..len {
        acc = &acc * &(base + &MultiPoly::from_int(base.nvars(), i as i64));
    }
    acc
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let key: Key = ka
                    .iter()
                    .zip(kb.iter())
                    .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                    .collect();
                out.add_term(key, ca * cb);
            }
        }
        out
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_monomial(key: &[u16]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in key.iter().enumerate() {
        if e == 1 {
            parts.push(format!("k{}", i + 1));
        } else if e > 1 {
            parts.push(format!("k{}^{}", i + 1, e));
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    /// Canonical text form, e.g. `k2 - k1 + 1` or `-k1^2 + 3*k1 - 1`.
    /// `text::parse_poly` accepts exactly this grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Key> = self.terms.keys().collect();
        keys.sort_by(|a, b| MultiPoly::canonical_cmp(a, b));
        for (pos, key) in keys.iter().enumerate() {
            let coeff = &self.terms[*key];
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            if pos == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = fmt_monomial(key);
            if mono.is_empty() {
                write!(f, "{}", fmt_coeff(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_coeff(&magnitude))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{rat, rat_int};

    fn v(id: usize) -> Var {
        Var::new(id)
    }

    /// 1 - k1 + k2, the order-2 count polynomial; handy in many tests.
    fn sample2() -> MultiPoly {
        let one = MultiPoly::one(2);
        let k1 = MultiPoly::variable(2, v(1));
        let k2 = MultiPoly::variable(2, v(2));
        &(&one - &k1) + &k2
    }

    #[test]
    fn zero_and_constant_basics() {
        let z = MultiPoly::zero(3);
        assert!(z.is_zero());
        assert_eq!(z.as_constant(), Some(rat_int(0)));
        let c = MultiPoly::from_int(3, -4);
        assert_eq!(c.as_constant(), Some(rat_int(-4)));
        assert_eq!(MultiPoly::constant(2, rat_int(0)), MultiPoly::zero(2));
    }

    #[test]
    fn cancellation_is_structural() {
        let p = sample2();
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q, MultiPoly::zero(2));
        assert_eq!(&p + &(-&p), MultiPoly::zero(2));
    }

    #[test]
    fn difference_of_squares() {
        let k1 = MultiPoly::variable(2, v(1));
        let k2 = MultiPoly::variable(2, v(2));
        let lhs = &(&k1 + &k2) * &(&k1 - &k2);
        let k1sq = MultiPoly::monomial(2, &[2, 0], rat_int(1));
        let k2sq = MultiPoly::monomial(2, &[0, 2], rat_int(1));
        assert_eq!(lhs, &k1sq - &k2sq);
    }

    #[test]
    fn eval_points() {
        let p = sample2();
        assert_eq!(p.eval_i64(&[1, 2]), rat_int(2));
        assert_eq!(p.eval_i64(&[3, 1]), rat_int(-1));
        assert_eq!(p.eval_i64(&[0, 0]), rat_int(1));
    }

    #[test]
    fn partial_evaluation() {
        // k1*k2 + k2^2 at k1 = 2 -> 2*k2 + k2^2, still in two variables
        let p = &MultiPoly::monomial(2, &[1, 1], rat_int(1))
            + &MultiPoly::monomial(2, &[0, 2], rat_int(1));
        let q = p.subst_int(v(1), &num_bigint::BigInt::from(2));
        assert_eq!(q.nvars(), 2);
        let expect = &MultiPoly::monomial(2, &[0, 1], rat_int(2))
            + &MultiPoly::monomial(2, &[0, 2], rat_int(1));
        assert_eq!(q, expect);
    }

    #[test]
    fn shift_square() {
        let p = MultiPoly::monomial(1, &[2], rat_int(1));
        let q = p.shift(v(1), 1);
        let expect = &(&MultiPoly::monomial(1, &[2], rat_int(1))
            + &MultiPoly::monomial(1, &[1], rat_int(2)))
            + &MultiPoly::one(1);
        assert_eq!(q, expect);
        assert_eq!(p.shift(v(1), 0), p);
        assert_eq!(p.shift(v(1), 1).shift(v(1), -1), p);
    }

    #[test]
    fn multi_shift_matches_iterated_shifts() {
        let p = &MultiPoly::monomial(3, &[2, 1, 3], rat(1, 2))
            + &MultiPoly::monomial(3, &[0, 4, 1], rat_int(-3));
        let a = p.multi_shift(&[1, -2, 3]);
        let b = p.shift(v(1), 1).shift(v(2), -2).shift(v(3), 3);
        assert_eq!(a, b);
    }

    #[test]
    fn delta_examples() {
        let sq = MultiPoly::monomial(1, &[2], rat_int(1));
        let expect = &MultiPoly::monomial(1, &[1], rat_int(2)) + &MultiPoly::one(1);
        assert_eq!(sq.delta(v(1)), expect);
        assert!(MultiPoly::from_int(2, 9).delta(v(1)).is_zero());
        assert_eq!(sample2().delta(v(1)), MultiPoly::from_int(2, -1));
    }

    #[test]
    fn swap_properties() {
        let anti = &MultiPoly::variable(2, v(2)) - &MultiPoly::variable(2, v(1));
        assert_eq!(anti.swap(v(1), v(2)), -&anti);
        let p = MultiPoly::monomial(3, &[2, 0, 1], rat(3, 4));
        assert_eq!(p.swap(v(1), v(3)).swap(v(1), v(3)), p);
        assert_eq!(p.swap(v(1), v(3)), MultiPoly::monomial(3, &[1, 0, 2], rat(3, 4)));
        let sym = MultiPoly::monomial(2, &[1, 1], rat_int(5));
        assert_eq!(sym.swap(v(1), v(2)), sym);
    }

    #[test]
    fn degrees() {
        assert_eq!(MultiPoly::zero(2).degree(v(1)), None);
        let p = MultiPoly::monomial(2, &[0, 3], rat_int(2));
        assert_eq!(p.degree(v(1)), Some(0));
        assert_eq!(p.degree(v(2)), Some(3));
        assert_eq!(sample2().degree(v(1)), Some(1));
    }

    #[test]
    fn display_canonical_order() {
        assert_eq!(sample2().to_string(), "k2 - k1 + 1");
        let gamma22 = &(&MultiPoly::monomial(1, &[2], rat_int(-1))
            + &MultiPoly::monomial(1, &[1], rat_int(3)))
            + &MultiPoly::from_int(1, -1);
        assert_eq!(gamma22.to_string(), "-k1^2 + 3*k1 - 1");
        assert_eq!(MultiPoly::zero(4).to_string(), "0");
        assert_eq!(MultiPoly::variable(1, v(1)).to_string(), "k1");
        let p = &MultiPoly::monomial(2, &[2, 1], rat(1, 2)) + &MultiPoly::constant(2, rat(-2, 3));
        assert_eq!(p.to_string(), "1/2*k1^2*k2 - 2/3");
    }

    #[test]
    fn display_orders_by_last_variable_first() {
        // All degree-1 monomials in 3 variables plus a constant
        let mut p = MultiPoly::from_int(3, 1);
        for i in 1..=3 {
            p = &p + &MultiPoly::variable(3, v(i));
        }
        assert_eq!(p.to_string(), "k3 + k2 + k1 + 1");
    }

    #[test]
    fn embedding_helpers() {
        let p = sample2();
        let wide = p.shift_indices(2, 5);
        assert_eq!(wide.nvars(), 5);
        assert_eq!(wide.eval_i64(&[9, 9, 1, 2, 9]), rat_int(2));
        let back = wide.truncate_vars(4).shift_indices(0, 4);
        assert_eq!(back.eval_i64(&[0, 0, 1, 2]), rat_int(2));
        let ext = p.extend_vars(4);
        assert_eq!(ext.truncate_vars(2), p);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(nvars: usize, max_deg: u16, max_terms: usize) -> BoxedStrategy<MultiPoly> {
            proptest::collection::vec(
                (
                    proptest::collection::vec(0..=max_deg, nvars),
                    -9i64..=9,
                    1i64..=4,
                ),
                0..=max_terms,
            )
            .prop_map(move |terms| {
                let mut p = MultiPoly::zero(nvars);
                for (exps, num, den) in terms {
                    p.add_term(exps.into_boxed_slice(), rat(num, den));
                }
                p
            })
            .boxed()
        }

        proptest! {
            #[test]
            fn ring_axioms(a in arb_poly(3, 3, 5), b in arb_poly(3, 3, 5), c in arb_poly(3, 3, 5)) {
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            }

            #[test]
            fn shift_is_ring_homomorphism(a in arb_poly(2, 3, 4), b in arb_poly(2, 3, 4), off in -3i64..=3) {
                let v = Var::new(1);
                prop_assert_eq!((&a + &b).shift(v, off), &a.shift(v, off) + &b.shift(v, off));
                prop_assert_eq!((&a * &b).shift(v, off), &a.shift(v, off) * &b.shift(v, off));
            }

            #[test]
            fn delta_product_rule(a in arb_poly(2, 3, 4), b in arb_poly(2, 3, 4)) {
                // delta(ab) = delta(a) * E(b) + a * delta(b)
                let v = Var::new(1);
                let lhs = (&a * &b).delta(v);
                let rhs = &(&a.delta(v) * &b.shift(v, 1)) + &(&a * &b.delta(v));
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn product_degree_adds(a in arb_poly(2, 3, 4), b in arb_poly(2, 3, 4)) {
                let v = Var::new(2);
                let prod = &a * &b;
                match (a.degree(v), b.degree(v)) {
                    (Some(da), Some(db)) => prop_assert_eq!(prod.degree(v), Some(da + db)),
                    _ => prop_assert_eq!(prod.degree(v), None),
                }
            }

            #[test]
            fn eval_commutes_with_arithmetic(a in arb_poly(3, 3, 4), b in arb_poly(3, 3, 4),
                                             x in -5i64..=5, y in -5i64..=5, z in -5i64..=5) {
                let pt = [x, y, z];
                prop_assert_eq!((&a + &b).eval_i64(&pt), a.eval_i64(&pt) + b.eval_i64(&pt));
                prop_assert_eq!((&a * &b).eval_i64(&pt), a.eval_i64(&pt) * b.eval_i64(&pt));
            }

            #[test]
            fn shift_matches_eval(a in arb_poly(2, 4, 5), off in -3i64..=3, x in -4i64..=4, y in -4i64..=4) {
                let shifted = a.shift(Var::new(1), off);
                prop_assert_eq!(shifted.eval_i64(&[x, y]), a.eval_i64(&[x + off, y]));
            }

            #[test]
            fn swap_matches_eval(a in arb_poly(2, 4, 5), x in -4i64..=4, y in -4i64..=4) {
                let swapped = a.swap(Var::new(1), Var::new(2));
                prop_assert_eq!(swapped.eval_i64(&[x, y]), a.eval_i64(&[y, x]));
            }
        }
    }
}
