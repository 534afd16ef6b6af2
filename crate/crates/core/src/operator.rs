//! Shift-operator calculus.
//!
//! A `ShiftOperator` is a finite rational combination of translation
//! monomials `E1^c1 * ... * En^cn`, where `E_i` replaces `k_i` by `k_i + 1`
//! and exponents may be negative.  Stored expanded, keyed by offset vector:
//! * terms with equal offsets are merged, zero coefficients are dropped;
//! * composition multiplies coefficients and adds offsets, so any two
//!   operators commute.
//!
//! The difference `D_i = E_i - 1` is not a separate object; it expands into
//! this algebra.  `DeltaFactoredOp` keeps the factored shape `id + D_p * B`
//! with `B` a shift operator: in that shape the operator has an explicit
//! inverse, because `D_p * B` strictly lowers the degree in `k_p` and the
//! alternating series `sum_l (-1)^l (D_p B)^l` terminates on every
//! polynomial.
//!
//! The variable swap is not a shift operator; the few constructions that
//! need it (`t_prime`, `is_antisymmetric_adjacent`) act on polynomials
//! directly.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{MultiPoly, Var};

type OffsetKey = Box<[i32]>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftOperator {
    nvars: usize,
    terms: BTreeMap<OffsetKey, BigRational>,
}

impl ShiftOperator {
    pub fn zero(nvars: usize) -> Self {
        ShiftOperator {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(nvars: usize) -> Self {
        Self::term(nvars, &vec![0; nvars], BigRational::one())
    }

    /// A single translation monomial with the given coefficient.
    pub fn term(nvars: usize, offsets: &[i32], coeff: BigRational) -> Self {
        assert_eq!(offsets.len(), nvars);
        let mut op = Self::zero(nvars);
        op.add_term(offsets.to_vec().into_boxed_slice(), coeff);
        op
    }

    /// `E_v^offset`.
    pub fn shift(nvars: usize, v: Var, offset: i32) -> Self {
        assert!(v.id() <= nvars);
        let mut offs = vec![0; nvars];
        offs[v.index()] = offset;
        Self::term(nvars, &offs, BigRational::one())
    }

    /// `D_v = E_v - 1`.
    pub fn delta(nvars: usize, v: Var) -> Self {
        &Self::shift(nvars, v, 1) - &Self::identity(nvars)
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

    pub fn iter(&self) -> impl Iterator<Item = (&[i32], &BigRational)> {
        self.terms.iter().map(|(k, c)| (k.as_ref(), c))
    }

    pub fn coeff(&self, offsets: &[i32]) -> BigRational {
        assert_eq!(offsets.len(), self.nvars);
        self.terms
            .get(offsets)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, key: OffsetKey, coeff: BigRational) {
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
        ShiftOperator {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    /// Applies the operator to a polynomial.
    pub fn apply(&self, p: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, p.nvars(), "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (offsets, coeff) in &self.terms {
            let offs: Vec<i64> = offsets.iter().map(|&o| o as i64).collect();
            out += &p.multi_shift(&offs).scale(coeff);
        }
        out
    }

    /// Renames variables: old variable at index `i` becomes index `perm[i]`.
    /// `perm` must be a permutation of `0..nvars`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut seen = vec![false; self.nvars];
        for &t in perm {
            assert!(t < self.nvars && !seen[t], "not a permutation");
            seen[t] = true;
        }
        ShiftOperator {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let mut nk = vec![0; self.nvars];
                    for (i, &o) in k.iter().enumerate() {
                        nk[perm[i]] = o;
                    }
                    (nk.into_boxed_slice(), c.clone())
                })
                .collect(),
        }
    }

    /// The scalar obtained by sending every translation monomial to 1, i.e.
    /// the sum of the coefficients.
    pub fn value_at_ones(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }
}

impl Add for &ShiftOperator {
    type Output = ShiftOperator;
    fn add(self, rhs: &ShiftOperator) -> ShiftOperator {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ShiftOperator {
    type Output = ShiftOperator;
    fn sub(self, rhs: &ShiftOperator) -> ShiftOperator {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &ShiftOperator {
    type Output = ShiftOperator;
    fn neg(self) -> ShiftOperator {
        ShiftOperator {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &ShiftOperator {
    type Output = ShiftOperator;
    /// Composition; offsets add and coefficients multiply, so this is
    /// commutative.
    fn mul(self, rhs: &ShiftOperator) -> ShiftOperator {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = ShiftOperator::zero(self.nvars);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let key: OffsetKey = ka
                    .iter()
                    .zip(kb.iter())
                    .map(|(&a, &b)| a.checked_add(b).expect("offset overflow"))
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

impl fmt::Display for ShiftOperator {
    /// Text form, e.g. `3/2 * E1^2 * E3^-1 + 1`; `text::parse_operator`
    /// accepts this grammar (plus `D<i>` sugar for differences).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&OffsetKey> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            for i in (0..a.len()).rev() {
                match b[i].cmp(&a[i]) {
                    std::cmp::Ordering::Equal => continue,
                    other => return other,
                }
            }
            std::cmp::Ordering::Equal
        });
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
            let mut factors = Vec::new();
            for (i, &o) in key.iter().enumerate() {
                if o == 1 {
                    factors.push(format!("E{}", i + 1));
                } else if o != 0 {
                    factors.push(format!("E{}^{}", i + 1, o));
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_coeff(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{}", factors.join(" * "))?;
            } else {
                write!(f, "{} * {}", fmt_coeff(&magnitude), factors.join(" * "))?;
            }
        }
        Ok(())
    }
}

/// An operator in the invertible shape `id + D_pivot * body`.
#[derive(Debug, Clone)]
pub struct DeltaFactoredOp {
    pivot: Var,
    body: ShiftOperator,
}

impl DeltaFactoredOp {
    pub fn new(pivot: Var, body: ShiftOperator) -> Self {
        assert!(pivot.id() <= body.nvars());
        DeltaFactoredOp { pivot, body }
    }

    pub fn pivot(&self) -> Var {
        self.pivot
    }

    /// Expands to a plain shift operator.
    pub fn expanded(&self) -> ShiftOperator {
        let n = self.body.nvars();
        &ShiftOperator::identity(n) + &(&ShiftOperator::delta(n, self.pivot) * &self.body)
    }

    pub fn apply(&self, p: &MultiPoly) -> MultiPoly {
        self.expanded().apply(p)
    }

    /// Applies the inverse operator: the alternating series
    /// `g - (D b) g + (D b)^2 g - ...`, which terminates because each
    /// `D_pivot` application lowers the degree in the pivot variable.
    pub fn inverse_apply(&self, g: &MultiPoly) -> MultiPoly {
        let n = self.body.nvars();
        assert_eq!(n, g.nvars(), "variable count mismatch");
        let step = &ShiftOperator::delta(n, self.pivot) * &self.body;
        let mut acc = g.clone();
        let mut term = g.clone();
        let mut negate = true;
        let max_steps = g.degree(self.pivot).map_or(0, |d| d as usize + 1);
        for _ in 0..max_steps {
            term = step.apply(&term);
            if term.is_zero() {
                return acc;
            }
            if negate {
                acc = &acc - &term;
            } else {
                acc = &acc + &term;
            }
            negate = !negate;
        }
        assert!(
            step.apply(&term).is_zero(),
            "inverse series failed to terminate"
        );
        acc
    }
}

/// `(id + S_{i,i+1}) (id + E_{i+1} D_i)` applied to `p`, where `S` swaps the
/// two variables.  Annihilating every counting polynomial in the pair
/// `(k_i, k_{i+1})` is the defining symmetry used by the verification
/// suites.
pub fn t_prime(p: &MultiPoly, i: Var) -> MultiPoly {
    let next = Var::new(i.id() + 1);
    assert!(next.id() <= p.nvars(), "t_prime needs an adjacent pair");
    let inner = p + &p.delta(i).shift(next, 1);
    &inner + &inner.swap(i, next)
}

/// `(id + E_i^{-1} D_i D_j)` applied to `p`.
pub fn v_op(p: &MultiPoly, i: Var, j: Var) -> MultiPoly {
    assert!(i != j, "v_op needs distinct variables");
    p + &p.delta(i).delta(j).shift(i, -1)
}

/// True iff swapping the adjacent pair `(k_i, k_{i+1})` negates `p`.
pub fn is_antisymmetric_adjacent(p: &MultiPoly, i: Var) -> bool {
    let next = Var::new(i.id() + 1);
    assert!(next.id() <= p.nvars());
    p.swap(i, next) == -p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{rat, rat_int};

    fn v(id: usize) -> Var {
        Var::new(id)
    }

    /// id + E1 * D2 in two variables, expanded: 1 + E1*E2 - E1.
    fn id_plus_e1d2() -> ShiftOperator {
        let e1 = ShiftOperator::shift(2, v(1), 1);
        &ShiftOperator::identity(2) + &(&e1 * &ShiftOperator::delta(2, v(2)))
    }

    #[test]
    fn identity_application() {
        let p = &MultiPoly::variable(2, v(2)) - &MultiPoly::variable(2, v(1));
        assert_eq!(ShiftOperator::identity(2).apply(&p), p);
        assert!(ShiftOperator::zero(2).apply(&p).is_zero());
    }

    #[test]
    fn basic_applications() {
        // (id + E1 D2) (k2 - k1) = k2 - k1 + 1
        let p = &MultiPoly::variable(2, v(2)) - &MultiPoly::variable(2, v(1));
        let got = id_plus_e1d2().apply(&p);
        assert_eq!(got.to_string(), "k2 - k1 + 1");

        // E1 E2 (k1 + k2) = k1 + k2 + 2
        let both = ShiftOperator::term(2, &[1, 1], rat_int(1));
        let sum = &MultiPoly::variable(2, v(1)) + &MultiPoly::variable(2, v(2));
        assert_eq!(both.apply(&sum), &sum + &MultiPoly::from_int(2, 2));
    }

    #[test]
    fn shift_inverse_composition() {
        let up = ShiftOperator::shift(1, v(1), 1);
        let down = ShiftOperator::shift(1, v(1), -1);
        assert_eq!(&up * &down, ShiftOperator::identity(1));
    }

    #[test]
    fn deltas_commute() {
        let d1 = ShiftOperator::delta(2, v(1));
        let d2 = ShiftOperator::delta(2, v(2));
        assert_eq!(&d1 * &d2, &d2 * &d1);
    }

    #[test]
    fn composed_factor_expansion() {
        // (id + E1 D2) (id + E2 D1) expands to seven offset groups, with the
        // double-shift collecting coefficient 3:
        //   1 + 3 E1E2 - E1 - E2 - E1E2^2 - E1^2E2 + E1^2E2^2
        let e2 = ShiftOperator::shift(2, v(2), 1);
        let other = &ShiftOperator::identity(2) + &(&e2 * &ShiftOperator::delta(2, v(1)));
        let prod = &id_plus_e1d2() * &other;
        assert_eq!(prod, &other * &id_plus_e1d2());
        assert_eq!(prod.num_terms(), 7);
        assert_eq!(prod.coeff(&[0, 0]), rat_int(1));
        assert_eq!(prod.coeff(&[1, 1]), rat_int(3));
        assert_eq!(prod.coeff(&[1, 0]), rat_int(-1));
        assert_eq!(prod.coeff(&[0, 1]), rat_int(-1));
        assert_eq!(prod.coeff(&[1, 2]), rat_int(-1));
        assert_eq!(prod.coeff(&[2, 1]), rat_int(-1));
        assert_eq!(prod.coeff(&[2, 2]), rat_int(1));
    }

    #[test]
    fn value_at_ones_sums_coefficients() {
        assert_eq!(id_plus_e1d2().value_at_ones(), rat_int(1));
        assert_eq!(ShiftOperator::delta(3, v(2)).value_at_ones(), rat_int(0));
    }

    #[test]
    fn neumann_inverse_examples() {
        // op = id + E2 D1, pivot k1
        let op = DeltaFactoredOp::new(v(1), ShiftOperator::shift(2, v(2), 1));
        let k1 = MultiPoly::variable(2, v(1));
        let got = op.inverse_apply(&k1);
        assert_eq!(got, &k1 - &MultiPoly::one(2));
        assert_eq!(op.apply(&got), k1);

        let c = MultiPoly::from_int(2, 5);
        assert_eq!(op.inverse_apply(&c), c);
        assert!(op.inverse_apply(&MultiPoly::zero(2)).is_zero());
    }

    #[test]
    fn t_prime_examples() {
        // alpha(2) is annihilated
        let alpha2 = &(&MultiPoly::one(2) - &MultiPoly::variable(2, v(1)))
            + &MultiPoly::variable(2, v(2));
        assert!(t_prime(&alpha2, v(1)).is_zero());

        // constants double
        assert_eq!(
            t_prime(&MultiPoly::one(2), v(1)),
            MultiPoly::from_int(2, 2)
        );

        // the bare difference k2 - k1 maps to the constant -2
        let diff = &MultiPoly::variable(2, v(2)) - &MultiPoly::variable(2, v(1));
        assert_eq!(t_prime(&diff, v(1)), MultiPoly::from_int(2, -2));
    }

    #[test]
    fn t_prime_output_is_symmetric() {
        let p = MultiPoly::monomial(3, &[2, 1, 0], rat(3, 2));
        let out = t_prime(&p, v(2));
        assert_eq!(out.swap(v(2), v(3)), out);
    }

    #[test]
    fn v_op_examples() {
        let c = MultiPoly::from_int(2, 7);
        assert_eq!(v_op(&c, v(1), v(2)), c);

        let k1k2 = MultiPoly::monomial(2, &[1, 1], rat_int(1));
        assert_eq!(v_op(&k1k2, v(1), v(2)), &k1k2 + &MultiPoly::one(2));

        let sum = &MultiPoly::variable(2, v(1)) + &MultiPoly::variable(2, v(2));
        assert_eq!(v_op(&sum, v(1), v(2)), sum);
    }

    #[test]
    fn antisymmetry_check() {
        let diff = &MultiPoly::variable(2, v(2)) - &MultiPoly::variable(2, v(1));
        assert!(is_antisymmetric_adjacent(&diff, v(1)));
        let prod = MultiPoly::monomial(2, &[1, 1], rat_int(1));
        assert!(!is_antisymmetric_adjacent(&prod, v(1)));
        assert!(is_antisymmetric_adjacent(&MultiPoly::zero(2), v(1)));
    }

    #[test]
    fn permute_vars_roundtrip() {
        let op = ShiftOperator::term(3, &[1, -2, 3], rat(5, 3));
        let cycled = op.permute_vars(&[1, 2, 0]);
        assert_eq!(cycled.coeff(&[3, 1, -2]), rat(5, 3));
        assert_eq!(cycled.permute_vars(&[2, 0, 1]), op);
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
                    p = &p + &MultiPoly::monomial(nvars, &exps, rat(num, den));
                }
                p
            })
            .boxed()
        }

        fn arb_op(nvars: usize, max_off: i32, max_terms: usize) -> BoxedStrategy<ShiftOperator> {
            proptest::collection::vec(
                (
                    proptest::collection::vec(-max_off..=max_off, nvars),
                    -5i64..=5,
                    1i64..=3,
                ),
                0..=max_terms,
            )
            .prop_map(move |terms| {
                let mut op = ShiftOperator::zero(nvars);
                for (offs, num, den) in terms {
                    op = &op + &ShiftOperator::term(nvars, &offs, rat(num, den));
                }
                op
            })
            .boxed()
        }

        proptest! {
            #[test]
            fn application_is_linear(a in arb_op(2, 2, 3), b in arb_op(2, 2, 3), p in arb_poly(2, 3, 4)) {
                prop_assert_eq!((&a + &b).apply(&p), &a.apply(&p) + &b.apply(&p));
            }

            #[test]
            fn composition_matches_iterated_application(a in arb_op(2, 2, 3), b in arb_op(2, 2, 3), p in arb_poly(2, 3, 4)) {
                prop_assert_eq!((&a * &b).apply(&p), a.apply(&b.apply(&p)));
                prop_assert_eq!(&a * &b, &b * &a);
            }

            #[test]
            fn degree_never_raised(a in arb_op(2, 2, 4), p in arb_poly(2, 4, 5)) {
                let q = a.apply(&p);
                for id in 1..=2usize {
                    let v = Var::new(id);
                    prop_assert!(q.degree(v) <= p.degree(v));
                }
            }

            #[test]
            fn neumann_roundtrip(body in arb_op(2, 2, 3), g in arb_poly(2, 3, 4), pivot in 1usize..=2) {
                let op = DeltaFactoredOp::new(Var::new(pivot), body);
                let inv = op.inverse_apply(&g);
                prop_assert_eq!(op.apply(&inv), g.clone());
                prop_assert_eq!(op.inverse_apply(&op.apply(&g)), g.clone());
                // both directions preserve the pivot degree exactly
                prop_assert_eq!(inv.degree(op.pivot()), g.degree(op.pivot()));
                prop_assert_eq!(op.apply(&g).degree(op.pivot()), g.degree(op.pivot()));
            }

            #[test]
            fn swap_conjugates_offsets(a in arb_op(2, 2, 4), p in arb_poly(2, 3, 4)) {
                // S (A p) = A' (S p) where A' exchanges the two offset slots
                let s_ap = a.apply(&p).swap(Var::new(1), Var::new(2));
                let a_sp = a.permute_vars(&[1, 0]).apply(&p.swap(Var::new(1), Var::new(2)));
                prop_assert_eq!(s_ap, a_sp);
            }
        }
    }
}
