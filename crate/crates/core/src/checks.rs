//! Named verification suites.
//!
//! Each suite runs a family of exact identities between independent
//! computation routes and reports one [`Check`] per identity, carrying the
//! first counterexample on failure.  The command-line `verify` subcommand
//! and the integration tests both drive these, so a failure reproduces
//! identically in either place.  Randomized checks use a fixed seed.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::counting::{
    alpha_eval, alpha_poly, asm_count, beta_count, gamma_poly, refined_asm,
    ssyt_product_poly, t_prime_vanishing_check, vsasm_count, AlphaMethod,
};
use crate::enumerate::{
    count_monotone_triangles, count_strict_se_triangles, count_trapezoids,
    refined_bottom_count, BottomRow,
};
use crate::error::{Error, Result};
use crate::number::{expect_integer, rat};
use crate::operator::{t_prime, DeltaFactoredOp, ShiftOperator};
use crate::poly::{MultiPoly, Var};
use crate::summation::{merge_rule_check, nested_sum, NestedSumSpec, SumBound};

/// Outcome of one verified identity.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// What was checked, or the first counterexample.
    pub detail: String,
}

impl Check {
    fn passed(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: true,
            detail: detail.into(),
        }
    }

    fn failed(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: false,
            detail: detail.into(),
        }
    }
}

/// The available suite names, in display order.
pub const SUITE_NAMES: &[&str] =
    &["golden", "oracle", "operators", "degrees", "refined", "merge"];

/// Runs the named suite with sizes capped at `max_n`.
///
/// Caps above a suite's most expensive supported size are clamped, so a
/// large `max_n` is safe everywhere.
pub fn run_suite(suite: &str, max_n: usize) -> Result<Vec<Check>> {
    match suite {
        "golden" => Ok(golden_suite(max_n)),
        "oracle" => Ok(oracle_suite(max_n)),
        "operators" => Ok(operators_suite(max_n)),
        "degrees" => Ok(degrees_suite(max_n)),
        "refined" => Ok(refined_suite(max_n)),
        "merge" => Ok(merge_suite(max_n)),
        other => Err(Error::usage(format!(
            "unknown suite {other:?}; available: {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

/// Stored polynomial text matches a fresh computation, byte for byte.
fn golden_suite(max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in crate::golden::ALPHA_SIZES {
        if n > max_n {
            break;
        }
        let name = format!("triangle polynomial matches stored text, n={n}");
        let computed = match alpha_poly(n, AlphaMethod::Recursion) {
            Ok(p) => p,
            Err(e) => {
                checks.push(Check::failed(name, e.to_string()));
                continue;
            }
        };
        checks.push(compare_text(
            name,
            crate::golden::alpha_text(n),
            &computed,
        ));
    }
    for n in crate::golden::GAMMA_SIZES {
        let name = format!("trapezoid polynomial matches stored text, n={n}");
        let computed = match gamma_poly(n, n) {
            Ok(p) => p,
            Err(e) => {
                checks.push(Check::failed(name, e.to_string()));
                continue;
            }
        };
        checks.push(compare_text(
            name,
            crate::golden::gamma_text(n),
            &computed,
        ));
    }
    checks
}

fn compare_text(
    name: String,
    stored: Result<&'static str>,
    computed: &MultiPoly,
) -> Check {
    match stored {
        Ok(text) if text == computed.to_string() => {
            Check::passed(name, format!("{} terms", computed.num_terms()))
        }
        Ok(text) => Check::failed(
            name,
            format!("stored  {text}\ncomputed {computed}"),
        ),
        Err(e) => Check::failed(name, e.to_string()),
    }
}

/// Symbolic counts agree with direct enumeration.
fn oracle_suite(max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=max_n.min(5) {
        checks.push(triangle_window_check(n));
        checks.push(strict_se_window_check(n));
    }
    for n in 1..=max_n.min(4) {
        for r in 1..=n {
            checks.push(trapezoid_check(r, n));
        }
    }
    for n in 1..=max_n.min(5) {
        checks.push(refined_enumeration_check(n));
    }
    checks
}

/// Every strictly increasing row of length `len` with entries in `lo..=hi`.
fn window_rows(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn recurse(
        len: usize,
        lo: i64,
        hi: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().map_or(lo, |&v| v + 1);
        for v in start..=hi {
            cur.push(v);
            recurse(len, lo, hi, cur, out);
            cur.pop();
        }
    }
    recurse(len, lo, hi, &mut cur, &mut out);
    out
}

fn triangle_window_check(n: usize) -> Check {
    let name = format!("triangle counts match enumeration, n={n}");
    let rows = window_rows(n, -2, 6);
    let total = rows.len();
    for entries in rows {
        let row = BottomRow::new(entries.clone());
        let symbolic = match alpha_eval(&row, AlphaMethod::OperatorDirect) {
            Ok(v) => v,
            Err(e) => return Check::failed(name, e.to_string()),
        };
        let enumerated = match count_monotone_triangles(&row) {
            Ok(v) => v,
            Err(e) => return Check::failed(name, e.to_string()),
        };
        if symbolic != enumerated {
            return Check::failed(
                name,
                format!("row ({row}): polynomial {symbolic}, enumeration {enumerated}"),
            );
        }
    }
    Check::passed(name, format!("{total} rows in [-2,6]"))
}

fn strict_se_window_check(n: usize) -> Check {
    let name = format!("strict south-east counts match product, n={n}");
    let rows = window_rows(n, -2, 6);
    let total = rows.len();
    for entries in rows {
        let row = BottomRow::new(entries);
        let product = match beta_count(&row) {
            Ok(v) => v,
            Err(e) => return Check::failed(name, e.to_string()),
        };
        let enumerated = match count_strict_se_triangles(&row) {
            Ok(v) => v,
            Err(e) => return Check::failed(name, e.to_string()),
        };
        if product != enumerated {
            return Check::failed(
                name,
                format!("row ({row}): product {product}, enumeration {enumerated}"),
            );
        }
    }
    Check::passed(name, format!("{total} rows in [-2,6]"))
}

fn trapezoid_check(r: usize, n: usize) -> Check {
    let name = format!("trapezoid counts match polynomial, r={r} n={n}");
    let g = match gamma_poly(r, n) {
        Ok(g) => g,
        Err(e) => return Check::failed(name, e.to_string()),
    };
    let tops = window_rows(n - r + 1, 1, n as i64);
    let total = tops.len();
    for top in tops {
        let value = match expect_integer(&g.eval_i64(&top), "trapezoid count")
        {
            Ok(v) => v,
            Err(e) => return Check::failed(name, e.to_string()),
        };
        let counted =
            match count_trapezoids(&BottomRow::new(top.clone()), n) {
                Ok(v) => v,
                Err(e) => return Check::failed(name, e.to_string()),
            };
        if value != counted {
            return Check::failed(
                name,
                format!("top {top:?}: polynomial {value}, enumeration {counted}"),
            );
        }
    }
    Check::passed(name, format!("{total} top rows"))
}

fn refined_enumeration_check(n: usize) -> Check {
    let name = format!("refined counts match enumeration, n={n}");
    for k in 1..=n {
        let formula = match refined_asm(n, k) {
            Ok(v) => v,
            Err(e) => return Check::failed(name, e.to_string()),
        };
        let enumerated = match refined_bottom_count(n, k) {
            Ok(v) => v,
            Err(e) => return Check::failed(name, e.to_string()),
        };
        if formula != enumerated {
            return Check::failed(
                name,
                format!("k={k}: formula {formula}, enumeration {enumerated}"),
            );
        }
    }
    Check::passed(name, format!("columns 1..={n}"))
}

/// Operator calculus identities, including randomized ones (fixed seed).
fn operators_suite(max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 2..=max_n.min(5) {
        checks.push(t_prime_check(n));
    }
    checks.push(neumann_round_trip_check(200));
    for n in 2..=max_n.min(4) {
        checks.push(scalar_action_check(n, 17));
    }
    for n in 2..=max_n.min(4) {
        checks.push(factor_order_check(n));
    }
    checks.push(composition_commutes_check(60));
    checks
}

fn t_prime_check(n: usize) -> Check {
    let name = format!("symmetrization annihilates triangle polynomial, n={n}");
    if t_prime_vanishing_check(n) {
        Check::passed(name, format!("all {} adjacent pairs", n - 1))
    } else {
        let alpha = alpha_poly(n, AlphaMethod::OperatorDirect).unwrap();
        let bad = (1..n)
            .find(|&i| !t_prime(&alpha, Var::new(i)).is_zero())
            .unwrap();
        Check::failed(name, format!("nonzero at pair ({bad},{})", bad + 1))
    }
}

fn random_poly(rng: &mut StdRng, nvars: usize, max_deg: u16) -> MultiPoly {
    let mut p = MultiPoly::zero(nvars);
    for _ in 0..rng.gen_range(1..=4) {
        let exps: Vec<u16> =
            (0..nvars).map(|_| rng.gen_range(0..=max_deg)).collect();
        let numer = rng.gen_range(-9..=9i64);
        let denom = rng.gen_range(1..=4i64);
        p += &MultiPoly::monomial(nvars, &exps, rat(numer, denom));
    }
    p
}

fn random_operator(rng: &mut StdRng, nvars: usize) -> ShiftOperator {
    let mut acc = ShiftOperator::zero(nvars);
    for _ in 0..rng.gen_range(1..=3) {
        let offsets: Vec<i32> =
            (0..nvars).map(|_| rng.gen_range(-2..=2)).collect();
        let numer = rng.gen_range(-9..=9i64);
        let denom = rng.gen_range(1..=3i64);
        acc = &acc + &ShiftOperator::term(nvars, &offsets, rat(numer, denom));
    }
    acc
}

fn neumann_round_trip_check(cases: usize) -> Check {
    let name = "alternating series inverts delta-factored operators".to_string();
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for case in 0..cases {
        let nvars = rng.gen_range(2..=3);
        let pivot = Var::new(rng.gen_range(1..=nvars));
        let body = random_operator(&mut rng, nvars);
        let op = DeltaFactoredOp::new(pivot, body);
        let p = random_poly(&mut rng, nvars, 4);
        let forward_back = op.inverse_apply(&op.apply(&p));
        let back_forward = op.apply(&op.inverse_apply(&p));
        if forward_back != p || back_forward != p {
            return Check::failed(
                name,
                format!("case {case}: operator {}, input {p}", op.expanded()),
            );
        }
    }
    Check::passed(name, format!("{cases} random operator/polynomial pairs"))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for shorter in permutations(n - 1) {
        for slot in 0..n {
            let mut perm = shorter.clone();
            perm.insert(slot, n - 1);
            out.push(perm);
        }
    }
    out
}

/// A symmetric polynomial in the shift operators acts on the tableaux
/// product as multiplication by its value at all-ones.
fn scalar_action_check(n: usize, cases: usize) -> Check {
    let name =
        format!("symmetric operators act as scalars on the product, n={n}");
    let mut rng = StdRng::seed_from_u64(0x5eed_0002 + n as u64);
    let product = ssyt_product_poly(n);
    let perms = permutations(n);
    for case in 0..cases {
        let seed = random_operator(&mut rng, n);
        let mut sym = ShiftOperator::zero(n);
        for perm in &perms {
            sym = &sym + &seed.permute_vars(perm);
        }
        let applied = sym.apply(&product);
        let scaled = product.scale(&sym.value_at_ones());
        if applied != scaled {
            return Check::failed(
                name,
                format!("case {case}: operator {sym}"),
            );
        }
    }
    Check::passed(name, format!("{cases} random symmetrized operators"))
}

fn factor_order_check(n: usize) -> Check {
    let name = format!("operator factor order does not matter, n={n}");
    let reference = match alpha_poly(n, AlphaMethod::OperatorDirect) {
        Ok(p) => p,
        Err(e) => return Check::failed(name, e.to_string()),
    };
    let mut pairs = Vec::new();
    for p in 1..=n {
        for q in (p + 1)..=n {
            pairs.push((Var::new(p), Var::new(q)));
        }
    }
    // A fixed odd rotation plus reversal; any reordering must agree.
    pairs.reverse();
    pairs.rotate_left(1);
    let mut poly = ssyt_product_poly(n);
    for (vp, vq) in pairs {
        let op = &ShiftOperator::identity(n)
            + &(&ShiftOperator::shift(n, vp, 1) * &ShiftOperator::delta(n, vq));
        poly = op.apply(&poly);
    }
    if poly == reference {
        Check::passed(name, format!("{} factors permuted", n * (n - 1) / 2))
    } else {
        Check::failed(name, "permuted product differs".to_string())
    }
}

fn composition_commutes_check(cases: usize) -> Check {
    let name = "operator composition is commutative".to_string();
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for case in 0..cases {
        let a = random_operator(&mut rng, 3);
        let b = random_operator(&mut rng, 3);
        if &a * &b != &b * &a {
            return Check::failed(name, format!("case {case}: {a} vs {b}"));
        }
    }
    Check::passed(name, format!("{cases} random pairs"))
}

/// Degree bounds of the counting polynomials.
fn degrees_suite(max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=max_n.min(6) {
        checks.push(alpha_degree_check(n));
    }
    for n in 1..=max_n.min(5) {
        for r in 1..=n {
            checks.push(gamma_degree_check(r, n));
        }
    }
    checks.push(nested_degree_witness_check());
    checks
}

fn alpha_degree_check(n: usize) -> Check {
    let name = format!("triangle polynomial has degree {}, n={n}", n - 1);
    let p = match alpha_poly(n, AlphaMethod::OperatorDirect) {
        Ok(p) => p,
        Err(e) => return Check::failed(name, e.to_string()),
    };
    for i in 1..=n {
        let deg = p.degree(Var::new(i));
        if deg != Some(n as u32 - 1) {
            return Check::failed(
                name,
                format!("degree in k{i} is {deg:?}, expected {}", n - 1),
            );
        }
    }
    Check::passed(name, format!("exact in all {n} variables"))
}

fn gamma_degree_check(r: usize, n: usize) -> Check {
    let bound = 2 * r as u32 - 2;
    let name = format!("trapezoid polynomial degree <= {bound}, r={r} n={n}");
    let g = match gamma_poly(r, n) {
        Ok(g) => g,
        Err(e) => return Check::failed(name, e.to_string()),
    };
    for i in 1..=(n - r + 1) {
        let deg = g.degree(Var::new(i)).unwrap_or(0);
        if deg > bound {
            return Check::failed(
                name,
                format!("degree in k{i} is {deg}"),
            );
        }
    }
    Check::passed(name, format!("all {} variables", n - r + 1))
}

/// One nested sum that attains the generic degree growth `2R + 2`, showing
/// the triangle polynomial's linear degree is special, not automatic.
fn nested_degree_witness_check() -> Check {
    let name = "nested sum degree bound 2R+2 is attained".to_string();
    let p = MultiPoly::monomial(2, &[1, 1], rat(1, 1));
    let s = match nested_sum(&p, &NestedSumSpec::row(3)) {
        Ok(s) => s,
        Err(e) => return Check::failed(name, e.to_string()),
    };
    match s.degree(Var::new(2)) {
        Some(4) => {
            Check::passed(name, "summand l1*l2 reaches degree 4 in k2")
        }
        other => Check::failed(name, format!("degree {other:?}, expected 4")),
    }
}

/// The refined formulas against the polynomial and each other.
fn refined_suite(max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=max_n.min(5) {
        checks.push(refined_polynomial_check(n));
    }
    checks.push(refined_sum_check(8));
    for n in 1..=max_n.min(5) {
        checks.push(ladder_check(n));
    }
    for n in 1..=max_n.min(4) {
        checks.push(symmetric_ladder_check(n));
    }
    checks
}

fn refined_polynomial_check(n: usize) -> Check {
    let name = format!("refined formula matches apex polynomial, n={n}");
    let g = match gamma_poly(n, n) {
        Ok(g) => g,
        Err(e) => return Check::failed(name, e.to_string()),
    };
    for k in 1..=n {
        let value =
            match expect_integer(&g.eval_i64(&[k as i64]), "apex count") {
                Ok(v) => v,
                Err(e) => return Check::failed(name, e.to_string()),
            };
        let formula = match refined_asm(n, k) {
            Ok(v) => v,
            Err(e) => return Check::failed(name, e.to_string()),
        };
        if value != formula {
            return Check::failed(
                name,
                format!("k={k}: polynomial {value}, formula {formula}"),
            );
        }
    }
    Check::passed(name, format!("columns 1..={n}"))
}

fn refined_sum_check(max_n: usize) -> Check {
    let name = format!("refined counts sum to the total, n<={max_n}");
    for n in 1..=max_n {
        let total: BigInt = match (1..=n)
            .map(|k| refined_asm(n, k))
            .collect::<Result<Vec<_>>>()
        {
            Ok(v) => v.into_iter().sum(),
            Err(e) => return Check::failed(name, e.to_string()),
        };
        let expected = asm_count(n);
        if total != expected {
            return Check::failed(
                name,
                format!("n={n}: sum {total}, total {expected}"),
            );
        }
    }
    Check::passed(name, format!("sizes 1..={max_n}"))
}

fn ladder_check(n: usize) -> Check {
    let name = format!("product formula matches triangle count, n={n}");
    let row = BottomRow::consecutive(n);
    let count = match alpha_eval(&row, AlphaMethod::OperatorDirect) {
        Ok(v) => v,
        Err(e) => return Check::failed(name, e.to_string()),
    };
    let formula = asm_count(n);
    if count == formula {
        Check::passed(name, format!("both {formula}"))
    } else {
        Check::failed(
            name,
            format!("polynomial {count}, product formula {formula}"),
        )
    }
}

fn symmetric_ladder_check(n: usize) -> Check {
    let name =
        format!("symmetric product formula matches odd-row count, n={n}");
    let odd: Vec<i64> = (0..n).map(|i| 2 * i as i64 + 1).collect();
    let count =
        match alpha_eval(&BottomRow::new(odd), AlphaMethod::OperatorDirect) {
            Ok(v) => v,
            Err(e) => return Check::failed(name, e.to_string()),
        };
    let formula = vsasm_count(n);
    if count == formula {
        Check::passed(name, format!("both {formula}"))
    } else {
        Check::failed(
            name,
            format!("polynomial {count}, product formula {formula}"),
        )
    }
}

/// The split-and-merge identity of the nested sum.
fn merge_suite(max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.push(merge_fixed_check());
    for m in 3..=max_n.min(4) {
        checks.push(merge_random_check(m, 24));
    }
    checks
}

fn merge_fixed_check() -> Check {
    let name = "merge rule holds on fixed specs".to_string();
    let p2 = MultiPoly::monomial(2, &[1, 1], rat(1, 1));
    let p3 = MultiPoly::monomial(3, &[1, 0, 2], rat(1, 2));
    let cases: Vec<(MultiPoly, NestedSumSpec, usize)> = vec![
        (p2.clone(), NestedSumSpec::row(3), 2),
        (p3.clone(), NestedSumSpec::row(4), 2),
        (p3.clone(), NestedSumSpec::row(4), 3),
        (
            p2,
            NestedSumSpec::new(
                vec![
                    SumBound::int(1),
                    SumBound::var(Var::new(1)),
                    SumBound::int(6),
                ],
                1,
            )
            .unwrap(),
            2,
        ),
    ];
    for (i, (p, spec, split)) in cases.iter().enumerate() {
        match merge_rule_check(p, spec, *split) {
            Ok(true) => {}
            Ok(false) => {
                return Check::failed(
                    name,
                    format!("case {i}: split at {split} differs"),
                )
            }
            Err(e) => return Check::failed(name, e.to_string()),
        }
    }
    Check::passed(name, "4 fixed cases".to_string())
}

fn merge_random_check(m: usize, cases: usize) -> Check {
    let name = format!("merge rule holds on random summands, {m} bounds");
    let mut rng = StdRng::seed_from_u64(0x5eed_0004 + m as u64);
    for case in 0..cases {
        let p = random_poly(&mut rng, m - 1, 2);
        let spec = NestedSumSpec::row(m);
        let split = rng.gen_range(2..=m - 1);
        match merge_rule_check(&p, &spec, split) {
            Ok(true) => {}
            Ok(false) => {
                return Check::failed(
                    name,
                    format!("case {case}: summand {p}, split {split}"),
                )
            }
            Err(e) => return Check::failed(name, e.to_string()),
        }
    }
    Check::passed(name, format!("{cases} random summands"))
}
