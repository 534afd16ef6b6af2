//! Parsing of the canonical text forms.
//!
//! [`parse_poly`] reads the polynomial grammar that [`MultiPoly`]'s
//! `Display` emits (`"1/2*k1^2*k2 - 2/3"`); [`parse_operator`] reads the
//! operator grammar that [`ShiftOperator`]'s `Display` emits
//! (`"3/2 * E1^2 * E3^-1 + 1"`) plus `D<i>` sugar for the difference
//! `E<i> - 1`, which expands at parse time.  Both parsers ignore the amount
//! of whitespace between tokens, so every emitted string round-trips.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::operator::ShiftOperator;
use crate::poly::{MultiPoly, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Number(BigInt),
    /// A variable-like factor: `kind` is one of 'k', 'E', 'D'.
    Factor { kind: char, index: usize },
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Number(n) => n.to_string(),
            Token::Factor { kind, index } => format!("{kind}{index}"),
            Token::Plus => "+".into(),
            Token::Minus => "-".into(),
            Token::Star => "*".into(),
            Token::Caret => "^".into(),
            Token::Slash => "/".into(),
        }
    }
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let value = digits
                    .parse::<BigInt>()
                    .map_err(|_| Error::parse(&digits, "bad number"))?;
                out.push(Token::Number(value));
            }
            'k' | 'E' | 'D' => {
                chars.next();
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let index = digits.parse::<usize>().map_err(|_| {
                    Error::parse(
                        format!("{c}{digits}"),
                        "expected a variable index after the letter",
                    )
                })?;
                out.push(Token::Factor { kind: c, index });
            }
            other => {
                return Err(Error::parse(
                    other.to_string(),
                    "unexpected character",
                ))
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(t) => Error::parse(t.describe(), format!("expected {wanted}")),
            None => Error::parse("end of input", format!("expected {wanted}")),
        }
    }

    /// `digits` or `digits/digits`, already known to start with a number.
    fn rational(&mut self) -> Result<BigRational> {
        let numer = match self.next() {
            Some(Token::Number(n)) => n,
            _ => return Err(self.unexpected("a number")),
        };
        if self.eat(&Token::Slash) {
            match self.next() {
                Some(Token::Number(d)) if !d.is_zero() => {
                    Ok(BigRational::new(numer, d))
                }
                Some(Token::Number(_)) => {
                    Err(Error::parse("0", "zero denominator"))
                }
                _ => Err(self.unexpected("a denominator")),
            }
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    /// A `^`-clause; `signed` permits a leading minus on the exponent.
    fn exponent(&mut self, signed: bool) -> Result<i64> {
        let negative = signed && self.eat(&Token::Minus);
        match self.next() {
            Some(Token::Number(n)) => {
                let v: i64 = (&n)
                    .try_into()
                    .map_err(|_| Error::parse(n.to_string(), "exponent too large"))?;
                Ok(if negative { -v } else { v })
            }
            _ => Err(self.unexpected("an exponent")),
        }
    }
}

/// Parses the canonical polynomial form over variables `k1..k<nvars>`.
pub fn parse_poly(s: &str, nvars: usize) -> Result<MultiPoly> {
    let mut parser = Parser {
        tokens: tokenize(s)?,
        pos: 0,
    };
    if parser.at_end() {
        return Err(Error::parse(s, "empty polynomial"));
    }
    let mut acc = MultiPoly::zero(nvars);
    loop {
        let negative = if parser.eat(&Token::Minus) {
            true
        } else {
            parser.eat(&Token::Plus);
            false
        };
        let term = poly_term(&mut parser, nvars)?;
        if negative {
            acc += &-&term;
        } else {
            acc += &term;
        }
        if parser.at_end() {
            return Ok(acc);
        }
        match parser.peek() {
            Some(Token::Plus) | Some(Token::Minus) => continue,
            _ => return Err(parser.unexpected("'+' or '-' between terms")),
        }
    }
}

fn poly_term(parser: &mut Parser, nvars: usize) -> Result<MultiPoly> {
    let mut coeff = BigRational::one();
    if matches!(parser.peek(), Some(Token::Number(_))) {
        coeff = parser.rational()?;
        if !parser.eat(&Token::Star) {
            return Ok(MultiPoly::constant(nvars, coeff));
        }
    }
    let mut exps = vec![0u16; nvars];
    loop {
        match parser.next() {
            Some(Token::Factor { kind: 'k', index }) => {
                if index < 1 || index > nvars {
                    return Err(Error::parse(
                        format!("k{index}"),
                        format!("variable index out of range 1..={nvars}"),
                    ));
                }
                let exp = if parser.eat(&Token::Caret) {
                    let e = parser.exponent(false)?;
                    u16::try_from(e).map_err(|_| {
                        Error::parse(e.to_string(), "exponent out of range")
                    })?
                } else {
                    1
                };
                exps[index - 1] =
                    exps[index - 1].checked_add(exp).ok_or_else(|| {
                        Error::parse(exp.to_string(), "exponent out of range")
                    })?;
            }
            _ => return Err(parser.unexpected("a variable factor like k1")),
        }
        if !parser.eat(&Token::Star) {
            break;
        }
    }
    Ok(MultiPoly::monomial(nvars, &exps, coeff))
}

/// Parses the canonical operator form over variables `k1..k<nvars>`:
/// sums of terms `coeff * E1^a * E2^b ...` where exponents may be negative.
/// `D<i>` abbreviates the difference `E<i> - 1` and is multiplied out here,
/// so the result is a plain sum of shifts.
pub fn parse_operator(s: &str, nvars: usize) -> Result<ShiftOperator> {
    let mut parser = Parser {
        tokens: tokenize(s)?,
        pos: 0,
    };
    if parser.at_end() {
        return Err(Error::parse(s, "empty operator"));
    }
    let mut acc = ShiftOperator::zero(nvars);
    loop {
        let negative = if parser.eat(&Token::Minus) {
            true
        } else {
            parser.eat(&Token::Plus);
            false
        };
        let term = operator_term(&mut parser, nvars)?;
        acc = if negative { &acc - &term } else { &acc + &term };
        if parser.at_end() {
            return Ok(acc);
        }
        match parser.peek() {
            Some(Token::Plus) | Some(Token::Minus) => continue,
            _ => return Err(parser.unexpected("'+' or '-' between terms")),
        }
    }
}

fn operator_term(parser: &mut Parser, nvars: usize) -> Result<ShiftOperator> {
    let mut coeff = BigRational::one();
    if matches!(parser.peek(), Some(Token::Number(_))) {
        coeff = parser.rational()?;
        if !parser.eat(&Token::Star) {
            return Ok(ShiftOperator::identity(nvars).scale(&coeff));
        }
    }
    let mut acc = ShiftOperator::identity(nvars).scale(&coeff);
    loop {
        match parser.next() {
            Some(Token::Factor { kind, index }) if kind == 'E' || kind == 'D' => {
                if index < 1 || index > nvars {
                    return Err(Error::parse(
                        format!("{kind}{index}"),
                        format!("variable index out of range 1..={nvars}"),
                    ));
                }
                let v = Var::new(index);
                if kind == 'E' {
                    let exp = if parser.eat(&Token::Caret) {
                        parser.exponent(true)?
                    } else {
                        1
                    };
                    let exp = i32::try_from(exp).map_err(|_| {
                        Error::parse(exp.to_string(), "shift out of range")
                    })?;
                    acc = &acc * &ShiftOperator::shift(nvars, v, exp);
                } else {
                    let exp = if parser.eat(&Token::Caret) {
                        parser.exponent(false)?
                    } else {
                        1
                    };
                    for _ in 0..exp {
                        acc = &acc * &ShiftOperator::delta(nvars, v);
                    }
                }
            }
            _ => {
                return Err(parser.unexpected("an operator factor like E1 or D1"))
            }
        }
        if !parser.eat(&Token::Star) {
            break;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{rat, rat_int};
    use proptest::prelude::*;

    #[test]
    fn parses_constants() {
        assert_eq!(parse_poly("0", 2).unwrap(), MultiPoly::zero(2));
        assert_eq!(parse_poly("7", 1).unwrap(), MultiPoly::from_int(1, 7));
        assert_eq!(
            parse_poly("2/3", 1).unwrap(),
            MultiPoly::constant(1, rat(2, 3))
        );
        assert_eq!(parse_poly("-4", 1).unwrap(), MultiPoly::from_int(1, -4));
    }

    #[test]
    fn parses_known_forms() {
        let p = parse_poly("k2 - k1 + 1", 2).unwrap();
        assert_eq!(p.to_string(), "k2 - k1 + 1");
        let g = parse_poly("-k1^2 + 3*k1 - 1", 1).unwrap();
        assert_eq!(g.coeff(&[2]), rat_int(-1));
        assert_eq!(g.coeff(&[1]), rat_int(3));
        assert_eq!(g.coeff(&[0]), rat_int(-1));
        let q = parse_poly("1/2*k1^2*k2 - 2/3", 2).unwrap();
        assert_eq!(q.coeff(&[2, 1]), rat(1, 2));
        assert_eq!(q.coeff(&[0, 0]), rat(-2, 3));
        assert_eq!(q.to_string(), "1/2*k1^2*k2 - 2/3");
    }

    #[test]
    fn whitespace_is_flexible() {
        let reference = parse_poly("k2 - k1 + 1", 2).unwrap();
        assert_eq!(parse_poly("k2-k1+1", 2).unwrap(), reference);
        assert_eq!(parse_poly("  k2  -  k1  +  1  ", 2).unwrap(), reference);
        assert_eq!(
            parse_poly("1/2 * k1 ^ 2", 2).unwrap(),
            parse_poly("1/2*k1^2", 2).unwrap()
        );
    }

    #[test]
    fn accepts_unsorted_and_repeated_factors() {
        assert_eq!(
            parse_poly("1 - k1 + k2", 2).unwrap(),
            parse_poly("k2 - k1 + 1", 2).unwrap()
        );
        assert_eq!(
            parse_poly("k1*k1", 1).unwrap(),
            parse_poly("k1^2", 1).unwrap()
        );
    }

    #[test]
    fn rejects_malformed_polynomials() {
        for bad in [
            "", "k3", "k", "1 +", "k1 k2", "2x", "1//2", "k1^-2", "k1^", "*k1",
            "1 & 2", "k1^70000",
        ] {
            assert!(parse_poly(bad, 2).is_err(), "{bad:?}");
        }
        let err = parse_poly("k5 + 1", 2).unwrap_err();
        assert!(err.to_string().contains("k5"), "{err}");
    }

    #[test]
    fn parses_operators() {
        assert_eq!(
            parse_operator("1", 2).unwrap(),
            ShiftOperator::identity(2)
        );
        assert_eq!(parse_operator("0", 2).unwrap(), ShiftOperator::zero(2));
        assert_eq!(
            parse_operator("E1", 2).unwrap(),
            ShiftOperator::shift(2, Var::new(1), 1)
        );
        let t = parse_operator("3/2 * E1^2 * E3^-1", 3).unwrap();
        assert_eq!(t.num_terms(), 1);
        assert_eq!(t.coeff(&[2, 0, -1]), rat(3, 2));
        assert_eq!(t.to_string(), "3/2 * E1^2 * E3^-1");
    }

    #[test]
    fn difference_sugar_expands() {
        assert_eq!(
            parse_operator("D2", 2).unwrap(),
            ShiftOperator::delta(2, Var::new(2))
        );
        let squared = parse_operator("D1^2", 1).unwrap();
        assert_eq!(
            squared,
            parse_operator("E1^2 - 2*E1 + 1", 1).unwrap()
        );
        let composed = parse_operator("1 + E1 * D2", 2).unwrap();
        let by_hand = &ShiftOperator::identity(2)
            + &(&ShiftOperator::shift(2, Var::new(1), 1)
                * &ShiftOperator::delta(2, Var::new(2)));
        assert_eq!(composed, by_hand);
    }

    #[test]
    fn rejects_malformed_operators() {
        for bad in ["", "E", "E0", "E3", "D1^-1", "E1 E2", "k1", "1 *"] {
            assert!(parse_operator(bad, 2).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn poly_grammar_rejects_operator_factors() {
        assert!(parse_poly("E1 + 1", 2).is_err());
        assert!(parse_poly("D1", 2).is_err());
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
        let term = (
            proptest::collection::vec(0u16..4, nvars),
            -9i64..9,
            1i64..5,
        );
        proptest::collection::vec(term, 0..6).prop_map(move |terms| {
            let mut p = MultiPoly::zero(nvars);
            for (exps, numer, denom) in terms {
                p += &MultiPoly::monomial(nvars, &exps, rat(numer, denom));
            }
            p
        })
    }

    fn arb_operator(nvars: usize) -> impl Strategy<Value = ShiftOperator> {
        let term = (
            proptest::collection::vec(-3i32..4, nvars),
            -9i64..9,
            1i64..5,
        );
        proptest::collection::vec(term, 0..5).prop_map(move |terms| {
            let mut acc = ShiftOperator::zero(nvars);
            for (offsets, numer, denom) in terms {
                acc = &acc
                    + &ShiftOperator::term(nvars, &offsets, rat(numer, denom));
            }
            acc
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn poly_display_round_trips(p in arb_poly(3)) {
            let text = p.to_string();
            prop_assert_eq!(parse_poly(&text, 3).unwrap(), p);
        }

        #[test]
        fn operator_display_round_trips(op in arb_operator(3)) {
            let text = op.to_string();
            prop_assert_eq!(parse_operator(&text, 3).unwrap(), op);
        }
    }
}
