//! Text syntax for relations, group-algebra vectors and operad definitions.
//!
//! ```text
//! relation := side ['=' side]
//! side     := ['+'|'-'] term (('+'|'-') term)*
//! term     := [rational ['*']] monomial | '0'
//! monomial := '(' var ['*'] var ')' ['*'] var
//!           | var ['*'] '(' var ['*'] var ')'
//!           | 'A(' var ',' var ',' var ')'
//!           | 'm1' | 'm2' | 'm3'
//! rational := integer ['/' positive-integer]
//! var      := x | y | z | x1 | x2 | x3
//! ```
//!
//! `A(a,b,c)` is the associator `(a*b)*c - a*(b*c)`. The `*` between factors
//! may be omitted, so `x(yz) = (xy)z` is accepted.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::group::{GroupVector, Perm3};
use crate::linalg::{fmt_rational, Rational};
use crate::operad::{PresentationPair, QuadraticOperad, RelationModule};
use crate::weight::{Monomial3, SymmetryClass, Weight3Element};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Comma,
    Equals,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Equals => f.write_str("`=`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

/// Identifier lexing: relations split `xy` into two variables, while
/// group vectors read whole words such as `Id` or `t12`.
#[derive(Clone, Copy, PartialEq, Eq)]
enum IdentMode {
    LetterDigits,
    Word,
}

fn lex(text: &str, mode: IdentMode) -> std::result::Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, column);
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' | '·' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Equals),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token {
                tok,
                line,
                column,
            });
            i += 1;
            column += 1;
            continue;
        }
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Token {
                tok: Tok::Num(s.parse().expect("ascii digits")),
                line: start_line,
                column: start_col,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            i += 1;
            match mode {
                IdentMode::LetterDigits => {
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                IdentMode::Word => {
                    while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                        i += 1;
                    }
                }
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Token {
                tok: Tok::Ident(s),
                line: start_line,
                column: start_col,
            });
            continue;
        }
        return Err(ParseError {
            line,
            column,
            message: format!("unexpected character `{c}`"),
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let t = &self.tokens[self.pos];
        ParseError {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    fn error_at(&self, t: &Token, message: impl Into<String>) -> ParseError {
        ParseError {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    fn expect(&mut self, tok: Tok) -> std::result::Result<(), ParseError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.error_here(format!("expected {tok}, found {}", self.peek())))
        }
    }

    fn skip_star(&mut self) {
        if *self.peek() == Tok::Star {
            self.next();
        }
    }

    fn rational(&mut self) -> std::result::Result<Rational, ParseError> {
        let t = self.next();
        let Tok::Num(n) = t.tok.clone() else {
            return Err(self.error_at(&t, format!("expected a number, found {}", t.tok)));
        };
        if *self.peek() == Tok::Slash {
            self.next();
            let d = self.next();
            match d.tok.clone() {
                Tok::Num(d_val) if !d_val.is_zero() => Ok(Rational::new(n, d_val)),
                Tok::Num(_) => Err(self.error_at(&d, "zero denominator")),
                other => Err(self.error_at(&d, format!("expected a denominator, found {other}"))),
            }
        } else {
            Ok(Rational::from_integer(n))
        }
    }
}

/// A term's monomial before it is placed in a weight-3 space.
enum Factor {
    Regular(Weight3Element),
    Comb(usize),
}

fn variable(p: &mut Parser) -> std::result::Result<u8, ParseError> {
    let t = p.next();
    match &t.tok {
        Tok::Ident(s) => match s.as_str() {
            "x" | "x1" => Ok(1),
            "y" | "x2" => Ok(2),
            "z" | "x3" => Ok(3),
            _ => Err(p.error_at(&t, format!("unknown variable `{s}`"))),
        },
        other => Err(p.error_at(&t, format!("expected a variable, found {other}"))),
    }
}

fn distinct(p: &Parser, start: &Token, labels: [u8; 3]) -> std::result::Result<[u8; 3], ParseError> {
    if labels[0] == labels[1] || labels[1] == labels[2] || labels[0] == labels[2] {
        Err(p.error_at(start, "repeated variable in monomial"))
    } else {
        Ok(labels)
    }
}

fn factor(p: &mut Parser) -> std::result::Result<Factor, ParseError> {
    let start = p.tokens[p.pos].clone();
    match p.peek().clone() {
        Tok::LParen => {
            p.next();
            let a = variable(p)?;
            p.skip_star();
            let b = variable(p)?;
            p.expect(Tok::RParen)?;
            p.skip_star();
            let c = variable(p)?;
            let labels = distinct(p, &start, [a, b, c])?;
            reject_deeper(p)?;
            Ok(Factor::Regular(Weight3Element::monomial(Monomial3::left(labels))))
        }
        Tok::Ident(s) if s == "A" && *p.peek_at(1) == Tok::LParen => {
            p.next();
            p.next();
            let a = variable(p)?;
            p.expect(Tok::Comma)?;
            let b = variable(p)?;
            p.expect(Tok::Comma)?;
            let c = variable(p)?;
            p.expect(Tok::RParen)?;
            let labels = distinct(p, &start, [a, b, c])?;
            Ok(Factor::Regular(Weight3Element::associator(labels)))
        }
        Tok::Ident(s) if matches!(s.as_str(), "m1" | "m2" | "m3") => {
            p.next();
            Ok(Factor::Comb(s[1..].parse::<usize>().unwrap() - 1))
        }
        Tok::Ident(_) => {
            let a = variable(p)?;
            p.skip_star();
            p.expect(Tok::LParen)?;
            let b = variable(p)?;
            p.skip_star();
            let c = variable(p)?;
            p.expect(Tok::RParen)?;
            let labels = distinct(p, &start, [a, b, c])?;
            reject_deeper(p)?;
            Ok(Factor::Regular(Weight3Element::monomial(Monomial3::right(labels))))
        }
        other => Err(p.error_here(format!("expected a monomial, found {other}"))),
    }
}

fn reject_deeper(p: &Parser) -> std::result::Result<(), ParseError> {
    match p.peek() {
        Tok::Star | Tok::LParen | Tok::Ident(_) => {
            Err(p.error_here("products of more than three variables are not quadratic relations"))
        }
        _ => Ok(()),
    }
}

#[derive(Default)]
struct Accum {
    regular: Option<Weight3Element>,
    comb: [Rational; 3],
    has_comb: bool,
}

impl Accum {
    fn add(&mut self, coeff: &Rational, f: Factor) {
        match f {
            Factor::Regular(x) => {
                let x = x.scale(coeff);
                self.regular = Some(match self.regular.take() {
                    Some(acc) => &acc + &x,
                    None => x,
                });
            }
            Factor::Comb(i) => {
                self.comb[i] += coeff;
                self.has_comb = true;
            }
        }
    }
}

fn side(p: &mut Parser, sign: &Rational, acc: &mut Accum) -> std::result::Result<(), ParseError> {
    let mut negate = false;
    match p.peek() {
        Tok::Minus => {
            p.next();
            negate = true;
        }
        Tok::Plus => {
            p.next();
        }
        _ => {}
    }
    loop {
        let mut coeff = if negate { -sign.clone() } else { sign.clone() };
        if matches!(p.peek(), Tok::Num(_)) {
            let start = p.tokens[p.pos].clone();
            let c = p.rational()?;
            if matches!(p.peek(), Tok::Plus | Tok::Minus | Tok::Equals | Tok::End) {
                if !c.is_zero() {
                    return Err(p.error_at(&start, "constant terms are not allowed"));
                }
                coeff = Rational::zero();
            } else {
                p.skip_star();
                coeff *= c;
                let f = factor(p)?;
                acc.add(&coeff, f);
            }
        } else {
            let f = factor(p)?;
            acc.add(&coeff, f);
        }
        match p.peek() {
            Tok::Plus => {
                p.next();
                negate = false;
            }
            Tok::Minus => {
                p.next();
                negate = true;
            }
            _ => return Ok(()),
        }
    }
}

/// Parses a relation into the weight-3 space of `symmetry`. Regular
/// monomials are projected when `symmetry` is commutative or
/// anticommutative; comb monomials are only valid there.
pub fn parse_element(text: &str, symmetry: SymmetryClass) -> Result<Weight3Element, ParseError> {
    let tokens = lex(text, IdentMode::LetterDigits)?;
    let mut p = Parser { tokens, pos: 0 };
    let mut acc = Accum::default();
    side(&mut p, &Rational::one(), &mut acc)?;
    if *p.peek() == Tok::Equals {
        p.next();
        side(&mut p, &-Rational::one(), &mut acc)?;
    }
    if *p.peek() != Tok::End {
        return Err(p.error_here(format!("unexpected {}", p.peek())));
    }
    let end = p.tokens[p.pos].clone();
    let regular = acc
        .regular
        .unwrap_or_else(|| Weight3Element::zero(SymmetryClass::Regular));
    match symmetry {
        SymmetryClass::Regular => {
            if acc.has_comb {
                return Err(p.error_at(&end, "comb monomials m1..m3 need a commutative or anticommutative operation"));
            }
            Ok(regular)
        }
        sym => {
            let projected = regular.project(sym).expect("regular input");
            let comb = Weight3Element::from_coords(sym, acc.comb.to_vec()).expect("three coordinates");
            Ok(&projected + &comb)
        }
    }
}

/// Parses a relation in the 12-dimensional regular space.
pub fn parse_relation(text: &str) -> Result<Weight3Element, ParseError> {
    parse_element(text, SymmetryClass::Regular)
}

/// Parses `3*Id - t23 - c1 + t12 + c2` style group-algebra vectors.
pub fn parse_group_vector(text: &str) -> Result<GroupVector, ParseError> {
    let tokens = lex(text, IdentMode::Word)?;
    let mut p = Parser { tokens, pos: 0 };
    let mut coeffs: [Rational; 6] = std::array::from_fn(|_| Rational::zero());
    let mut negate = false;
    match p.peek() {
        Tok::Minus => {
            p.next();
            negate = true;
        }
        Tok::Plus => {
            p.next();
        }
        _ => {}
    }
    loop {
        let mut coeff = if negate { -Rational::one() } else { Rational::one() };
        let mut constant_zero = false;
        if matches!(p.peek(), Tok::Num(_)) {
            let start = p.tokens[p.pos].clone();
            let c = p.rational()?;
            if matches!(p.peek(), Tok::Plus | Tok::Minus | Tok::End) {
                if !c.is_zero() {
                    return Err(p.error_at(&start, "malformed coefficient: missing permutation"));
                }
                constant_zero = true;
            } else {
                p.skip_star();
            }
            coeff *= c;
        }
        if !constant_zero {
            let t = p.next();
            match &t.tok {
                Tok::Ident(name) => match Perm3::from_name(name) {
                    Some(g) => coeffs[g.index()] += coeff,
                    None => return Err(p.error_at(&t, format!("unknown permutation `{name}`"))),
                },
                other => return Err(p.error_at(&t, format!("expected a permutation, found {other}"))),
            }
        }
        match p.peek() {
            Tok::Plus => {
                p.next();
                negate = false;
            }
            Tok::Minus => {
                p.next();
                negate = true;
            }
            Tok::End => break,
            other => return Err(p.error_here(format!("unexpected {other}"))),
        }
    }
    Ok(GroupVector::from_coeffs(coeffs))
}

fn format_terms<'a>(terms: impl Iterator<Item = (&'a Rational, String)>) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&fmt_rational(&abs));
            out.push('*');
        }
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text: monomials in basis order, `(x1*x2)*x3` or `m1` style.
pub fn format_element(x: &Weight3Element) -> String {
    let sym = x.symmetry();
    format_terms(x.coords().iter().enumerate().map(|(i, c)| {
        let name = match sym {
            SymmetryClass::Regular => Monomial3::from_index(i).text(),
            _ => format!("m{}", i + 1),
        };
        (c, name)
    }))
}

pub fn format_group_vector(v: &GroupVector) -> String {
    format_terms(
        Perm3::ALL
            .iter()
            .map(|g| (v.coeff(*g), g.name().to_string())),
    )
}

impl fmt::Display for GroupVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_group_vector(self))
    }
}

impl fmt::Display for Weight3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self))
    }
}

impl From<GroupVector> for String {
    fn from(v: GroupVector) -> String {
        format_group_vector(&v)
    }
}

impl TryFrom<String> for GroupVector {
    type Error = ParseError;
    fn try_from(s: String) -> Result<GroupVector, ParseError> {
        parse_group_vector(&s)
    }
}

/// An operad definition as read from a file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperadDefinition {
    pub name: String,
    pub symmetry: SymmetryClass,
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<Vec<PresentationText>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationText {
    pub v: String,
    pub w: String,
}

impl OperadDefinition {
    /// Reads JSON (leading `{`) or the line format
    ///
    /// ```text
    /// name: leib
    /// symmetry: regular
    /// relation: x*(y*z) - (x*y)*z + (x*z)*y
    /// presentation: Id - t23 ; Id
    /// ```
    pub fn from_text(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            return Ok(serde_json::from_str(text)?);
        }
        let mut name = None;
        let mut symmetry = SymmetryClass::Regular;
        let mut relations = Vec::new();
        let mut presentation: Option<Vec<PresentationText>> = None;
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: String| {
                Error::Parse(ParseError {
                    line: n + 1,
                    column: 1,
                    message: msg,
                })
            };
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| bad(format!("expected `key: value`, found `{line}`")))?;
            let value = value.trim();
            match key.trim() {
                "name" => name = Some(value.to_string()),
                "symmetry" => {
                    symmetry = SymmetryClass::from_keyword(value)
                        .ok_or_else(|| bad(format!("unknown symmetry `{value}`")))?
                }
                "relation" => relations.push(value.to_string()),
                "presentation" => {
                    let (v, w) = value
                        .split_once(';')
                        .ok_or_else(|| bad("presentation needs `v ; w`".into()))?;
                    presentation.get_or_insert_with(Vec::new).push(PresentationText {
                        v: v.trim().to_string(),
                        w: w.trim().to_string(),
                    });
                }
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        Ok(OperadDefinition {
            name: name.unwrap_or_else(|| "custom".into()),
            symmetry,
            relations,
            presentation,
        })
    }

    pub fn build(&self) -> Result<QuadraticOperad> {
        let gens = self
            .relations
            .iter()
            .map(|r| parse_element(r, self.symmetry))
            .collect::<Result<Vec<_>, _>>()?;
        match &self.presentation {
            Some(pres) => {
                let pairs = pres
                    .iter()
                    .map(|p| Ok(PresentationPair::new(parse_group_vector(&p.v)?, parse_group_vector(&p.w)?)))
                    .collect::<Result<Vec<_>>>()?;
                let relations = if gens.is_empty() {
                    let pgens: Vec<_> = pairs.iter().map(|p| p.relation_in(self.symmetry)).collect();
                    RelationModule::orbit_span(self.symmetry, &pgens)?
                } else {
                    RelationModule::orbit_span(self.symmetry, &gens)?
                };
                QuadraticOperad::new(Some(self.name.clone()), relations, Some(pairs))
            }
            None => QuadraticOperad::from_generators(&self.name, self.symmetry, &gens),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::weight::decompose_lr;

    fn mono_l(l: [u8; 3]) -> Weight3Element {
        Weight3Element::monomial(Monomial3::left(l))
    }
    fn mono_r(l: [u8; 3]) -> Weight3Element {
        Weight3Element::monomial(Monomial3::right(l))
    }

    #[test]
    fn parses_associator() {
        let x = parse_relation("(x*y)*z - x*(y*z)").unwrap();
        assert_eq!(x, Weight3Element::associator([1, 2, 3]));
        assert_eq!(parse_relation("A(x1,x2,x3)").unwrap(), x);
        assert_eq!(parse_relation("(xy)z = x(yz)").unwrap(), x);
    }

    #[test]
    fn parses_leibniz() {
        let x = parse_relation("x*(y*z) - (x*y)*z + (x*z)*y").unwrap();
        let (v, w) = decompose_lr(&x).unwrap();
        // the text carries the opposite overall sign of Ψ^L − Ψ^R
        assert_eq!(-&v, parse_group_vector("Id - t23").unwrap());
        assert_eq!(-&w, GroupVector::identity());
    }

    #[test]
    fn parses_poisson_identity() {
        let x = parse_relation("3*A(x,y,z) - (x*z)*y - (y*z)*x + (y*x)*z + (z*x)*y").unwrap();
        let expected = &(&(&(&(&mono_l([1, 2, 3]).scale(&rat(3)) - &mono_r([1, 2, 3]).scale(&rat(3)))
            - &mono_l([1, 3, 2]))
            - &mono_l([2, 3, 1]))
            + &mono_l([2, 1, 3]))
            + &mono_l([3, 1, 2]);
        assert_eq!(x, expected);
    }

    #[test]
    fn parses_group_vectors() {
        assert_eq!(parse_group_vector("Id").unwrap(), GroupVector::identity());
        assert_eq!(
            parse_group_vector("Id - t12 - t23 - t13 + c1 + c2").unwrap(),
            GroupVector::alternating()
        );
        assert_eq!(
            parse_group_vector("3*Id - t23 - c1 + t12 + c2").unwrap(),
            GroupVector::from_ints([3, 1, 0, -1, -1, 1])
        );
        assert_eq!(parse_group_vector("1/2 t12").unwrap().coeff(Perm3::T12), &crate::linalg::ratio(1, 2));
        assert!(parse_group_vector("0").unwrap().is_zero());
    }

    #[test]
    fn group_vector_errors() {
        let e = parse_group_vector("Id + t14").unwrap_err();
        assert_eq!((e.line, e.column), (1, 6));
        assert!(e.message.contains("unknown permutation"));
        assert!(parse_group_vector("3 + Id").is_err());
        assert!(parse_group_vector("1/0*Id").is_err());
    }

    #[test]
    fn relation_errors_are_positioned() {
        let e = parse_relation("(x*x)*z").unwrap_err();
        assert!(e.message.contains("repeated"));
        let e = parse_relation("(x*y)*w").unwrap_err();
        assert_eq!((e.line, e.column), (1, 7));
        assert!(e.message.contains("unknown variable"));
        let e = parse_relation("(x*y)*z +\n  x*(y*").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_relation("((x*y)*z)*x").is_err());
        assert!(parse_relation("(x*y)*z*x").is_err());
        assert!(parse_relation("2").is_err());
        assert!(parse_relation("m1 - m2").is_err());
    }

    #[test]
    fn zero_and_comb_terms() {
        assert!(parse_relation("0").unwrap().is_zero());
        assert_eq!(
            parse_relation("x(yz) - (xy)z = 0").unwrap(),
            -&Weight3Element::associator([1, 2, 3])
        );
        let com = SymmetryClass::Commutative;
        let x = parse_element("m1 - m2", com).unwrap();
        assert_eq!(x, parse_element("(x*y)*z - x*(y*z)", com).unwrap());
    }

    #[test]
    fn printing_round_trips() {
        let x = parse_relation("-1/2*(x1*x3)*x2 + 3*x2*(x1*x3) - A(x,y,z)").unwrap();
        assert_eq!(parse_relation(&format_element(&x)).unwrap(), x);
        assert_eq!(format_element(&Weight3Element::associator([1, 2, 3])), "(x1*x2)*x3 - x1*(x2*x3)");
        let v = parse_group_vector("3*Id - t23 - c1 + t12 + c2").unwrap();
        assert_eq!(format_group_vector(&v), "3*Id + t12 - t23 - c1 + c2");
        assert_eq!(parse_group_vector(&v.to_string()).unwrap(), v);
    }

    #[test]
    fn line_format_definition() {
        let text = "# Leibniz\nname: leib\nsymmetry: regular\nrelation: x*(y*z) - (x*y)*z + (x*z)*y\n";
        let op = OperadDefinition::from_text(text).unwrap().build().unwrap();
        assert_eq!(op.name(), "leib");
        assert_eq!(op.relations().dim(), 6);
        let bad = OperadDefinition::from_text("symmetry: sideways\n");
        assert!(bad.is_err());
    }

    #[test]
    fn json_definition_with_presentation() {
        let text = r#"{"name": "lie", "symmetry": "anticomm",
            "relations": ["x*(y*z) + y*(z*x) + z*(x*y)"],
            "presentation": [{"v": "Id + c1 + c2", "w": "Id + c1 + c2"}]}"#;
        let op = OperadDefinition::from_text(text).unwrap().build().unwrap();
        assert_eq!(op.symmetry(), SymmetryClass::Anticommutative);
        assert_eq!(op.relations().dim(), 1);
        assert_eq!(op.presentation().unwrap().len(), 1);
    }
}
