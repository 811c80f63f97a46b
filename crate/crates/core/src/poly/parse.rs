//! Text form of polynomials.
//!
//! Grammar (whitespace ignored, no implicit multiplication):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | IDENT | '(' expr ')'
//! ```
//!
//! Identifiers resolve to ring variables, tower generators, or macros.
//! Macros are expanded textually (as a parenthesized token sequence) before
//! parsing, so `h` declared as `-x-y-z-w-t` behaves exactly like writing
//! `(-x-y-z-w-t)` in its place.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::arith::{ArithError, Field, FieldTower, Rational};

use super::{Poly, PolyRing, Ring, RingExt};
use crate::poly::MonomialOrder;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("malformed exponent at offset {0}")]
    MalformedExponent(usize),
    #[error("division is only allowed between integer literals (offset {0})")]
    Division(usize),
    #[error("unexpected `{found}` at offset {pos}")]
    Unexpected { pos: usize, found: String },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("invalid character `{ch}` at offset {pos}")]
    InvalidChar { pos: usize, ch: char },
    #[error("macro expansion of `{0}` is recursive")]
    RecursiveMacro(String),
    #[error("coefficient error: {0}")]
    Arith(#[from] ArithError),
    #[error("minimal polynomial of `{0}` must be univariate in its generator")]
    NotUnivariate(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => n.to_string(),
            Tok::Ident(s) => s.clone(),
            Tok::Plus => "+".into(),
            Tok::Minus => "-".into(),
            Tok::Star => "*".into(),
            Tok::Slash => "/".into(),
            Tok::Caret => "^".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
        }
    }
}

/// Named text substitutions applied before parsing, in declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Macros {
    defs: BTreeMap<String, String>,
}

impl Macros {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn define(&mut self, name: &str, body: &str) {
        self.defs.insert(name.to_string(), body.to_string());
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.defs.get(name).map(String::as_str)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.defs.keys().map(String::as_str)
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                out.push((start, Tok::Int(s.parse().unwrap())));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(bytes[start..i].iter().collect())));
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ch => return Err(ParseError::InvalidChar { pos: i, ch }),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

fn expand(
    tokens: Vec<(usize, Tok)>,
    macros: &Macros,
    stack: &mut Vec<String>,
) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::with_capacity(tokens.len());
    for (pos, tok) in tokens {
        match &tok {
            Tok::Ident(name) if macros.get(name).is_some() => {
                if stack.contains(name) {
                    return Err(ParseError::RecursiveMacro(name.clone()));
                }
                stack.push(name.clone());
                let body = lex(macros.get(name).unwrap())?;
                let body = expand(body, macros, stack)?;
                stack.pop();
                out.push((pos, Tok::LParen));
                out.extend(body.into_iter().map(|(_, t)| (pos, t)));
                out.push((pos, Tok::RParen));
            }
            _ => out.push((pos, tok)),
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a Ring<F>,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(usize::MAX, |(p, _)| *p)
    }

    fn unexpected(&self) -> ParseError {
        match self.toks.get(self.pos) {
            None => ParseError::UnexpectedEnd,
            Some((pos, t)) => ParseError::Unexpected {
                pos: *pos,
                found: t.describe(),
            },
        }
    }

    fn expr(&mut self) -> Result<Poly<F>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F>, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        if let Some(Tok::Slash) = self.peek() {
            return Err(ParseError::Division(self.offset()));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly<F>, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly<F>, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            let at = self.offset();
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Int(n)) => u32::try_from(n).map_err(|_| ParseError::MalformedExponent(at))?,
                _ => return Err(ParseError::MalformedExponent(at)),
            };
            self.pos += 1;
            if e > 255 {
                return Err(ParseError::MalformedExponent(at));
            }
            if let Some(Tok::Caret) = self.peek() {
                return Err(ParseError::MalformedExponent(self.offset()));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly<F>, ParseError> {
        let field = self.ring.field().clone();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut q = Rational::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    let at = self.offset();
                    self.pos += 1;
                    match self.peek() {
                        Some(Tok::Int(d)) if d != &BigInt::from(0) => {
                            q /= Rational::from_integer(d.clone());
                            self.pos += 1;
                        }
                        _ => return Err(ParseError::Division(at)),
                    }
                }
                Ok(self.ring.constant(field.from_rational(&q)?))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.ring.var_index(&name) {
                    Ok(self.ring.var(i))
                } else if let Some(g) = field.generator(&name) {
                    Ok(self.ring.constant(g))
                } else {
                    Err(ParseError::UnknownIdentifier(name))
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.unexpected()),
                }
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses `text` in `ring`.
pub fn parse_poly<F: Field>(text: &str, ring: &Ring<F>) -> Result<Poly<F>, ParseError> {
    parse_poly_with(text, ring, &Macros::default())
}

/// Parses `text` in `ring` after expanding `macros`.
pub fn parse_poly_with<F: Field>(
    text: &str,
    ring: &Ring<F>,
    macros: &Macros,
) -> Result<Poly<F>, ParseError> {
    let toks = expand(lex(text)?, macros, &mut Vec::new())?;
    let mut p = Parser { toks, pos: 0, ring };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(out)
}

/// Parses a constant expression (no ring variables) as a field element.
pub fn parse_element<F: Field>(text: &str, field: &F) -> Result<F::Elem, ParseError> {
    let ring = PolyRing::new(field.clone(), &[], MonomialOrder::DegRevLex)
        .expect("a ring without variables is always valid");
    Ok(parse_poly(text, &ring)?.coeff(&super::Monomial::one()))
}

/// Builds a tower from `(generator, minimal polynomial)` pairs; each minimal
/// polynomial is written in its own generator over the generators before it.
pub fn parse_tower(steps: &[(&str, &str)]) -> Result<FieldTower, ParseError> {
    let mut tower = FieldTower::rationals();
    for (name, text) in steps {
        let ring = PolyRing::new(tower.clone(), &[name], MonomialOrder::DegRevLex).map_err(
            |_| ParseError::Arith(ArithError::DuplicateGenerator(name.to_string())),
        )?;
        let f = parse_poly(text, &ring).map_err(|e| match e {
            ParseError::UnknownIdentifier(id) => {
                ParseError::Arith(ArithError::UndefinedGenerator(id))
            }
            other => other,
        })?;
        let deg = f.degree_in(0) as usize;
        let mut coeffs = vec![tower.zero(); deg + 1];
        for (m, c) in f.terms() {
            coeffs[m.exp(0) as usize] = c.clone();
        }
        tower = tower.extend(name, coeffs)?;
    }
    Ok(tower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;

    fn ring5() -> Ring<FieldTower> {
        let t = parse_tower(&[("r", "r^2 + 15")]).unwrap();
        PolyRing::new(t, &["x", "y", "z", "w", "t"], MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn zero_parses() {
        assert!(parse_poly("0", &ring5()).unwrap().is_zero());
    }

    #[test]
    fn igusa_quadric() {
        let r = ring5();
        let q = parse_poly("5*(x^2+y^2+z^2+w^2+t^2)-7*(x+y+z+w+t)^2", &r).unwrap();
        assert_eq!(q.homogeneous_degree().unwrap(), 2);
        assert_eq!(q.len(), 15);
    }

    #[test]
    fn unknown_identifier() {
        let r = PolyRing::new(PrimeField::new(7).unwrap(), &["x", "y"], MonomialOrder::DegRevLex)
            .unwrap();
        assert_eq!(
            parse_poly("q^2", &r).unwrap_err(),
            ParseError::UnknownIdentifier("q".into())
        );
    }

    #[test]
    fn malformed_inputs() {
        let r = ring5();
        assert!(matches!(parse_poly("x^y", &r), Err(ParseError::MalformedExponent(_))));
        assert!(matches!(parse_poly("x^-1", &r), Err(ParseError::MalformedExponent(_))));
        assert!(matches!(parse_poly("x/y", &r), Err(ParseError::Division(_))));
        assert!(matches!(parse_poly("1/(2)", &r), Err(ParseError::Division(_))));
        assert!(matches!(parse_poly("2 x", &r), Err(ParseError::Unexpected { .. })));
        assert!(matches!(parse_poly("(x", &r), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(parse_poly("x $ y", &r), Err(ParseError::InvalidChar { .. })));
    }

    #[test]
    fn rational_literals_and_generators() {
        let r = ring5();
        let f = parse_poly("(675/4802*r+334125/33614)*x*z", &r).unwrap();
        let g = parse_poly("675/4802*r*x*z + 334125/33614*x*z", &r).unwrap();
        assert_eq!(f, g);
        let rr = parse_poly("r*r", &r).unwrap();
        assert_eq!(rr, r.from_i64(-15));
    }

    #[test]
    fn macro_expansion_is_parenthesized() {
        let r = ring5();
        let mut m = Macros::new();
        m.define("h", "-x-y-z-w-t");
        let a = parse_poly_with("h^2", &r, &m).unwrap();
        let b = parse_poly("(x+y+z+w+t)^2", &r).unwrap();
        assert_eq!(a, b);
        m.define("k", "k+1");
        assert_eq!(
            parse_poly_with("k", &r, &m).unwrap_err(),
            ParseError::RecursiveMacro("k".into())
        );
    }

    #[test]
    fn tower_from_text() {
        let t = parse_tower(&[
            ("r", "r^2 + 15"),
            ("m", "m^2 - 95/42*m + 2855/2646"),
            (
                "n",
                "n^2 + 443889677/206391214080000*r - 46942774543/619173642240000",
            ),
        ])
        .unwrap();
        assert_eq!(t.degree(), 8);
        assert!(matches!(
            parse_tower(&[("r", "r^2 + s")]),
            Err(ParseError::Arith(ArithError::UndefinedGenerator(_)))
        ));
        assert!(matches!(
            parse_tower(&[("r", "2*r^2 + 1")]),
            Err(ParseError::Arith(ArithError::NotMonic(_)))
        ));
    }

    #[test]
    fn print_parse_roundtrip_over_tower() {
        let r = ring5();
        let f = parse_poly("(1/2*r - 3)*x^2*y - r*z + (r+1) - 7/3*t^4", &r).unwrap();
        let printed = f.to_string();
        assert_eq!(parse_poly(&printed, &r).unwrap(), f);
    }
}
