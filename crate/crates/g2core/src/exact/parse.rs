//! Recursive-descent parser for polynomial expressions such as
//! `3/2*a^2 - (a + b)*c`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::param::Param;
use super::poly::Poly;
use super::Rational;
use crate::error::{AlgebraError, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let err = |reason: &str| AlgebraError::Parse { input: src.to_string(), reason: reason.to_string() };
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().map_err(|_| err("bad integer"))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(err(&format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: &str) -> AlgebraError {
        AlgebraError::Parse { input: self.src.to_string(), reason: reason.to_string() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                let c = d.as_constant().ok_or_else(|| self.err("division by a non-constant"))?;
                if c.is_zero() {
                    return Err(self.err("division by zero"));
                }
                acc = acc.scale(&(Rational::from_integer(1.into()) / c));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("exponent must be a non-negative integer")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Poly::var(name.parse::<Param>()?))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing `)`"));
                }
                Ok(inner)
            }
            _ => Err(self.err("expected a number, parameter or `(`")),
        }
    }
}

/// Parses a polynomial in the fixed parameters.
pub fn parse_poly(src: &str) -> Result<Poly> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(AlgebraError::Parse { input: src.to_string(), reason: "empty expression".into() });
    }
    let mut p = Parser { src, toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

impl std::str::FromStr for Poly {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        for src in ["0", "7/2", "a^2 - b^2", "-3/2*a*b + 5", "x^3*y - 49*c^2"] {
            let p = parse_poly(src).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p, "{src}");
        }
        assert_eq!(parse_poly("(a+b)*(a-b)").unwrap().to_string(), "a^2 - b^2");
        assert_eq!(parse_poly("-(3*a + b)/2").unwrap().to_string(), "-3/2*a - 1/2*b");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("a +").is_err());
        assert!(parse_poly("w").is_err());
        assert!(parse_poly("1/a").is_err());
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("").is_err());
    }
}
