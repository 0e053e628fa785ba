//! Recursive-descent parser for the polynomial expression grammar:
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' NAT)?
//! atom   := INT ('/' INT)? | NAME | '(' expr ')'
//! NAME   := [a-zA-Z][a-zA-Z0-9_]*
//! ```
//!
//! Whitespace is insignificant. The optional leading sign and the `INT/INT`
//! literal exist so that every rendered polynomial parses back.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, Rational, VarRegistry};
use crate::error::{Error, Result};

pub fn parse_poly(text: &str, registry: &Arc<VarRegistry>) -> Result<Polynomial> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0, registry };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(Error::parse(parser.pos, format!("unexpected `{}`", parser.src[parser.pos] as char)));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    registry: &'a Arc<VarRegistry>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits().ok_or_else(|| Error::parse(start, "expected exponent"))?;
            let e: u32 = digits
                .parse()
                .map_err(|_| Error::parse(start, format!("exponent `{digits}` out of range")))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let start = match self.peek() {
            None => return Err(Error::parse(self.pos, "unexpected end of input")),
            Some(_) => self.pos,
        };
        let c = self.src[start];
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if !self.eat(b')') {
                return Err(Error::parse(self.pos, "expected `)`"));
            }
            Ok(inner)
        } else if c.is_ascii_digit() {
            let numer: BigInt = self.digits().expect("digit").parse().expect("digits");
            let mut value = Rational::from_integer(numer);
            if self.eat(b'/') {
                self.skip_ws();
                let at = self.pos;
                let denom: BigInt = self
                    .digits()
                    .ok_or_else(|| Error::parse(at, "expected denominator"))?
                    .parse()
                    .expect("digits");
                if denom.is_zero() {
                    return Err(Error::parse(at, "zero denominator"));
                }
                value /= Rational::from_integer(denom);
            }
            Ok(Polynomial::constant(self.registry, value))
        } else if c.is_ascii_alphabetic() {
            while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
            Polynomial::var(self.registry, name)
        } else {
            Err(Error::parse(start, format!("unexpected `{}`", c as char)))
        }
    }
}

/// Variable names in order of first appearance, for building a registry
/// from bare text.
pub fn scan_names(text: &str) -> Vec<String> {
    let bytes = text.as_bytes();
    let mut names: Vec<String> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = &text[start..i];
            if !names.iter().any(|n| n == name) {
                names.push(name.to_string());
            }
        } else if bytes[i].is_ascii_digit() {
            // skip the whole literal so `2x` style junk is caught by the parser, not here
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
        } else {
            i += 1;
        }
    }
    names
}
