//! Parser for symbol-ring expressions.
//!
//! Accepts the textual form the renderer emits: integers, fractions,
//! named symbols, `q` and `u`, with `+ - * / ^` and parentheses.
//! `q^(k/2)` is the only fractional power allowed (it is `u^k`).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::One;

use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
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

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                toks.push((start, Tok::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(src[start..i].to_string())));
            }
            _ => {
                return Err(Error::Schema(format!(
                    "unexpected character '{c}' at byte {i} in expression '{src}'"
                )))
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    lx: Lexer<'a>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.lx.toks.get(self.pos).map(|(_, t)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.lx.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.lx
            .toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.lx.src.len())
    }

    fn fail(&self, msg: &str) -> Error {
        Error::Schema(format!(
            "parse error at byte {} in expression '{}': {}",
            self.here(),
            self.lx.src,
            msg
        ))
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.next();
                    let rhs = self.unary()?;
                    acc = acc
                        .div(&rhs)
                        .map_err(|_| self.fail("division by zero"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            let exp = self.exponent()?;
            return self.pow_scalar(&base, &exp);
        }
        Ok(base)
    }

    fn pow_scalar(&self, base: &Scalar, exp: &BigRational) -> Result<Scalar> {
        if exp.denom().is_one() {
            let k: i64 = exp
                .numer()
                .try_into()
                .map_err(|_| self.fail("exponent out of range"))?;
            return base.pow(k).map_err(|_| self.fail("zero raised to a negative power"));
        }
        if *exp.denom() == BigInt::from(2) && base == &Scalar::q() {
            let k: i64 = exp
                .numer()
                .try_into()
                .map_err(|_| self.fail("exponent out of range"))?;
            return Ok(Scalar::u_pow(k));
        }
        Err(self.fail("fractional exponents are only allowed as q^(k/2)"))
    }

    fn exponent(&mut self) -> Result<BigRational> {
        let mut sign = BigInt::one();
        let parenthesized = matches!(self.peek(), Some(Tok::LParen));
        if parenthesized {
            self.next();
        }
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            sign = -sign;
        }
        let numer = match self.next() {
            Some(Tok::Int(n)) => n,
            _ => return Err(self.fail("expected an integer exponent")),
        };
        let mut denom = BigInt::one();
        if parenthesized {
            if matches!(self.peek(), Some(Tok::Slash)) {
                self.next();
                denom = match self.next() {
                    Some(Tok::Int(n)) => n,
                    _ => return Err(self.fail("expected a denominator")),
                };
            }
            match self.next() {
                Some(Tok::RParen) => {}
                _ => return Err(self.fail("expected ')'")),
            }
        }
        Ok(BigRational::new(sign * numer, denom))
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Scalar::from_rational(BigRational::from_integer(n))),
            Some(Tok::Ident(name)) => match name.as_str() {
                "q" => Ok(Scalar::q()),
                "u" => Ok(Scalar::u()),
                _ => Scalar::symbol(&name)
                    .map_err(|e| Error::Schema(format!("{e} (in expression '{}')", self.lx.src))),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.fail("expected ')'")),
                }
            }
            _ => Err(self.fail("expected a value")),
        }
    }
}

/// Parse a symbol-ring expression into an exact scalar.
pub fn parse_scalar(src: &str) -> Result<Scalar> {
    let toks = lex(src)?;
    let mut p = Parser {
        lx: Lexer { src, toks },
        pos: 0,
    };
    let value = p.expr()?;
    if p.pos != p.lx.toks.len() {
        return Err(p.fail("trailing input"));
    }
    Ok(value)
}

/// Parse a rational number (used for twists and exponents in schemas).
pub fn parse_rational(src: &str) -> Result<BigRational> {
    let s = src.trim();
    let (sign, rest) = match s.strip_prefix('-') {
        Some(r) => (-BigInt::one(), r),
        None => (BigInt::one(), s),
    };
    let mut parts = rest.splitn(2, '/');
    let numer: BigInt = parts
        .next()
        .unwrap_or("")
        .trim()
        .parse()
        .map_err(|_| Error::Schema(format!("invalid rational '{src}'")))?;
    let denom: BigInt = match parts.next() {
        Some(d) => d
            .trim()
            .parse()
            .map_err(|_| Error::Schema(format!("invalid rational '{src}'")))?,
        None => BigInt::one(),
    };
    if denom == BigInt::from(0) {
        return Err(Error::Schema(format!("zero denominator in '{src}'")));
    }
    Ok(BigRational::new(sign * numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_expressions() {
        assert_eq!(parse_scalar("3/2").unwrap(), {
            Scalar::from_rational(BigRational::new(BigInt::from(3), BigInt::from(2)))
        });
        assert_eq!(parse_scalar("q").unwrap(), Scalar::q());
        assert_eq!(parse_scalar("u^2").unwrap(), Scalar::q());
        assert_eq!(parse_scalar("q^(1/2)").unwrap(), Scalar::u());
        assert_eq!(parse_scalar("q^(-1/2)").unwrap(), Scalar::u_pow(-1));
        assert_eq!(parse_scalar("q^-1").unwrap(), Scalar::q_pow(-1));
    }

    #[test]
    fn respects_precedence() {
        let a = Scalar::symbol("pp_a").unwrap();
        let b = Scalar::symbol("pp_b").unwrap();
        let v = parse_scalar("1 - 2*pp_a*pp_b^2").unwrap();
        let expect = Scalar::one().sub(
            &Scalar::from_int(2)
                .mul(&a)
                .mul(&b.pow(2).unwrap()),
        );
        assert_eq!(v, expect);
    }

    #[test]
    fn roundtrips_rendered_scalars() {
        let a = Scalar::symbol("rt_a").unwrap();
        let v = Scalar::q_pow(-2)
            .mul(&a)
            .sub(&Scalar::u_pow(3))
            .div(&a.add(&Scalar::from_int(5)))
            .unwrap();
        let text = v.to_string();
        assert_eq!(parse_scalar(&text).unwrap(), v);
    }

    #[test]
    fn rejects_reserved_and_malformed() {
        assert!(parse_scalar("X + 1").is_err());
        assert!(parse_scalar("2 +").is_err());
        assert!(parse_scalar("a^(1/3)").is_err());
        let err = parse_scalar("a $ b").unwrap_err();
        let msg = format!("{err}");
        assert!(msg.contains("byte 2"), "unexpected message: {msg}");
    }
}
