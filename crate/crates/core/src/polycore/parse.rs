//! Recursive-descent parser for polynomial text such as
//! `3/4*y^2*x - 15/17*x^4 + 1`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::Field;
use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let bytes: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < bytes.len() {
        let (pos, c) = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = bytes[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Token::Num(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].1.is_alphanumeric() || bytes[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Token::Ident(bytes[start..i].iter().map(|(_, c)| c).collect())));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Token::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                offset: pos,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a Ring<F>,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some((_, Token::Op(c))) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' {
                self.ring.add(&acc, &rhs)
            } else {
                self.ring.sub(&acc, &rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let at = self.offset();
            let rhs = self.unary()?;
            acc = if op == '*' {
                self.ring.mul(&acc, &rhs)
            } else {
                if !rhs.is_constant() {
                    return Err(Error::Parse {
                        offset: at,
                        message: "division by a non-constant".into(),
                    });
                }
                let inv = rhs
                    .lc()
                    .and_then(|c| self.ring.field().inv(c).ok())
                    .ok_or_else(|| Error::Parse {
                        offset: at,
                        message: "divisor vanishes in the coefficient field".into(),
                    })?;
                self.ring.scale(&inv, &acc)
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly<F>> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                let p = self.unary()?;
                Ok(self.ring.neg(&p))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly<F>> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some((_, Token::Num(n))) => {
                    let e: u32 = n.try_into().map_err(|_| self.error("exponent too large"))?;
                    self.pos += 1;
                    Ok(self.ring.pow(&base, e))
                }
                _ => Err(self.error("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly<F>> {
        let Some((_, tok)) = self.tokens.get(self.pos).cloned() else {
            return Err(self.error("unexpected end of input"));
        };
        match tok {
            Token::Num(n) => {
                self.pos += 1;
                let c = self
                    .ring
                    .field()
                    .from_rational(&BigRational::from_integer(n))?;
                Ok(self.ring.constant(c))
            }
            Token::Ident(name) => {
                let i = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| self.error(format!("unknown variable {name:?}")))?;
                self.pos += 1;
                Ok(self.ring.var(i))
            }
            Token::Op('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Token::Op(c) => Err(self.error(format!("unexpected {c:?}"))),
        }
    }
}

pub(crate) fn parse_poly<F: Field>(ring: &Ring<F>, text: &str) -> Result<Poly<F>> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            message: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        ring,
        tokens,
        pos: 0,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("trailing input"));
    }
    Ok(out)
}
