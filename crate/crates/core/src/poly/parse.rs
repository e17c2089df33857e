//! Text grammar shared by scalars and polynomials:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := ("+" | "-") unary | power
//! power  := atom ("^" natural)?
//! atom   := integer | identifier | "(" expr ")"
//! ```
//!
//! Identifiers resolve to ring variables, the extension generator, or the
//! parameters of a rational function field. Division is only allowed by
//! nonzero constants. Whitespace is insignificant; `−` is accepted for `-`.

use num_bigint::BigInt;

use super::{Polynomial, Ring};
use crate::error::{Error, Result};
use crate::field::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            tokens.push(Token::Int(s.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_alphanumeric() || d == '_' || d == '\'' {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            tokens.push(Token::Ident(s));
        } else {
            let op = match c {
                '−' | '–' => '-',
                '·' => '*',
                '+' | '-' | '*' | '/' | '^' | '(' | ')' => c,
                _ => return Err(Error::Parse(format!("unexpected character '{c}'"))),
            };
            tokens.push(Token::Op(op));
            chars.next();
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' {
                &acc * &rhs
            } else {
                if !rhs.is_constant() {
                    return Err(Error::Parse("division by a non-constant".into()));
                }
                let c = rhs.constant_coefficient();
                if c.is_zero() {
                    return Err(Error::Parse("division by zero".into()));
                }
                acc.scale(&c.inv().map_err(|_| Error::Parse("division by a zero divisor".into()))?)
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse("expected a natural exponent after '^'".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Token::Int(n)) => Ok(self.ring.constant(self.ring.field().from_bigint(&n))),
            Some(Token::Ident(name)) => self.identifier(&name),
            Some(Token::Op('(')) => {
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }

    fn identifier(&self, name: &str) -> Result<Polynomial> {
        if let Some(i) = self.ring.index_of(name) {
            return Ok(self.ring.var(i));
        }
        let field = self.ring.field();
        if field.generator_name() == Some(name) {
            return Ok(self.ring.constant(field.generator().expect("extension")));
        }
        if let Some(params) = field.parameters() {
            if params.index_of(name).is_some() {
                let p = params.parse(name)?;
                let r = crate::ratfun::RationalFunction::from_polynomial(p);
                return Ok(self.ring.constant(Scalar::Function(r)));
            }
        }
        Err(Error::Parse(format!("unknown identifier '{name}'")))
    }
}

pub(super) fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { tokens, pos: 0, ring };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input in '{text}'")));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use crate::field::Field;
    use crate::poly::Ring;

    #[test]
    fn precedence() {
        let r = Ring::new(Field::rationals(), vec!["x".into(), "y".into()]).unwrap();
        let p = r.parse("-x^2 + 2*x*y - (y - 1)^2/2").unwrap();
        let q = r.parse("-1*x*x + 2*y*x - 1/2*y^2 + y - 1/2").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_bad_input() {
        let r = Ring::new(Field::rationals(), vec!["x".into()]).unwrap();
        for bad in ["x +", "x / x", "1/0", "z", "x^y", "(x", "x $ 1", ""] {
            assert!(r.parse(bad).is_err(), "{bad}");
        }
    }
}
