//! Tiny expression grammar for covariant combinations.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' UINT)?
//! atom   := INT | NAME | 'T' '(' expr ',' expr ',' UINT ')'
//!         | '(' expr ')' | '-' atom
//! ```
//!
//! Names resolve against the named covariants of the chosen base degree
//! (`F`, `H`, `i`, `A`, `FF6`); `T(a, b, r)` is the `r`-th transvectant.
//! Integer literals act as scalars.

use std::collections::BTreeMap;
use std::iter::Peekable;

use crl_core::covariants::{transvectant, Covariant};
use crl_core::polyring::Rat;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Name(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn tokenize(input: &str) -> Result<Vec<Token>, String> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            ',' => {
                chars.next();
                tokens.push(Token::Comma);
            }
            '0'..='9' => {
                let mut num = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        num.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let value: i64 = num.parse().map_err(|_| format!("integer {num} too large"))?;
                tokens.push(Token::Int(value));
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Name(name));
            }
            other => return Err(format!("unexpected character '{other}'")),
        }
    }
    Ok(tokens)
}

/// Either a bare scalar or a covariant; scalars multiply covariants but
/// cannot be added to them.
#[derive(Debug, Clone)]
enum Value {
    Scalar(Rat),
    Cov(Covariant),
}

impl Value {
    fn mul(self, other: Value) -> Result<Value, String> {
        Ok(match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a * b),
            (Value::Scalar(a), Value::Cov(c)) | (Value::Cov(c), Value::Scalar(a)) => {
                Value::Cov(c.scaled(&a))
            }
            (Value::Cov(a), Value::Cov(b)) => Value::Cov(a.mul(&b).map_err(|e| e.to_string())?),
        })
    }

    fn add(self, other: Value, subtract: bool) -> Result<Value, String> {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => {
                Ok(Value::Scalar(if subtract { a - b } else { a + b }))
            }
            (Value::Cov(a), Value::Cov(b)) => {
                let result = if subtract { a.try_sub(&b) } else { a.try_add(&b) };
                result.map(Value::Cov).map_err(|e| e.to_string())
            }
            _ => Err("cannot add a scalar to a covariant".to_string()),
        }
    }

    fn neg(self) -> Value {
        match self {
            Value::Scalar(a) => Value::Scalar(-a),
            Value::Cov(c) => Value::Cov(c.scaled(&-Rat::from_integer(1.into()))),
        }
    }

    fn pow(self, n: u32) -> Value {
        match self {
            Value::Scalar(a) => {
                let mut acc = Rat::from_integer(1.into());
                for _ in 0..n {
                    acc *= a.clone();
                }
                Value::Scalar(acc)
            }
            Value::Cov(c) => Value::Cov(c.pow(n)),
        }
    }
}

struct Parser<'a> {
    tokens: Peekable<std::vec::IntoIter<Token>>,
    names: &'a BTreeMap<String, Covariant>,
}

impl<'a> Parser<'a> {
    fn expr(&mut self) -> Result<Value, String> {
        let mut acc = if matches!(self.tokens.peek(), Some(Token::Minus)) {
            self.tokens.next();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.tokens.peek() {
                Some(Token::Plus) => {
                    self.tokens.next();
                    acc = acc.add(self.term()?, false)?;
                }
                Some(Token::Minus) => {
                    self.tokens.next();
                    acc = acc.add(self.term()?, true)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value, String> {
        let mut acc = self.factor()?;
        while matches!(self.tokens.peek(), Some(Token::Star)) {
            self.tokens.next();
            acc = acc.mul(self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value, String> {
        let base = self.atom()?;
        if matches!(self.tokens.peek(), Some(Token::Caret)) {
            self.tokens.next();
            let n = self.uint()?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Value, String> {
        match self.tokens.next() {
            Some(Token::Int(v)) => Ok(Value::Scalar(Rat::from_integer(v.into()))),
            Some(Token::Name(name)) if name == "T" => {
                self.expect(Token::LParen)?;
                let a = self.covariant_arg()?;
                self.expect(Token::Comma)?;
                let b = self.covariant_arg()?;
                self.expect(Token::Comma)?;
                let r = self.uint()?;
                self.expect(Token::RParen)?;
                transvectant(&a, &b, r).map(Value::Cov).map_err(|e| e.to_string())
            }
            Some(Token::Name(name)) => self
                .names
                .get(&name)
                .cloned()
                .map(Value::Cov)
                .ok_or_else(|| format!("unknown covariant name '{name}'")),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Some(Token::Minus) => Ok(self.atom()?.neg()),
            other => Err(format!("expected a value, found {other:?}")),
        }
    }

    fn covariant_arg(&mut self) -> Result<Covariant, String> {
        match self.expr()? {
            Value::Cov(c) => Ok(c),
            Value::Scalar(_) => Err("transvectant arguments must be covariants".to_string()),
        }
    }

    fn uint(&mut self) -> Result<u32, String> {
        match self.tokens.next() {
            Some(Token::Int(v)) if v >= 0 => {
                u32::try_from(v).map_err(|_| format!("exponent {v} too large"))
            }
            other => Err(format!("expected a nonnegative integer, found {other:?}")),
        }
    }

    fn expect(&mut self, token: Token) -> Result<(), String> {
        match self.tokens.next() {
            Some(t) if t == token => Ok(()),
            other => Err(format!("expected {token:?}, found {other:?}")),
        }
    }
}

/// Parse an expression against the named covariants of one base degree.
/// The result must have a covariant part (pure scalars are rejected).
pub fn parse_covariant_expr(
    input: &str,
    names: &BTreeMap<String, Covariant>,
) -> Result<Covariant, String> {
    let tokens = tokenize(input)?;
    let mut parser = Parser { tokens: tokens.into_iter().peekable(), names };
    let value = parser.expr()?;
    if let Some(extra) = parser.tokens.next() {
        return Err(format!("unexpected trailing token {extra:?}"));
    }
    match value {
        Value::Cov(c) => Ok(c),
        Value::Scalar(_) => Err("expression has no covariant part".to_string()),
    }
}
