//! Rational expressions in the variables `a` and `b`, used for lifting functions.

use crate::arith::{parse_rational, Rational};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse lifting {input:?} at offset {offset}: {message}")]
pub struct ExprError {
    pub input: String,
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Num(Rational),
    A,
    B,
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, u32),
}

/// A parsed expression such as `a^2+b^2+(a+b)^2+2a-7b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    source: String,
    root: Node,
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

struct Parser<'s> {
    src: &'s str,
    bytes: &'s [u8],
    pos: usize,
}

impl<'s> Parser<'s> {
    fn err(&self, message: &str) -> ExprError {
        ExprError {
            input: self.src.to_string(),
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if c == b'+' {
                Node::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Node::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    lhs = Node::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                // implicit multiplication: 2a, a(b+1), (a+b)(a-b)
                Some(c) if c == b'(' || c == b'a' || c == b'b' || c.is_ascii_digit() => {
                    lhs = Node::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Node::Neg(Box::new(self.unary()?)))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Node, ExprError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let exp: u32 = self.src[start..self.pos]
                .parse()
                .map_err(|_| self.err("expected a nonnegative integer exponent"))?;
            return Ok(Node::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'a') => {
                self.pos += 1;
                Ok(Node::A)
            }
            Some(b'b') => {
                self.pos += 1;
                Ok(Node::B)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_digit() || self.bytes[self.pos] == b'.')
                {
                    self.pos += 1;
                }
                let value = parse_rational(&self.src[start..self.pos])
                    .map_err(|_| self.err("bad number"))?;
                Ok(Node::Num(value))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Self, ExprError> {
        let mut p = Parser {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        };
        let root = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(Self {
            source: src.to_string(),
            root,
        })
    }

    /// Evaluates at `(a, b)`; `None` on division by zero.
    pub fn eval(&self, a: &Rational, b: &Rational) -> Option<Rational> {
        fn go(n: &Node, a: &Rational, b: &Rational) -> Option<Rational> {
            Some(match n {
                Node::Num(q) => q.clone(),
                Node::A => a.clone(),
                Node::B => b.clone(),
                Node::Neg(x) => -go(x, a, b)?,
                Node::Add(x, y) => go(x, a, b)? + go(y, a, b)?,
                Node::Sub(x, y) => go(x, a, b)? - go(y, a, b)?,
                Node::Mul(x, y) => go(x, a, b)? * go(y, a, b)?,
                Node::Div(x, y) => {
                    let d = go(y, a, b)?;
                    if d.is_zero() {
                        return None;
                    }
                    go(x, a, b)? / d
                }
                Node::Pow(x, e) => {
                    let base = go(x, a, b)?;
                    (0..*e).fold(Rational::one(), |acc, _| acc * &base)
                }
            })
        }
        go(&self.root, a, b)
    }
}
