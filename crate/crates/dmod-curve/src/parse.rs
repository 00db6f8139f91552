//! A small expression parser for operators and CLI value syntax.
//!
//! Grammar, with the usual precedence:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' int)?
//! atom   := rational | 't' | 'd' | 'E' | '(' expr ')' | '-' factor
//! ```
//!
//! `t` may carry any integer exponent; `d` (the derivation ∂) and
//! parenthesized expressions only nonnegative ones. Rational literals are
//! written `p/q`.

use crate::error::{Error, Result};
use crate::opalgebra::LaurentWeylOperator;
use crate::rat::{rat, rint, Rat};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(i64),
    T,
    D,
    E,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n: i64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(d as i64))
                        .ok_or_else(|| Error::Parse("integer literal too large".into()))?;
                    chars.next();
                }
                out.push(Token::Num(n));
            }
            't' => {
                chars.next();
                out.push(Token::T);
            }
            'd' => {
                chars.next();
                out.push(Token::D);
            }
            'E' => {
                chars.next();
                out.push(Token::E);
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
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            other => {
                return Err(Error::Parse(format!("unexpected character '{}'", other)));
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

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.next() {
            Some(found) if found == t => Ok(()),
            found => Err(Error::Parse(format!("expected {:?}, found {:?}", t, found))),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        match self.next() {
            Some(Token::Num(n)) => Ok(n),
            Some(Token::Minus) => match self.next() {
                Some(Token::Num(n)) => Ok(-n),
                found => Err(Error::Parse(format!("expected integer, found {:?}", found))),
            },
            found => Err(Error::Parse(format!("expected integer, found {:?}", found))),
        }
    }

    fn expr(&mut self) -> Result<LaurentWeylOperator> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentWeylOperator> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.next();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentWeylOperator> {
        let base_token = self.peek().cloned();
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.next();
            let exp = self.integer()?;
            // only plain t supports negative exponents
            if matches!(base_token, Some(Token::T)) {
                return Ok(LaurentWeylOperator::t_pow(exp));
            }
            if exp < 0 {
                return Err(Error::Parse(format!(
                    "negative exponent {} only allowed on t",
                    exp
                )));
            }
            return Ok(base.pow(exp as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<LaurentWeylOperator> {
        match self.next() {
            Some(Token::Num(p)) => {
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.next();
                    match self.next() {
                        Some(Token::Num(q)) if q != 0 => {
                            Ok(LaurentWeylOperator::term(0, 0, rat(p, q)))
                        }
                        found => Err(Error::Parse(format!(
                            "expected nonzero denominator, found {:?}",
                            found
                        ))),
                    }
                } else {
                    Ok(LaurentWeylOperator::term(0, 0, rint(p)))
                }
            }
            Some(Token::T) => Ok(LaurentWeylOperator::t_pow(1)),
            Some(Token::D) => Ok(LaurentWeylOperator::d_pow(1)),
            Some(Token::E) => Ok(LaurentWeylOperator::euler()),
            Some(Token::Minus) => {
                let f = self.factor()?;
                Ok(-&f)
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            found => Err(Error::Parse(format!("unexpected token {:?}", found))),
        }
    }
}

/// Parse an operator expression like `E - 1/2`, `t*d^2`, or
/// `(E-1)*(E-2) + t^-1*E`.
pub fn parse_operator(input: &str) -> Result<LaurentWeylOperator> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let op = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            p.tokens[p.pos]
        )));
    }
    Ok(op)
}

/// Parse `lo..hi` into an inclusive window.
pub fn parse_window(input: &str) -> Result<(i64, i64)> {
    let (lo, hi) = input
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("window must be lo..hi, got '{}'", input)))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad window bound '{}'", lo)))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad window bound '{}'", hi)))?;
    if lo > hi {
        return Err(Error::Parse(format!("empty window {}..{}", lo, hi)));
    }
    Ok((lo, hi))
}

/// Parse a comma-separated list of rationals like `0,1/2,2/3`.
pub fn parse_rational_list(input: &str) -> Result<Vec<Rat>> {
    input
        .split(',')
        .map(|s| {
            crate::rat::parse(s).ok_or_else(|| Error::Parse(format!("bad rational '{}'", s)))
        })
        .collect()
}

/// Parse a comma-separated list of integers like `2,3`.
pub fn parse_int_list(input: &str) -> Result<Vec<i64>> {
    input
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer '{}'", s)))
        })
        .collect()
}
