//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := ['-'] base ('^' nat)?
//! base     := var | rational | '(' expr ')'
//! rational := nat ('/' nat)?
//! ```
//!
//! Implicit multiplication (`2x`) is rejected; every product needs `*`.

use crate::polynomial::{Polynomial, Variables};
use crate::rational::Rat;
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(text: &'a str) -> Result<Vec<(usize, Tok)>, ParseError> {
        let mut lx = Lexer {
            src: text.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while lx.pos < lx.src.len() {
            let start = lx.pos;
            let c = lx.src[lx.pos];
            match c {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    lx.pos += 1;
                }
                b'+' => out.push((start, lx.single(Tok::Plus))),
                b'-' => out.push((start, lx.single(Tok::Minus))),
                b'*' => out.push((start, lx.single(Tok::Star))),
                b'^' => out.push((start, lx.single(Tok::Caret))),
                b'/' => out.push((start, lx.single(Tok::Slash))),
                b'(' => out.push((start, lx.single(Tok::LParen))),
                b')' => out.push((start, lx.single(Tok::RParen))),
                b'0'..=b'9' => {
                    while lx.pos < lx.src.len() && lx.src[lx.pos].is_ascii_digit() {
                        lx.pos += 1;
                    }
                    let digits = std::str::from_utf8(&lx.src[start..lx.pos]).unwrap();
                    out.push((start, Tok::Number(digits.parse().unwrap())));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while lx.pos < lx.src.len()
                        && (lx.src[lx.pos].is_ascii_alphanumeric() || lx.src[lx.pos] == b'_')
                    {
                        lx.pos += 1;
                    }
                    let name = std::str::from_utf8(&lx.src[start..lx.pos]).unwrap();
                    out.push((start, Tok::Ident(name.to_string())));
                }
                other => {
                    return Err(ParseError::Syntax {
                        pos: start,
                        message: format!("unexpected character `{}`", other as char),
                    })
                }
            }
        }
        Ok(out)
    }

    fn single(&mut self, t: Tok) -> Tok {
        self.pos += 1;
        t
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    vars: &'a Variables,
    end: usize,
}

/// Parses `text` into a canonical [`Polynomial`] over `vars`.
pub fn parse_polynomial(text: &str, vars: &Variables) -> Result<Polynomial, ParseError> {
    let toks = Lexer::tokens(text)?;
    let mut p = Parser {
        toks,
        idx: 0,
        vars,
        end: text.len(),
    };
    let poly = p.expr()?;
    if let Some((pos, tok)) = p.peek_at() {
        return Err(ParseError::Syntax {
            pos,
            message: format!("unexpected `{}`", describe(&tok)),
        });
    }
    Ok(poly)
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => s.clone(),
        Tok::Number(n) => n.to_string(),
        Tok::Plus => "+".into(),
        Tok::Minus => "-".into(),
        Tok::Star => "*".into(),
        Tok::Caret => "^".into(),
        Tok::Slash => "/".into(),
        Tok::LParen => "(".into(),
        Tok::RParen => ")".into(),
    }
}

impl<'a> Parser<'a> {
    fn peek_at(&self) -> Option<(usize, Tok)> {
        self.toks.get(self.idx).cloned()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            got => Err(ParseError::Syntax {
                pos,
                message: format!(
                    "expected `{}`{}",
                    describe(&want),
                    match got {
                        Some(t) => format!(", found `{}`", describe(&t)),
                        None => ", found end of input".into(),
                    }
                ),
            }),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            let f = self.factor()?;
            return Ok(-&f);
        }
        let base = self.base()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Number(n)) => {
                    let exp = u32::try_from(&n).map_err(|_| ParseError::Syntax {
                        pos,
                        message: format!("exponent {n} too large"),
                    })?;
                    Ok(base.pow(exp))
                }
                got => Err(ParseError::Syntax {
                    pos,
                    message: format!(
                        "expected exponent{}",
                        match got {
                            Some(t) => format!(", found `{}`", describe(&t)),
                            None => ", found end of input".into(),
                        }
                    ),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Ident(name)) => match self.vars.index_of(&name) {
                Some(i) => Ok(Polynomial::variable(self.vars, i).unwrap()),
                None => Err(ParseError::UnknownVariable { pos, name }),
            },
            Some(Tok::Number(numer)) => {
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Number(denom)) => {
                            if denom.is_zero() {
                                return Err(ParseError::Syntax {
                                    pos: dpos,
                                    message: "denominator must be positive".into(),
                                });
                            }
                            Ok(Polynomial::constant(self.vars, Rat::new(numer, denom)))
                        }
                        got => Err(ParseError::Syntax {
                            pos: dpos,
                            message: format!(
                                "expected denominator{}",
                                match got {
                                    Some(t) => format!(", found `{}`", describe(&t)),
                                    None => ", found end of input".into(),
                                }
                            ),
                        }),
                    }
                } else {
                    Ok(Polynomial::constant(self.vars, Rat::from_integer(numer)))
                }
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            got => Err(ParseError::Syntax {
                pos,
                message: format!(
                    "expected a variable, number, or `(`{}",
                    match got {
                        Some(t) => format!(", found `{}`", describe(&t)),
                        None => ", found end of input".into(),
                    }
                ),
            }),
        }
    }
}
