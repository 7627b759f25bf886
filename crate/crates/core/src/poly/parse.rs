//! Recursive-descent parser and printer for polynomial expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := '(' expr ')' | variable | uint
//! ```
//!
//! There is no implicit multiplication. Integer literals are reduced mod p.

use super::{Polynomial, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Uint(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    col: usize,
}

fn syntax(col: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        column: col,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<(Vec<Spanned>, usize)> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Spanned { tok, col });
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Uint(chars[start..i].iter().collect()),
                col,
            });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
            });
        } else {
            return Err(syntax(col, format!("unexpected character '{c}'")));
        }
    }
    Ok((out, chars.len() + 1))
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    end_col: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |s| s.col)
    }

    fn describe(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(Tok::Ident(s)) | Some(Tok::Uint(s)) => format!("'{s}'"),
            Some(t) => format!(
                "'{}'",
                match t {
                    Tok::Plus => "+",
                    Tok::Minus => "-",
                    Tok::Star => "*",
                    Tok::Caret => "^",
                    Tok::LParen => "(",
                    Tok::RParen => ")",
                    Tok::Comma => ",",
                    _ => unreachable!(),
                }
            ),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let col = self.col();
            match self.peek().cloned() {
                Some(Tok::Uint(digits)) => {
                    self.pos += 1;
                    let k: u32 = digits
                        .parse()
                        .map_err(|_| syntax(col, format!("exponent {digits} too large")))?;
                    return base.pow(k as u64);
                }
                _ => {
                    return Err(syntax(
                        col,
                        format!(
                            "exponent must be a nonnegative integer, found {}",
                            self.describe()
                        ),
                    ))
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(syntax(
                        self.col(),
                        format!("expected ')', found {}", self.describe()),
                    ));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                Ok(Polynomial::var(self.ring, i))
            }
            Some(Tok::Uint(digits)) => {
                self.pos += 1;
                let p = self.ring.p() as u64;
                let c = digits
                    .bytes()
                    .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(Polynomial::constant(self.ring, c as i64))
            }
            _ => Err(syntax(
                col,
                format!(
                    "expected a variable, integer or '(', found {}",
                    self.describe()
                ),
            )),
        }
    }
}

fn parser<'a>(text: &str, ring: &'a Ring) -> Result<Parser<'a>> {
    let (toks, end_col) = lex(text)?;
    Ok(Parser {
        toks,
        pos: 0,
        end_col,
        ring,
    })
}

/// Parses one polynomial expression over `ring`.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut p = parser(text, ring)?;
    let f = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.col(), format!("unexpected {}", p.describe())));
    }
    Ok(f)
}

/// Parses a comma-separated list of expressions.
pub fn parse_poly_list(text: &str, ring: &Ring) -> Result<Vec<Polynomial>> {
    let mut p = parser(text, ring)?;
    let mut out = vec![p.expr()?];
    while p.peek() == Some(&Tok::Comma) {
        p.pos += 1;
        out.push(p.expr()?);
    }
    if p.pos != p.toks.len() {
        return Err(syntax(p.col(), format!("unexpected {}", p.describe())));
    }
    Ok(out)
}

/// Prints a polynomial in the syntax accepted by [`parse_poly`].
pub fn format_poly(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let vars = f.ring().vars();
    let mut parts = Vec::with_capacity(f.len());
    for t in f.terms() {
        let mut factors: Vec<String> = Vec::new();
        let is_one = t.mono.is_one();
        if t.coeff != 1 || is_one {
            factors.push(t.coeff.to_string());
        }
        for (i, &e) in t.mono.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(vars[i].clone()),
                _ => factors.push(format!("{}^{}", vars[i], e)),
            }
        }
        parts.push(factors.join("*"));
    }
    parts.join(" + ")
}
